//! End-to-end decoders against exhaustive search.

mod common;

use common::*;
use grs_core::decoder::{decode_bmd, find_y_roots, find_y_roots_exhaustive, list_decode, list_decode_with, params_for, DecodeParams};
use grs_core::oracle::{exhaustive_decode, nearest_codewords, verify_interpolation};
use grs_core::poly::{BiPoly, UniPoly};
use grs_core::{Error, Fe, Field, FieldSpec, GrsCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn bmd_agrees_with_nearest_codeword_search() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let w = rng.gen_range(0..=6);
        let msg = random_message(&mut rng, &code);
        let c = code.encode(&msg).unwrap();
        let r = plant(&mut rng, &code, &c, w);
        let out = decode_bmd(&code, &r).unwrap();
        let (best, nearest) = nearest_codewords(&code, &r).unwrap();
        assert_eq!(best, w);
        assert_eq!(nearest.len(), 1);
        assert_eq!(out.codeword, nearest[0].codeword);
        assert_eq!(out.message, msg);
        assert_eq!(out.error_positions.len(), w);
    }
}

#[test]
fn bmd_never_returns_a_far_codeword() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let c = code.encode(&random_message(&mut rng, &code)).unwrap();
        let w = rng.gen_range(7..=10);
        let r = plant(&mut rng, &code, &c, w);
        match decode_bmd(&code, &r) {
            Ok(out) => {
                assert!(out.error_positions.len() <= 6);
                assert_eq!(code.encode(&out.message).unwrap(), out.codeword);
            }
            Err(e) => assert!(matches!(e, Error::DecodeFailure(_))),
        }
    }
}

#[test]
fn bmd_on_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for trial in 0..100 {
        let f = gf([17u32, 19, 32, 64][trial % 4]);
        let n = rng.gen_range(3..(f.order() as usize).min(30));
        let k = rng.gen_range(1..n);
        let code = random_code(&mut rng, &f, n, k);
        let c = code.encode(&random_message(&mut rng, &code)).unwrap();
        let w = rng.gen_range(0..=(n - k) / 2);
        let r = plant(&mut rng, &code, &c, w);
        assert_eq!(decode_bmd(&code, &r).unwrap().codeword, c);
    }
}

fn planted_list_trial(rng: &mut ChaCha8Rng, code: &GrsCode, params: &DecodeParams, w: usize) {
    let msg = random_message(rng, code);
    let c = code.encode(&msg).unwrap();
    let r = plant(rng, code, &c, w);
    let out = list_decode_with(code, &r, params).unwrap();
    assert_eq!(verify_interpolation(code, &r, params, &out.q), Ok(()));
    assert!(out.contains(&msg));
    assert!(out.q.div_y_minus(&msg).1.is_zero());
    for cand in &out.candidates {
        assert!(cand.distance <= params.tau);
        assert_eq!(code.encode(&cand.message).unwrap(), cand.codeword);
    }
}

#[test]
fn list_decoding_planted_reference_radii() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for tau in [6, 7, 8] {
        let p = params_for(&code, tau).unwrap();
        for _ in 0..40 {
            planted_list_trial(&mut rng, &code, &p, tau);
        }
    }
}

#[test]
fn list_decoding_planted_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let mut done = 0;
    while done < 60 {
        let f = gf([17u32, 19, 32][done % 3]);
        let n = rng.gen_range(4..=(f.order() as usize - 1).min(20));
        let k = rng.gen_range(1..n);
        let code = random_code(&mut rng, &f, n, k);
        let feasible: Vec<DecodeParams> =
            (0..n).filter_map(|t| params_for(&code, t).ok()).filter(|p| p.s <= 3).collect();
        let Some(p) = feasible.last() else { continue };
        planted_list_trial(&mut rng, &code, p, p.tau);
        done += 1;
    }
}

#[test]
fn list_output_matches_exhaustive_search() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for tau in [7, 8] {
        for _ in 0..4 {
            let c = code.encode(&random_message(&mut rng, &code)).unwrap();
            let r = plant(&mut rng, &code, &c, tau);
            let got = list_decode(&code, &r, tau).unwrap();
            let want = exhaustive_decode(&code, &r, tau).unwrap();
            let mut a: Vec<_> = got.candidates.iter().map(|c| c.codeword.clone()).collect();
            let mut b: Vec<_> = want.iter().map(|c| c.codeword.clone()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn list_and_bmd_agree_within_half_distance() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..60 {
        let c = code.encode(&random_message(&mut rng, &code)).unwrap();
        let w = rng.gen_range(0..=6);
        let r = plant(&mut rng, &code, &c, w);
        let bmd = decode_bmd(&code, &r).unwrap();
        for tau in [6, 7, 8] {
            let list = list_decode(&code, &r, tau).unwrap();
            assert_eq!(list.candidates[0].codeword, bmd.codeword);
        }
    }
}

#[test]
fn lists_grow_with_the_radius() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(38);
    let p7 = DecodeParams::new(&code, 2, 4, 7).unwrap();
    let p8 = DecodeParams::new(&code, 2, 4, 8).unwrap();
    for _ in 0..30 {
        let r = if rng.gen_bool(0.5) {
            random_word(&mut rng, &code)
        } else {
            let c = code.encode(&random_message(&mut rng, &code)).unwrap();
            plant(&mut rng, &code, &c, 7)
        };
        let small = list_decode_with(&code, &r, &p7).unwrap();
        let large = list_decode_with(&code, &r, &p8).unwrap();
        for cand in &small.candidates {
            assert!(large.contains(&cand.message));
        }
    }
}

#[test]
fn y_roots_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(39);
    for trial in 0..60 {
        let f = match trial % 3 {
            0 => gf(11),
            1 => gf(13),
            _ => Field::new(FieldSpec::extension(2, 4, vec![1, 1, 0, 0, 1])).unwrap(),
        };
        let k = rng.gen_range(1..=3);
        let poly = |rng: &mut ChaCha8Rng| UniPoly::from_coeffs(&f, (0..k).map(|_| random_elem(rng, &f)).collect());
        // product of a few (y − f_i) factors times a random x-polynomial factor
        let mut q = BiPoly::from_rows(&f, vec![poly(&mut rng).shift(trial % 2)]);
        if q.is_zero() {
            q = BiPoly::monomial(&f, 0, 0, Fe::ONE);
        }
        for _ in 0..rng.gen_range(0..4) {
            q = q.mul(&BiPoly::y_minus(&poly(&mut rng)));
        }
        if rng.gen_bool(0.3) {
            // an irreducible-looking extra factor y^2 − x
            let extra = BiPoly::monomial(&f, 0, 2, Fe::ONE).sub(&BiPoly::monomial(&f, 1, 0, Fe::ONE));
            q = q.mul(&extra);
        }
        assert_eq!(find_y_roots(&q, k), find_y_roots_exhaustive(&q, k).unwrap());
    }
}

#[test]
fn exhaustive_rejects_large_codes() {
    let f = gf(64);
    let code = GrsCode::primitive(&f, 5).unwrap();
    let r = vec![Fe::ZERO; code.n()];
    assert!(matches!(exhaustive_decode(&code, &r, 3), Err(Error::TooLarge(_))));
}
