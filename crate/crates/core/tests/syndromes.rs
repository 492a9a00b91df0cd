//! Syndrome computations checked against closed forms and structural laws.

mod common;

use common::*;
use grs_core::fia::OrderV;
use grs_core::poly::BiPoly;
use grs_core::syndromes::{classical_syndromes, classical_syndromes_via_series, gs_syndromes, sudan_syndromes};
use grs_core::{Fe, GrsCode, SyndromeSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_setup(rng: &mut ChaCha8Rng) -> (GrsCode, Vec<Fe>) {
    let q = [17u32, 19, 32][rng.gen_range(0..3)];
    let f = gf(q);
    let n = rng.gen_range(3..q.min(21) as usize);
    let k = rng.gen_range(1..n);
    let code = random_code(rng, &f, n, k);
    let r = random_word(rng, &code);
    (code, r)
}

#[test]
fn classical_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (code, r) = random_setup(&mut rng);
        assert_eq!(classical_syndromes(&code, &r).unwrap(), classical_syndromes_via_series(&code, &r).unwrap());
    }
}

/// `Σ_j υ_j r_j^t / υ'_j^(t−1) · α_j^i`.
fn closed_form(code: &GrsCode, r: &[Fe], t: usize, i: usize) -> Fe {
    let f = code.field();
    f.sum((0..code.n()).map(|j| {
        let vp = code.vprimes()[j];
        let scale = if t == 0 { vp } else { f.div(Fe::ONE, f.pow(vp, t as u64 - 1)).unwrap() };
        let term = f.mul(code.v_dual()[j], f.mul(f.pow(r[j], t as u64), scale));
        f.mul(term, f.pow(code.alphas()[j], i as u64))
    }))
}

#[test]
fn sudan_syndromes_match_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 100 {
        let (code, r) = random_setup(&mut rng);
        let (n, k) = (code.n(), code.k());
        let tau = rng.gen_range(0..n);
        let ell = rng.gen_range(0..4);
        let Ok(set) = sudan_syndromes(&code, &r, ell, tau) else { continue };
        checked += 1;
        for t in 0..=ell {
            let seq = set.block(0, t);
            assert_eq!(seq.len(), n + n - tau - t * (k - 1));
            for (i, &s) in seq.iter().enumerate() {
                assert_eq!(s, closed_form(&code, &r, t, i), "t={t} i={i}");
            }
        }
    }
}

#[test]
fn codeword_syndromes_vanish_in_the_top_band() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let (code, _) = random_setup(&mut rng);
        let c = code.encode(&random_message(&mut rng, &code)).unwrap();
        assert!(classical_syndromes(&code, &c).unwrap().is_zero());
    }
}

fn hankel_law_holds(set: &SyndromeSet) {
    for b in 0..set.multiplicity() {
        for t in 0..set.bounds().len() {
            for i in 0..set.band_rows(b) {
                for j in 0..set.bounds()[t] {
                    let e = set.hankel_entry(b, t, i, j).unwrap();
                    if t < b {
                        assert!(e.is_zero());
                    }
                    if i + 1 < set.band_rows(b) && j >= 1 {
                        assert_eq!(e, set.hankel_entry(b, t, i + 1, j - 1).unwrap());
                    }
                }
            }
        }
    }
}

fn random_gs_set(rng: &mut ChaCha8Rng) -> Option<(GrsCode, SyndromeSet)> {
    let (code, r) = random_setup(rng);
    let s = rng.gen_range(1..=3);
    let ell = s + rng.gen_range(0..3);
    let tau = rng.gen_range(0..code.n());
    gs_syndromes(&code, &r, s, ell, tau).ok().map(|set| (code, set))
}

#[test]
fn every_block_is_hankel() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut seen = 0;
    while seen < 60 {
        if let Some((_, set)) = random_gs_set(&mut rng) {
            hankel_law_holds(&set);
            seen += 1;
        }
    }
}

fn random_bipoly(rng: &mut ChaCha8Rng, set: &SyndromeSet, slack: usize) -> BiPoly {
    let f = set.field();
    let rows = set
        .bounds()
        .iter()
        .map(|&nt| {
            let len = nt.saturating_sub(slack);
            grs_core::UniPoly::from_coeffs(f, (0..len).map(|_| random_elem(rng, f)).collect())
        })
        .collect();
    BiPoly::from_rows(f, rows)
}

#[test]
fn horizontal_shift_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut seen = 0;
    while seen < 60 {
        let (code, r) = random_setup(&mut rng);
        let tau = rng.gen_range(0..code.n());
        let Ok(set) = sudan_syndromes(&code, &r, rng.gen_range(0..4), tau) else { continue };
        seen += 1;
        let t = random_bipoly(&mut rng, &set, 1);
        for i in 0..set.n() - 1 {
            assert_eq!(set.inner(0, i, &t.shift_x(1)), set.inner(0, i + 1, &t));
        }
    }
}

#[test]
fn block_shift_identity_along_row_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut seen = 0;
    while seen < 60 {
        let Some((_, set)) = random_gs_set(&mut rng) else { continue };
        seen += 1;
        let t = random_bipoly(&mut rng, &set, 1);
        let xt = t.shift_x(1);
        let rows = OrderV::new(set.n(), set.multiplicity());
        for &(th, ka) in rows.pairs() {
            if ka + 1 < set.band_rows(th) {
                assert_eq!(set.inner(th, ka, &xt), set.inner(th, ka + 1, &t));
            }
        }
    }
}

#[test]
fn reference_shapes_and_zero_block() {
    let code = rs16_4();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let r = random_word(&mut rng, &code);
    let sudan = sudan_syndromes(&code, &r, 2, 7).unwrap();
    assert_eq!((sudan.total_rows(), sudan.total_cols()), (16, 18));
    let gs = gs_syndromes(&code, &r, 2, 4, 8).unwrap();
    assert_eq!((gs.total_rows(), gs.total_cols()), (48, 50));
    assert!(gs.block(1, 0).is_empty());
    for i in 0..16 {
        for j in 0..16 {
            assert_eq!(gs.hankel_entry(1, 0, i, j).unwrap(), Fe::ZERO);
        }
    }
}
