#![allow(dead_code)]

use grs_core::decoder::{params_for, DecodeParams};
use grs_core::{Fe, Field, FieldSpec, GrsCode, UniPoly};
use rand_chacha::ChaCha8Rng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gf(q: u32) -> Field {
    match q {
        32 => Field::new(FieldSpec::extension(2, 5, vec![1, 0, 1, 0, 0, 1])).unwrap(),
        64 => Field::new(FieldSpec::extension(2, 6, vec![1, 1, 0, 0, 0, 0, 1])).unwrap(),
        p => Field::prime(p).unwrap(),
    }
}

pub fn rs16_4() -> GrsCode {
    GrsCode::from_generator_powers(&gf(17), 16, 4).unwrap()
}

pub fn random_nonzero<R: Rng>(rng: &mut R, f: &Field) -> Fe {
    f.elem(rng.gen_range(1..f.order() as u64)).unwrap()
}

pub fn random_elem<R: Rng>(rng: &mut R, f: &Field) -> Fe {
    f.elem(rng.gen_range(0..f.order() as u64)).unwrap()
}

/// Random locators (distinct, nonzero) and multipliers.
pub fn random_code<R: Rng>(rng: &mut R, f: &Field, n: usize, k: usize) -> GrsCode {
    let mut pool: Vec<Fe> = f.nonzero_elements().collect();
    pool.shuffle(rng);
    let alphas = pool[..n].to_vec();
    let vprimes = (0..n).map(|_| random_nonzero(rng, f)).collect();
    GrsCode::new(f, k, alphas, vprimes).unwrap()
}

pub fn random_message<R: Rng>(rng: &mut R, code: &GrsCode) -> UniPoly {
    let f = code.field();
    UniPoly::from_coeffs(f, (0..code.k()).map(|_| random_elem(rng, f)).collect())
}

pub fn random_word<R: Rng>(rng: &mut R, code: &GrsCode) -> Vec<Fe> {
    (0..code.n()).map(|_| random_elem(rng, code.field())).collect()
}

/// Adds a nonzero error at exactly `weight` random positions.
pub fn plant<R: Rng>(rng: &mut R, code: &GrsCode, c: &[Fe], weight: usize) -> Vec<Fe> {
    let f = code.field();
    let mut pos: Vec<usize> = (0..code.n()).collect();
    pos.shuffle(rng);
    let mut r = c.to_vec();
    for &j in &pos[..weight] {
        r[j] = f.add(r[j], random_nonzero(rng, f));
    }
    r
}

/// Normalizes a polynomial by its leading coefficient.
pub fn monic(p: &UniPoly) -> UniPoly {
    let f = p.field();
    match p.leading() {
        Some(l) => p.scale(f.inv(l).unwrap()),
        None => p.clone(),
    }
}

pub struct Instance {
    pub code: GrsCode,
    pub r: Vec<Fe>,
    pub params: DecodeParams,
}

/// Random code over GF(17), GF(19) or GF(32) with a random feasible radius
/// of multiplicity at most `s_cap`.
pub fn random_instance(rng: &mut ChaCha8Rng, s_cap: usize) -> Instance {
    random_instance_where(rng, |p| p.s <= s_cap)
}

/// As [`random_instance`], with the radius drawn among those whose
/// parameters satisfy `keep`.
pub fn random_instance_where(rng: &mut ChaCha8Rng, keep: impl Fn(&DecodeParams) -> bool) -> Instance {
    loop {
        let q = [17u32, 19, 32][rng.gen_range(0..3)];
        let f = gf(q);
        let n = rng.gen_range(4..=20.min(q as usize - 1));
        let k = rng.gen_range(1..n);
        let code = random_code(rng, &f, n, k);
        let feasible: Vec<DecodeParams> =
            (0..n).filter_map(|tau| params_for(&code, tau).ok()).filter(|p| keep(p)).collect();
        if feasible.is_empty() {
            continue;
        }
        let params = feasible[rng.gen_range(0..feasible.len())].clone();
        let r = if rng.gen_bool(0.5) {
            random_word(rng, &code)
        } else {
            let c = code.encode(&random_message(rng, &code)).unwrap();
            plant(rng, &code, &c, params.tau)
        };
        return Instance { code, r, params };
    }
}
