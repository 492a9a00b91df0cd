//! Seeded symbol-error channel and the planted-codeword benchmark.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::GrsCode;
use crate::decoder::{list_decode_with, DecodeParams};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::UniPoly;

/// Changes exactly `weight` positions of a word of symbol indices in
/// `[0, q)`, chosen uniformly, each to a uniformly random different symbol.
pub fn corrupt_symbols_with<R: Rng>(q: u32, word: &[u32], weight: usize, rng: &mut R) -> Result<Vec<u32>> {
    if weight > word.len() {
        return Err(Error::IndexOutOfRange(format!("weight {weight} exceeds length {}", word.len())));
    }
    if let Some(&bad) = word.iter().find(|&&v| v >= q) {
        return Err(Error::NotAnElement { value: bad as u64, q });
    }
    let mut out = word.to_vec();
    for j in sample(rng, word.len(), weight) {
        out[j] = (out[j] + rng.gen_range(1..q)) % q;
    }
    Ok(out)
}

/// [`corrupt_symbols_with`] driven by a ChaCha8 stream seeded with `seed`.
pub fn corrupt_symbols(q: u32, word: &[u32], weight: usize, seed: u64) -> Result<Vec<u32>> {
    corrupt_symbols_with(q, word, weight, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Field-element form of [`corrupt_symbols_with`].
pub fn corrupt_with<R: Rng>(field: &Field, word: &[Fe], weight: usize, rng: &mut R) -> Result<Vec<Fe>> {
    let idx: Vec<u32> = word.iter().map(|e| e.index()).collect();
    corrupt_symbols_with(field.order(), &idx, weight, rng)?
        .into_iter()
        .map(|v| field.elem(v as u64))
        .collect()
}

pub fn corrupt(field: &Field, word: &[Fe], weight: usize, seed: u64) -> Result<Vec<Fe>> {
    corrupt_with(field, word, weight, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// One planted list-decoding trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial: usize,
    pub weight: usize,
    pub success: bool,
    /// FIA trace length.
    pub iterations: usize,
    /// Seconds, `None` when timing is disabled.
    pub wall_time: Option<f64>,
}

/// Benchmark options. `weight = None` plants exactly `τ` errors.
#[derive(Debug, Clone, Copy)]
pub struct BenchOptions {
    pub trials: usize,
    pub seed: u64,
    pub weight: Option<usize>,
    pub timing: bool,
}

/// Random message, exactly `weight` errors, list decoding; success means the
/// message is in the list. Trials are deterministic given the seed.
pub fn bench(code: &GrsCode, params: &DecodeParams, opts: BenchOptions) -> Result<Vec<TrialRecord>> {
    let f = code.field();
    let weight = opts.weight.unwrap_or(params.tau);
    if weight > code.n() {
        return Err(Error::IndexOutOfRange(format!("weight {weight} exceeds length {}", code.n())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let q = f.order() as u64;
    let mut out = Vec::with_capacity(opts.trials);
    for trial in 0..opts.trials {
        let coeffs = (0..code.k()).map(|_| f.elem(rng.gen_range(0..q))).collect::<Result<Vec<_>>>()?;
        let msg = UniPoly::from_coeffs(f, coeffs);
        let c = code.encode(&msg)?;
        let r = corrupt_with(f, &c, weight, &mut rng)?;
        let start = Instant::now();
        let res = list_decode_with(code, &r, params)?;
        let elapsed = start.elapsed().as_secs_f64();
        out.push(TrialRecord {
            trial,
            weight,
            success: res.contains(&msg),
            iterations: res.iterations(),
            wall_time: opts.timing.then_some(elapsed),
        });
    }
    Ok(out)
}

pub const BENCH_CSV_HEADER: &str = "trial,weight,success,iterations,wall_time";

/// CSV with header `trial,weight,success,iterations,wall_time`; the time
/// column is empty when timing is off.
pub fn bench_csv(records: &[TrialRecord]) -> String {
    let mut s = String::from(BENCH_CSV_HEADER);
    s.push('\n');
    for r in records {
        let t = r.wall_time.map(|t| format!("{t:.6}")).unwrap_or_default();
        s.push_str(&format!("{},{},{},{},{}\n", r.trial, r.weight, u8::from(r.success), r.iterations, t));
    }
    s
}
