//! Bounded-minimum-distance and list decoding of GRS codes.

use crate::code::{hamming_distance, GrsCode};
use crate::error::{Error, Result};
use crate::fia::{fia_gs, fia_hankel, fia_sudan, FiaTrace};
use crate::field::{Fe, Field};
use crate::poly::{BiPoly, UniPoly};
use crate::syndromes::{classical_syndromes, degree_bounds, gs_syndromes};

/// Largest multiplicity tried by [`params_for`].
pub const S_MAX: usize = 16;

/// Multiplicity, list size, radius and the derived degree bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeParams {
    pub s: usize,
    pub ell: usize,
    pub tau: usize,
    pub bounds: Vec<usize>,
}

fn binom2(s: usize) -> usize {
    s * (s + 1) / 2
}

impl DecodeParams {
    /// Checks `N_t > 0` for all `t ≤ ℓ` and `Σ N_t > C(s+1,2)·n`.
    pub fn new(code: &GrsCode, s: usize, ell: usize, tau: usize) -> Result<Self> {
        let n = code.n();
        let bounds = degree_bounds(n, code.k(), s, ell, tau)?;
        let unknowns: usize = bounds.iter().sum();
        let constraints = binom2(s) * n;
        if unknowns <= constraints {
            return Err(Error::Infeasible(format!(
                "{unknowns} unknowns do not exceed {constraints} constraints (s={s}, l={ell}, tau={tau})"
            )));
        }
        Ok(DecodeParams { s, ell, tau, bounds })
    }

    /// Number of homogeneous linear constraints, `C(s+1,2)·n`.
    pub fn constraints(&self, n: usize) -> usize {
        binom2(self.s) * n
    }

    /// Number of unknown coefficients, `Σ N_t`.
    pub fn unknowns(&self) -> usize {
        self.bounds.iter().sum()
    }
}

/// Smallest multiplicity `s`, then smallest list size `ℓ ≥ s`, solving the
/// interpolation problem at radius `τ`.
///
/// Radii at or beyond `n − √(n(k−1))` are rejected since no multiplicity
/// reaches them.
pub fn params_for(code: &GrsCode, tau: usize) -> Result<DecodeParams> {
    let (n, k) = (code.n(), code.k());
    if tau >= n || ((n - tau) * (n - tau)) as u64 <= (n * (k - 1)) as u64 {
        return Err(Error::Infeasible(format!("radius {tau} is at or beyond n - sqrt(n(k-1)) for n={n}, k={k}")));
    }
    for s in 1..=S_MAX {
        let top = s * (n - tau);
        let need = binom2(s) * n;
        let mut sum = 0usize;
        let mut ell = 0usize;
        loop {
            let nt = top as i64 - (ell * (k - 1)) as i64;
            if nt < 1 {
                break;
            }
            sum += nt as usize;
            if ell >= s && sum > need {
                return DecodeParams::new(code, s, ell, tau);
            }
            ell += 1;
        }
    }
    Err(Error::Infeasible(format!("no multiplicity up to {S_MAX} reaches radius {tau}")))
}

/// Result of a successful BMD decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmdOutcome {
    pub codeword: Vec<Fe>,
    pub message: UniPoly,
    pub error_positions: Vec<usize>,
    /// FIA iterations spent on the Key Equation.
    pub iterations: usize,
}

/// Classical decoding up to `⌊(n−k)/2⌋` errors through the Key Equation.
pub fn decode_bmd(code: &GrsCode, r: &[Fe]) -> Result<BmdOutcome> {
    let f = code.field();
    let (n, k) = (code.n(), code.k());
    let synd = classical_syndromes(code, r)?;
    let tau = (n - k) / 2;
    let seq: Vec<Fe> = (0..n - k).map(|i| synd.coeff(i)).collect();
    let out = fia_hankel(f, &seq, tau, tau + 1)?;
    let mu = out.mu;
    // Λ is T reversed: its roots are the inverse error locators
    let lambda = UniPoly::from_coeffs(f, (0..=mu).map(|m| out.poly.coeff(mu - m)).collect());
    let lambda0 = lambda.coeff(0);
    let positions: Vec<usize> =
        (0..n).filter(|&j| lambda.eval(f.inv_nz(code.alphas()[j])).is_zero()).collect();
    if positions.len() != mu || lambda0.is_zero() {
        return Err(Error::DecodeFailure(format!(
            "error locator of degree {mu} has {} roots among the code locators",
            positions.len()
        )));
    }
    let omega = synd.mul_trunc(&lambda, n - k);
    let mut codeword = r.to_vec();
    for &j in &positions {
        let xinv = f.inv_nz(code.alphas()[j]);
        let denom = positions
            .iter()
            .filter(|&&i| i != j)
            .fold(f.mul(lambda0, code.v_dual()[j]), |acc, &i| {
                f.mul(acc, f.sub(Fe::ONE, f.mul(code.alphas()[i], xinv)))
            });
        let e = f.div(omega.eval(xinv), denom)?;
        codeword[j] = f.sub(codeword[j], e);
    }
    if !classical_syndromes(code, &codeword)?.is_zero() {
        return Err(Error::DecodeFailure("corrected word is not a codeword".into()));
    }
    let message = code
        .message_of(&codeword)?
        .ok_or_else(|| Error::DecodeFailure("corrected word is not a codeword".into()))?;
    let error_positions = (0..n).filter(|&j| codeword[j] != r[j]).collect();
    Ok(BmdOutcome { codeword, message, error_positions, iterations: out.trace.len() })
}

/// Interpolation polynomial and the FIA trace that produced it.
#[derive(Debug, Clone)]
pub struct Interpolation {
    pub q: BiPoly,
    pub trace: FiaTrace,
}

/// Solves the interpolation problem through syndromes and the banded FIA
/// (horizontal band for `s = 1`, Block-Hankel otherwise).
pub fn interpolate(code: &GrsCode, r: &[Fe], params: &DecodeParams) -> Result<Interpolation> {
    let set = gs_syndromes(code, r, params.s, params.ell, params.tau)?;
    let out = if params.s == 1 { fia_sudan(&set)? } else { fia_gs(&set)? };
    Ok(Interpolation { q: out.poly, trace: out.trace })
}

fn strip_x_power(q: &BiPoly) -> BiPoly {
    let f = q.field();
    let low = q
        .rows()
        .iter()
        .filter_map(|r| r.coeffs().iter().position(|c| !c.is_zero()))
        .min()
        .unwrap_or(0);
    if low == 0 {
        return q.clone();
    }
    BiPoly::from_rows(f, q.rows().iter().map(|r| UniPoly::from_coeffs(f, r.coeffs().get(low..).unwrap_or(&[]).to_vec())).collect())
}

fn rr_search(q: &BiPoly, depth: usize, k: usize, prefix: &mut Vec<Fe>, out: &mut Vec<Vec<Fe>>) {
    if depth == k {
        out.push(prefix.clone());
        return;
    }
    let f = q.field();
    let q = strip_x_power(q);
    let at_zero = UniPoly::from_coeffs(f, q.rows().iter().map(|r| r.coeff(0)).collect());
    if at_zero.degree().unwrap_or(0) == 0 {
        return;
    }
    for gamma in f.elements() {
        if !at_zero.eval(gamma).is_zero() {
            continue;
        }
        let shifted = q.shift_y(gamma);
        // y ← x·y
        let next =
            BiPoly::from_rows(f, shifted.rows().iter().enumerate().map(|(t, r)| r.shift(t)).collect());
        prefix.push(gamma);
        rr_search(&next, depth + 1, k, prefix, out);
        prefix.pop();
    }
}

/// All `f` with `deg f < k` and `Q(x, f(x)) = 0`, by Roth–Ruckenstein style
/// recursion on `Q(x, xy + γ)`. Results are sorted by coefficient indices.
pub fn find_y_roots(q: &BiPoly, k: usize) -> Vec<UniPoly> {
    if q.is_zero() {
        return Vec::new();
    }
    let f = q.field();
    let mut raw = Vec::new();
    rr_search(q, 0, k, &mut Vec::with_capacity(k), &mut raw);
    let mut roots: Vec<UniPoly> = raw
        .into_iter()
        .map(|c| UniPoly::from_coeffs(f, c))
        .filter(|p| q.eval_y_subst(p).is_zero())
        .collect();
    sort_polys(&mut roots);
    roots
}

/// Brute-force counterpart of [`find_y_roots`] scanning all `q^k` polynomials.
pub fn find_y_roots_exhaustive(q: &BiPoly, k: usize) -> Result<Vec<UniPoly>> {
    let f = q.field();
    let total = (f.order() as u64).checked_pow(k as u32).filter(|&t| t <= 1 << 20);
    let total = total.ok_or_else(|| Error::TooLarge(format!("{}^{k} candidate polynomials", f.order())))?;
    if q.is_zero() {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    for idx in 0..total {
        let p = UniPoly::from_coeffs(f, mixed_radix(f, k, idx));
        if q.eval_y_subst(&p).is_zero() {
            roots.push(p);
        }
    }
    sort_polys(&mut roots);
    Ok(roots)
}

/// Digits of `idx` in base `q`, least significant first, as field elements.
pub(crate) fn mixed_radix(field: &Field, k: usize, mut idx: u64) -> Vec<Fe> {
    let q = field.order() as u64;
    (0..k)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            field.elem(d).expect("digit below field order")
        })
        .collect()
}

fn poly_key(p: &UniPoly) -> Vec<u32> {
    p.coeffs().iter().map(|c| c.index()).collect()
}

fn sort_polys(v: &mut Vec<UniPoly>) {
    v.sort_by_key(poly_key);
    v.dedup();
}

/// One decoded codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub message: UniPoly,
    pub codeword: Vec<Fe>,
    pub distance: usize,
}

/// Output of [`list_decode`].
#[derive(Debug, Clone)]
pub struct ListDecodeResult {
    pub params: DecodeParams,
    /// Codewords within distance `τ`, nearest first.
    pub candidates: Vec<Candidate>,
    pub q: BiPoly,
    pub trace: FiaTrace,
}

impl ListDecodeResult {
    /// FIA iteration count.
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }

    pub fn contains(&self, message: &UniPoly) -> bool {
        self.candidates.iter().any(|c| &c.message == message)
    }
}

/// List decoding at radius `τ` with parameters from [`params_for`].
pub fn list_decode(code: &GrsCode, r: &[Fe], tau: usize) -> Result<ListDecodeResult> {
    let params = params_for(code, tau)?;
    list_decode_with(code, r, &params)
}

/// Interpolation, factorization and re-encoding check.
pub fn list_decode_with(code: &GrsCode, r: &[Fe], params: &DecodeParams) -> Result<ListDecodeResult> {
    let Interpolation { q, trace } = interpolate(code, r, params)?;
    let mut candidates = Vec::new();
    for message in find_y_roots(&q, code.k()) {
        let codeword = code.encode(&message)?;
        let distance = hamming_distance(&codeword, r);
        if distance <= params.tau {
            candidates.push(Candidate { message, codeword, distance });
        }
    }
    candidates.sort_by(|a, b| a.distance.cmp(&b.distance).then_with(|| poly_key(&a.message).cmp(&poly_key(&b.message))));
    candidates.dedup_by(|a, b| a.message == b.message);
    Ok(ListDecodeResult { params: params.clone(), candidates, q, trace })
}
