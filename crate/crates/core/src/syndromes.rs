//! Syndrome sequences for Key-Equation decoding and for the Sudan and
//! Guruswami–Sudan interpolation problems.
//!
//! For multiplicity `s`, list size `ℓ` and radius `τ`, block `(b, t)` with
//! `b < s`, `b ≤ t ≤ ℓ` is the Hankel matrix `S^(b,t)_(i,j) = S^(b,t)_(i+j)`,
//! `i < (s−b)n`, `j < N_t`, where
//!
//! ```text
//! S^(b,t)_i = C(t, b) · T^(b,t)_(i + b + 1 + t(n−1) − sn),
//! T^(b,t)(x) = R̄(x)^(t−b) / Ḡ(x)^(s−b)   (power series),
//! ```
//!
//! and coefficients of `T` at negative indices are zero. The binomial weight
//! comes from the y-Hasse derivative `Q^[b]`; without it the homogeneous
//! system no longer matches the multiplicity constraints once `b ≥ 1`.
//! The zero-padding at negative indices is what the truncated congruence
//! produces: those positions correspond to coefficients below `x^0`.

use crate::code::GrsCode;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{reciprocal, series_div, BiPoly, UniPoly};

/// Degree bounds `N_t = s(n − τ) − t(k − 1)` for `t = 0..=ℓ`; every bound must be positive.
pub fn degree_bounds(n: usize, k: usize, s: usize, ell: usize, tau: usize) -> Result<Vec<usize>> {
    if s == 0 {
        return Err(Error::Infeasible("multiplicity must be at least 1".into()));
    }
    if tau >= n {
        return Err(Error::Infeasible(format!("radius {tau} must be below n = {n}")));
    }
    (0..=ell)
        .map(|t| {
            let nt = (s * (n - tau)) as i64 - (t * (k - 1)) as i64;
            if nt <= 0 {
                Err(Error::Infeasible(format!("N_{t} = {nt} is not positive")))
            } else {
                Ok(nt as usize)
            }
        })
        .collect()
}

/// Classical syndromes `S_i = Σ_j υ_j r_j α_j^i` for `i < n − k`.
pub fn classical_syndromes(code: &GrsCode, r: &[Fe]) -> Result<UniPoly> {
    code.check_len(r)?;
    let f = code.field();
    let n = code.n();
    let weights: Vec<Fe> = code.v_dual().iter().zip(r).map(|(&v, &ri)| f.mul(v, ri)).collect();
    let mut powers = weights;
    let mut out = Vec::with_capacity(n - code.k());
    for _ in 0..n - code.k() {
        out.push(f.sum(powers.iter().copied()));
        for (p, &a) in powers.iter_mut().zip(code.alphas()) {
            *p = f.mul(*p, a);
        }
    }
    Ok(UniPoly::from_coeffs(f, out))
}

/// Classical syndromes as the first `n − k` coefficients of `R̄(x) / Ḡ(x)`.
pub fn classical_syndromes_via_series(code: &GrsCode, r: &[Fe]) -> Result<UniPoly> {
    let n = code.n();
    let rbar = reciprocal(&code.received_poly(r)?, n)?;
    let gbar = reciprocal(&code.locator_poly(), n + 1)?;
    series_div(&rbar, &gbar, n - code.k())
}

/// The bivariate syndromes of one received word, stored as coefficient
/// sequences (the Block-Hankel matrix is never materialized).
#[derive(Debug, Clone)]
pub struct SyndromeSet {
    field: Field,
    n: usize,
    s: usize,
    ell: usize,
    tau: usize,
    bounds: Vec<usize>,
    /// `blocks[b][t]`, empty for `t < b`.
    blocks: Vec<Vec<Vec<Fe>>>,
}

impl SyndromeSet {
    /// Assembles a set from raw coefficient sequences, checking the lengths.
    pub fn from_blocks(
        field: &Field,
        n: usize,
        tau: usize,
        bounds: Vec<usize>,
        blocks: Vec<Vec<Vec<Fe>>>,
    ) -> Result<Self> {
        let s = blocks.len();
        if s == 0 || bounds.is_empty() {
            return Err(Error::Infeasible("empty syndrome set".into()));
        }
        let ell = bounds.len() - 1;
        for (b, row) in blocks.iter().enumerate() {
            if row.len() != ell + 1 {
                return Err(Error::WrongLength { expected: ell + 1, got: row.len() });
            }
            for (t, seq) in row.iter().enumerate() {
                let want = if t < b { 0 } else { (s - b) * n + bounds[t] };
                if seq.len() != want {
                    return Err(Error::WrongLength { expected: want, got: seq.len() });
                }
            }
        }
        Ok(SyndromeSet { field: field.clone(), n, s, ell, tau, bounds, blocks })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self) -> usize {
        self.s
    }

    pub fn list_size(&self) -> usize {
        self.ell
    }

    pub fn radius(&self) -> usize {
        self.tau
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// Rows in sub-band `b`: `(s − b)·n`.
    pub fn band_rows(&self, b: usize) -> usize {
        (self.s - b) * self.n
    }

    /// `C(s+1, 2)·n`.
    pub fn total_rows(&self) -> usize {
        (0..self.s).map(|b| self.band_rows(b)).sum()
    }

    /// `Σ_t N_t`.
    pub fn total_cols(&self) -> usize {
        self.bounds.iter().sum()
    }

    /// Coefficient sequence of `S^(b,t)(x)`; empty for `t < b`.
    pub fn block(&self, b: usize, t: usize) -> &[Fe] {
        &self.blocks[b][t]
    }

    /// `S^(b)(x, y) = Σ_t S^(b,t)(x) y^t`.
    pub fn bivariate(&self, b: usize) -> BiPoly {
        let rows = self.blocks[b].iter().map(|seq| UniPoly::from_coeffs(&self.field, seq.clone())).collect();
        BiPoly::from_rows(&self.field, rows)
    }

    /// Entry `(i, j)` of block `(b, t)` of the Block-Hankel matrix.
    pub fn hankel_entry(&self, b: usize, t: usize, i: usize, j: usize) -> Result<Fe> {
        if b >= self.s || t > self.ell {
            return Err(Error::IndexOutOfRange(format!("block ({b},{t})")));
        }
        if i >= self.band_rows(b) || j >= self.bounds[t] {
            return Err(Error::IndexOutOfRange(format!("entry ({i},{j}) of block ({b},{t})")));
        }
        if t < b {
            return Ok(Fe::ZERO);
        }
        Ok(self.blocks[b][t][i + j])
    }

    /// `⟨x^κ T(x,y), S^(b)(x,y)⟩ = Σ_t Σ_j T^(t)_j S^(b,t)_(j+κ)`.
    pub fn inner(&self, b: usize, kappa: usize, poly: &BiPoly) -> Fe {
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for (t, row) in poly.rows().iter().enumerate().skip(b) {
            let seq = &self.blocks[b][t];
            for (j, &c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let s = seq.get(j + kappa).copied().unwrap_or(Fe::ZERO);
                acc = f.add(acc, f.mul(c, s));
            }
        }
        acc
    }
}

/// Sudan syndromes (`s = 1`), `N_t = n − τ − t(k−1)`.
pub fn sudan_syndromes(code: &GrsCode, r: &[Fe], ell: usize, tau: usize) -> Result<SyndromeSet> {
    gs_syndromes(code, r, 1, ell, tau)
}

/// Guruswami–Sudan syndromes for multiplicity `s`, list size `ell`, radius `tau`.
pub fn gs_syndromes(code: &GrsCode, r: &[Fe], s: usize, ell: usize, tau: usize) -> Result<SyndromeSet> {
    let n = code.n();
    let bounds = degree_bounds(n, code.k(), s, ell, tau)?;
    let f = code.field();
    let rbar = reciprocal(&code.received_poly(r)?, n)?;
    let gbar = reciprocal(&code.locator_poly(), n + 1)?;

    let mut rbar_pows = vec![UniPoly::one(f)];
    for _ in 0..ell {
        let next = rbar_pows.last().unwrap().mul(&rbar);
        rbar_pows.push(next);
    }

    let mut blocks = Vec::with_capacity(s);
    for b in 0..s {
        let den = gbar.pow(s - b);
        let mut row = Vec::with_capacity(ell + 1);
        for t in 0..=ell {
            if t < b {
                row.push(Vec::new());
                continue;
            }
            let len = (s - b) * n + bounds[t];
            let offset = (b + 1 + t * (n - 1)) as i64 - (s * n) as i64;
            let needed = len as i64 + offset;
            let weight = f.binomial(t, b);
            let mut seq = vec![Fe::ZERO; len];
            if needed > 0 && !weight.is_zero() {
                let series = series_div(&rbar_pows[t - b], &den, needed as usize)?;
                for (i, slot) in seq.iter_mut().enumerate() {
                    let idx = i as i64 + offset;
                    if idx >= 0 {
                        *slot = f.mul(weight, series.coeff(idx as usize));
                    }
                }
            }
            row.push(seq);
        }
        blocks.push(row);
    }
    SyndromeSet::from_blocks(f, n, tau, bounds, blocks)
}
