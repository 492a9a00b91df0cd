use super::{FiaTrace, TraceStep};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::matrix::Matrix;
use crate::poly::UniPoly;

/// Result of a univariate FIA run: `T` has degree exactly `mu` and its
/// coefficients combine columns `0..=mu` to zero on every row.
#[derive(Debug, Clone)]
pub struct HankelOutcome {
    pub mu: usize,
    pub poly: UniPoly,
    pub trace: FiaTrace,
}

fn eliminate(field: &Field, t: &mut [Fe], stored: &[Fe], factor: Fe) {
    for (a, &b) in t.iter_mut().zip(stored) {
        *a = field.sub(*a, field.mul(factor, b));
    }
}

fn step(column: usize, row: usize, true_discrepancy: bool) -> TraceStep {
    TraceStep { column, nu: 0, mu: column, row, theta: 0, kappa: row, true_discrepancy }
}

/// Feng–Tzeng FIA on an arbitrary matrix. Each new column is examined from row 0.
pub fn fia_generic(m: &Matrix) -> Result<HankelOutcome> {
    let f = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    if cols == 0 {
        return Err(Error::ColumnsExhausted);
    }
    let mut stored_d = vec![Fe::ZERO; rows];
    let mut stored_t: Vec<Vec<Fe>> = vec![Vec::new(); rows];
    let mut trace = FiaTrace::default();
    let mut mu = 0;
    let mut t = vec![Fe::ONE];
    let mut kappa = 0;
    while kappa < rows {
        let row = m.row(kappa);
        let delta = f.sum(t.iter().zip(row).map(|(&a, &b)| f.mul(a, b)));
        if delta.is_zero() || !stored_d[kappa].is_zero() {
            trace.push(step(mu, kappa, false));
            if !delta.is_zero() {
                let factor = f.mul(delta, f.inv_nz(stored_d[kappa]));
                eliminate(f, &mut t, &stored_t[kappa], factor);
            }
            kappa += 1;
        } else {
            trace.push(step(mu, kappa, true));
            stored_d[kappa] = delta;
            stored_t[kappa] = t.clone();
            mu += 1;
            if mu >= cols {
                return Err(Error::ColumnsExhausted);
            }
            t.push(Fe::ONE);
            for c in t.iter_mut().take(mu) {
                *c = Fe::ZERO;
            }
            kappa = 0;
        }
    }
    Ok(HankelOutcome { mu, poly: UniPoly::from_coeffs(f, t), trace })
}

/// FIA on the `m × n` Hankel matrix `S_(i,j) = seq[i + j]`.
///
/// After a true discrepancy at row `κ` the next column starts at row `κ − 1`
/// with `T ← x·T` and the already known discrepancy, so the row pointer
/// never falls back to the top.
pub fn fia_hankel(field: &Field, seq: &[Fe], m: usize, n: usize) -> Result<HankelOutcome> {
    if n == 0 {
        return Err(Error::ColumnsExhausted);
    }
    if m > 0 && seq.len() < m + n - 1 {
        return Err(Error::WrongLength { expected: m + n - 1, got: seq.len() });
    }
    let f = field;
    let mut stored_d = vec![Fe::ZERO; m];
    let mut stored_t: Vec<Vec<Fe>> = vec![Vec::new(); m];
    let mut last_row: Option<usize> = None;
    let mut trace = FiaTrace::default();
    let mut mu = 0;
    let mut t: Vec<Fe> = Vec::new();
    let mut kappa = 0;
    let mut delta: Fe;
    let mut compute = false;
    while kappa < m {
        if compute {
            delta = f.sum(t.iter().enumerate().map(|(j, &c)| f.mul(c, seq[kappa + j])));
        } else {
            match last_row {
                Some(r) if r >= 1 => {
                    t = std::iter::once(Fe::ZERO).chain(stored_t[r].iter().copied()).collect();
                    delta = stored_d[r];
                    kappa = r - 1;
                }
                _ => {
                    t = vec![Fe::ZERO; mu + 1];
                    t[mu] = Fe::ONE;
                    delta = seq[mu];
                    kappa = 0;
                }
            }
            compute = true;
        }
        if delta.is_zero() || !stored_d[kappa].is_zero() {
            trace.push(step(mu, kappa, false));
            if !delta.is_zero() {
                let factor = f.mul(delta, f.inv_nz(stored_d[kappa]));
                eliminate(f, &mut t, &stored_t[kappa], factor);
            }
            kappa += 1;
        } else {
            trace.push(step(mu, kappa, true));
            stored_d[kappa] = delta;
            stored_t[kappa] = t.clone();
            last_row = Some(kappa);
            compute = false;
            mu += 1;
            if mu >= n {
                return Err(Error::ColumnsExhausted);
            }
        }
    }
    if t.is_empty() {
        // no rows at all: the first column alone is a valid combination
        t = vec![Fe::ONE];
    }
    Ok(HankelOutcome { mu, poly: UniPoly::from_coeffs(f, t), trace })
}
