use super::{FiaTrace, OrderH, OrderV, TraceStep};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{BiPoly, UniPoly};
use crate::syndromes::SyndromeSet;

/// Output of the banded FIA variants.
#[derive(Debug, Clone)]
pub struct BandOutcome {
    pub poly: BiPoly,
    pub trace: FiaTrace,
}

/// Run-time switches for the banded variants.
#[derive(Debug, Clone, Copy, Default)]
pub struct FiaOptions {
    /// At every true discrepancy, verify by direct inner products that the
    /// current `T` annihilates every row already passed. Quadratic overhead.
    pub check_invariants: bool,
}

/// Dense connection polynomial: `rows[t][j]` is the coefficient of `x^j y^t`, `j < N_t`.
struct Dense {
    rows: Vec<Vec<Fe>>,
}

impl Dense {
    fn zero(bounds: &[usize]) -> Self {
        Dense { rows: bounds.iter().map(|&nt| vec![Fe::ZERO; nt]).collect() }
    }

    fn monomial(bounds: &[usize], nu: usize, mu: usize) -> Self {
        let mut d = Dense::zero(bounds);
        d.rows[nu][mu] = Fe::ONE;
        d
    }

    /// `x · self`. The column order keeps every shifted monomial inside its bound.
    fn times_x(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                debug_assert!(r.last().is_none_or(|c| c.is_zero()), "x·T leaves the degree bounds");
                let mut v = Vec::with_capacity(r.len());
                if !r.is_empty() {
                    v.push(Fe::ZERO);
                    v.extend_from_slice(&r[..r.len() - 1]);
                }
                v
            })
            .collect();
        Dense { rows }
    }

    fn eliminate(&mut self, field: &Field, other: &Dense, factor: Fe) {
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            for (x, &y) in a.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
    }

    /// `⟨x^κ T, S^(b)⟩`.
    fn inner(&self, field: &Field, set: &SyndromeSet, b: usize, kappa: usize) -> Fe {
        let mut acc = Fe::ZERO;
        for (t, row) in self.rows.iter().enumerate().skip(b) {
            let seq = &set.block(b, t)[kappa..];
            for (&c, &s) in row.iter().zip(seq) {
                if !c.is_zero() {
                    acc = field.add(acc, field.mul(c, s));
                }
            }
        }
        acc
    }

    fn into_bipoly(self, field: &Field, bounds: &[usize]) -> BiPoly {
        let rows = self.rows.into_iter().map(|r| UniPoly::from_coeffs(field, r)).collect();
        BiPoly::from_rows(field, rows)
            .with_bounds(bounds.to_vec())
            .expect("connection polynomial respects its degree bounds")
    }
}

fn check_passed_rows(set: &SyndromeSet, rows: &OrderV, t: &Dense, upto: usize) {
    let f = set.field();
    for r in 0..upto {
        let (th, ka) = rows.pair(r);
        assert!(
            t.inner(f, set, th, ka).is_zero(),
            "loop invariant violated: row ({th},{ka}) not annihilated before row index {upto}"
        );
    }
}

/// FIA on the horizontal band `[S^(0) S^(1) … S^(ℓ)]` of a Sudan syndrome set.
pub fn fia_sudan(set: &SyndromeSet) -> Result<BandOutcome> {
    fia_sudan_with(set, FiaOptions::default())
}

pub fn fia_sudan_with(set: &SyndromeSet, opts: FiaOptions) -> Result<BandOutcome> {
    if set.multiplicity() != 1 {
        return Err(Error::Infeasible("horizontal-band FIA needs multiplicity 1".into()));
    }
    let f = set.field();
    let n = set.n();
    let bounds = set.bounds();
    let ell = set.list_size();
    let weight = weight_of(set);
    let cols = OrderH::new(bounds, weight);
    let rows_order = OrderV::new(n, 1);

    let mut stored_d = vec![Fe::ZERO; n];
    let mut stored_t: Vec<Option<Dense>> = (0..n).map(|_| None).collect();
    let mut last_row = vec![0usize; ell + 1];
    let mut trace = FiaTrace::default();

    let mut col = 0usize;
    let mut kappa = 0usize;
    let mut t = Dense::zero(bounds);
    let mut delta: Fe;
    let mut compute = false;
    while kappa < n {
        let (nu, mu) = cols.pair(col);
        if compute {
            delta = t.inner(f, set, 0, kappa);
        } else {
            let r = last_row[nu];
            if r < 1 {
                t = Dense::monomial(bounds, nu, mu);
                delta = set.block(0, nu)[mu];
                kappa = 0;
            } else {
                t = stored_t[r].as_ref().expect("stored row").times_x();
                delta = stored_d[r];
                kappa = r - 1;
            }
            compute = true;
        }
        let is_true = !delta.is_zero() && stored_d[kappa].is_zero();
        trace.push(TraceStep { column: col, nu, mu, row: kappa, theta: 0, kappa, true_discrepancy: is_true });
        if !is_true {
            if !delta.is_zero() {
                let factor = f.mul(delta, f.inv_nz(stored_d[kappa]));
                t.eliminate(f, stored_t[kappa].as_ref().expect("stored row"), factor);
            }
            kappa += 1;
        } else {
            if opts.check_invariants {
                check_passed_rows(set, &rows_order, &t, kappa);
            }
            stored_d[kappa] = delta;
            last_row[nu] = kappa;
            compute = false;
            col += 1;
            stored_t[kappa] = Some(std::mem::replace(&mut t, Dense::zero(&[])));
            if col >= cols.len() {
                return Err(Error::ColumnsExhausted);
            }
        }
    }
    if opts.check_invariants {
        check_passed_rows(set, &rows_order, &t, n);
    }
    Ok(BandOutcome { poly: t.into_bipoly(f, bounds), trace })
}

/// FIA on the Block-Hankel matrix of a Guruswami–Sudan syndrome set.
///
/// Rows are scanned in [`OrderV`] order. When sub-matrix `ν` is re-entered
/// its stored row `(ϑ, κ)` and polynomial `A` give the restart `x·A` at row
/// `(ϑ, κ−1)` with the stored discrepancy; at the top of a sub-band
/// (`κ = 0`) the restart is `(ϑ−1, n−1)` with zero discrepancy.
pub fn fia_gs(set: &SyndromeSet) -> Result<BandOutcome> {
    fia_gs_with(set, FiaOptions::default())
}

pub fn fia_gs_with(set: &SyndromeSet, opts: FiaOptions) -> Result<BandOutcome> {
    let f = set.field();
    let n = set.n();
    let bounds = set.bounds();
    let ell = set.list_size();
    let cols = OrderH::new(bounds, weight_of(set));
    let rows = OrderV::new(n, set.multiplicity());
    let total = rows.len();

    let mut stored_d = vec![Fe::ZERO; total];
    let mut stored_t: Vec<Option<Dense>> = (0..total).map(|_| None).collect();
    let mut last_row: Vec<Option<usize>> = vec![None; ell + 1];
    let mut trace = FiaTrace::default();

    let mut col = 0usize;
    let mut r = 0usize;
    let mut t = Dense::zero(bounds);
    let mut delta: Fe;
    let mut compute = false;
    while r < total {
        let (nu, mu) = cols.pair(col);
        if compute {
            let (th, ka) = rows.pair(r);
            delta = t.inner(f, set, th, ka);
        } else {
            match last_row[nu] {
                Some(stored) if stored >= 1 => {
                    t = stored_t[stored].as_ref().expect("stored row").times_x();
                    delta = stored_d[stored];
                    let (mut th, mut ka) = rows.pair(stored);
                    if ka == 0 {
                        th -= 1;
                        ka = n;
                        delta = Fe::ZERO;
                    }
                    ka -= 1;
                    r = rows.index(th, ka).expect("restart row in range");
                }
                _ => {
                    t = Dense::monomial(bounds, nu, mu);
                    delta = set.block(0, nu)[mu];
                    r = 0;
                }
            }
            compute = true;
        }
        let (th, ka) = rows.pair(r);
        let is_true = !delta.is_zero() && stored_d[r].is_zero();
        trace.push(TraceStep { column: col, nu, mu, row: r, theta: th, kappa: ka, true_discrepancy: is_true });
        if !is_true {
            if !delta.is_zero() {
                let factor = f.mul(delta, f.inv_nz(stored_d[r]));
                t.eliminate(f, stored_t[r].as_ref().expect("stored row"), factor);
            }
            r += 1;
        } else {
            if opts.check_invariants {
                check_passed_rows(set, &rows, &t, r);
            }
            stored_d[r] = delta;
            last_row[nu] = Some(r);
            compute = false;
            col += 1;
            stored_t[r] = Some(std::mem::replace(&mut t, Dense::zero(&[])));
            if col >= cols.len() {
                return Err(Error::ColumnsExhausted);
            }
        }
    }
    if opts.check_invariants {
        check_passed_rows(set, &rows, &t, total);
    }
    Ok(BandOutcome { poly: t.into_bipoly(f, bounds), trace })
}

/// `k − 1`, recovered from consecutive degree bounds (`N_t − N_(t+1)`).
fn weight_of(set: &SyndromeSet) -> usize {
    let b = set.bounds();
    if b.len() >= 2 {
        b[0] - b[1]
    } else {
        0
    }
}
