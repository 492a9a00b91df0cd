//! Slow reference implementations used to check the structured algorithms:
//! direct constraint matrices, Gaussian elimination, an interpolation
//! verifier and exhaustive decoding.

use std::fmt;

use crate::code::{hamming_distance, GrsCode};
use crate::decoder::{Candidate, DecodeParams};
use crate::error::{Error, Result};
use crate::fia::{OrderH, OrderV};
use crate::field::{Fe, Field};
use crate::matrix::Matrix;
use crate::poly::{BiPoly, UniPoly};
use crate::syndromes::SyndromeSet;

/// Hasse-constraint matrix of the interpolation problem.
#[derive(Debug, Clone)]
pub struct ConstraintMatrix {
    pub matrix: Matrix,
    /// `(i, a, b)`: derivative `[a, b]` at point `i` (0-based).
    pub row_labels: Vec<(usize, usize, usize)>,
    /// `(ν, μ)` in column order.
    pub col_labels: Vec<(usize, usize)>,
}

/// One row per `(i, a, b)` with `a + b < s`, one column per coefficient
/// `Q^(ν)_μ`; entry `C(μ,a)·C(ν,b)·α_i^(μ−a)·β_i^(ν−b)` with `β_i = r_i/υ'_i`.
pub fn build_constraints(code: &GrsCode, r: &[Fe], params: &DecodeParams) -> Result<ConstraintMatrix> {
    let f = code.field();
    let points = code.points(r)?;
    let cols = OrderH::new(&params.bounds, code.k() - 1);
    let col_labels = cols.pairs().to_vec();
    let mut row_labels = Vec::new();
    for i in 0..code.n() {
        for a in 0..params.s {
            for b in 0..params.s - a {
                row_labels.push((i, a, b));
            }
        }
    }
    let matrix = Matrix::from_fn(f, row_labels.len(), col_labels.len(), |row, col| {
        let (i, a, b) = row_labels[row];
        let (nu, mu) = col_labels[col];
        if mu < a || nu < b {
            return Fe::ZERO;
        }
        let (alpha, beta) = points[i];
        let w = f.mul(f.binomial(mu, a), f.binomial(nu, b));
        f.mul(w, f.mul(f.pow(alpha, (mu - a) as u64), f.pow(beta, (nu - b) as u64)))
    });
    Ok(ConstraintMatrix { matrix, row_labels, col_labels })
}

/// Coefficients of `q` listed in column order; `None` if `q` has a term
/// outside the degree bounds.
pub fn flatten(q: &BiPoly, bounds: &[usize], weight: usize) -> Option<Vec<Fe>> {
    let fits = q.terms().all(|(i, j, _)| j < bounds.len() && i < bounds[j]);
    if !fits {
        return None;
    }
    let order = OrderH::new(bounds, weight);
    Some(order.pairs().iter().map(|&(nu, mu)| q.coeff(mu, nu)).collect())
}

/// Inverse of [`flatten`].
pub fn unflatten(field: &Field, v: &[Fe], bounds: &[usize], weight: usize) -> BiPoly {
    let order = OrderH::new(bounds, weight);
    let mut rows: Vec<Vec<Fe>> = bounds.iter().map(|&nt| vec![Fe::ZERO; nt]).collect();
    for (&(nu, mu), &c) in order.pairs().iter().zip(v) {
        rows[nu][mu] = c;
    }
    BiPoly::from_rows(field, rows.into_iter().map(|r| UniPoly::from_coeffs(field, r)).collect())
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut Matrix) -> Vec<usize> {
    let f = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(p) = (pr..rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        if p != pr {
            for j in 0..cols {
                let (a, b) = (m.get(pr, j), m.get(p, j));
                m.set(pr, j, b);
                m.set(p, j, a);
            }
        }
        let inv = f.inv_nz(m.get(pr, c));
        for j in 0..cols {
            m.set(pr, j, f.mul(m.get(pr, j), inv));
        }
        for i in 0..rows {
            let factor = m.get(i, c);
            if i == pr || factor.is_zero() {
                continue;
            }
            for j in 0..cols {
                m.set(i, j, f.sub(m.get(i, j), f.mul(factor, m.get(pr, j))));
            }
        }
        pivots.push(c);
        pr += 1;
    }
    pivots
}

/// Basis of the right null space, one vector per free column, each with a
/// 1 in its free position.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Fe>> {
    let f = m.field().clone();
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let cols = m.cols();
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    (0..cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![Fe::ZERO; cols];
            v[free] = Fe::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            v
        })
        .collect()
}

/// Rank by Gaussian elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut r = m.clone();
    rref(&mut r).len()
}

/// Smallest `μ` such that columns `0..=μ` are linearly dependent, with the
/// combination normalized to coefficient 1 at `μ`.
pub fn first_dependent_column(m: &Matrix) -> Option<(usize, Vec<Fe>)> {
    (0..m.cols()).find_map(|mu| {
        let prefix = m.permute_cols(&(0..=mu).collect::<Vec<_>>());
        let basis = nullspace(&prefix);
        // columns 0..μ are independent, so the null space is one-dimensional
        basis.into_iter().next().map(|v| (mu, v))
    })
}

/// The Block-Hankel matrix, rows in sub-band order (`b` outer, `κ` inner),
/// columns in the `(1, k−1)` order.
pub fn block_hankel_matrix(set: &SyndromeSet, weight: usize) -> Matrix {
    let cols = OrderH::new(set.bounds(), weight);
    let rows: Vec<(usize, usize)> =
        (0..set.multiplicity()).flat_map(|b| (0..set.band_rows(b)).map(move |k| (b, k))).collect();
    Matrix::from_fn(set.field(), rows.len(), cols.len(), |i, j| {
        let (b, kappa) = rows[i];
        let (nu, mu) = cols.pair(j);
        set.hankel_entry(b, nu, kappa, mu).expect("index inside the block")
    })
}

/// Same matrix with rows permuted into the interleaved row order.
pub fn block_hankel_matrix_interleaved(set: &SyndromeSet, weight: usize) -> Matrix {
    let natural = block_hankel_matrix(set, weight);
    let order = OrderV::new(set.n(), set.multiplicity());
    let offset: Vec<usize> = (0..set.multiplicity()).scan(0, |acc, b| {
        let o = *acc;
        *acc += set.band_rows(b);
        Some(o)
    }).collect();
    let perm: Vec<usize> = order.pairs().iter().map(|&(th, ka)| offset[th] + ka).collect();
    natural.permute_rows(&perm)
}

/// First violated condition of the interpolation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: `Q ≠ 0`.
    ZeroPolynomial,
    /// Condition 2: `Q^[a,b](α_i, β_i) ≠ 0` with `a + b < s`.
    Multiplicity { point: usize, a: usize, b: usize },
    /// Condition 3: weighted degree below `s(n − τ)`.
    WeightedDegree { wdeg: i64, bound: i64 },
}

impl Violation {
    pub fn condition(&self) -> u8 {
        match self {
            Violation::ZeroPolynomial => 1,
            Violation::Multiplicity { .. } => 2,
            Violation::WeightedDegree { .. } => 3,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroPolynomial => write!(f, "condition 1: Q is zero"),
            Violation::Multiplicity { point, a, b } => {
                write!(f, "condition 2: Hasse derivative [{a},{b}] nonzero at point {point}")
            }
            Violation::WeightedDegree { wdeg, bound } => {
                write!(f, "condition 3: weighted degree {wdeg} is not below {bound}")
            }
        }
    }
}

/// Checks the three interpolation conditions by direct Hasse evaluation.
pub fn verify_interpolation(
    code: &GrsCode,
    r: &[Fe],
    params: &DecodeParams,
    q: &BiPoly,
) -> std::result::Result<(), Violation> {
    if q.is_zero() {
        return Err(Violation::ZeroPolynomial);
    }
    let points = code.points(r).expect("received word matches the code");
    for (i, &(alpha, beta)) in points.iter().enumerate() {
        for a in 0..params.s {
            for b in 0..params.s - a {
                if !q.hasse_eval(a, b, alpha, beta).is_zero() {
                    return Err(Violation::Multiplicity { point: i, a, b });
                }
            }
        }
    }
    let bound = (params.s * (code.n() - params.tau)) as i64;
    let wdeg = q.wdeg(1, code.k() as i64 - 1).expect("nonzero");
    if wdeg >= bound {
        return Err(Violation::WeightedDegree { wdeg, bound });
    }
    Ok(())
}

/// All codewords within distance `τ` of `r`, by scanning every message.
pub fn exhaustive_decode(code: &GrsCode, r: &[Fe], tau: usize) -> Result<Vec<Candidate>> {
    let f = code.field();
    let k = code.k();
    let total = (f.order() as u64)
        .checked_pow(k as u32)
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| Error::TooLarge(format!("{}^{k} messages", f.order())))?;
    if r.len() != code.n() {
        return Err(Error::WrongLength { expected: code.n(), got: r.len() });
    }
    // codewords are linear in the message: walk all messages as an odometer
    // and update the codeword by the change of one digit at a time
    let basis: Vec<Vec<Fe>> = (0..k)
        .map(|i| code.encode(&UniPoly::monomial(f, i, Fe::ONE)))
        .collect::<Result<_>>()?;
    let elems: Vec<Fe> = f.elements().collect();
    let mut digits = vec![0usize; k];
    let mut c = vec![Fe::ZERO; code.n()];
    let mut out = Vec::new();
    for step in 0..total {
        if step > 0 {
            let mut i = 0;
            loop {
                let old = elems[digits[i]];
                digits[i] = (digits[i] + 1) % elems.len();
                let delta = f.sub(elems[digits[i]], old);
                for (cj, &bj) in c.iter_mut().zip(&basis[i]) {
                    *cj = f.add(*cj, f.mul(delta, bj));
                }
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
        }
        let distance = hamming_distance(&c, r);
        if distance <= tau {
            let message = UniPoly::from_coeffs(f, digits.iter().map(|&d| elems[d]).collect());
            out.push(Candidate { message, codeword: c.clone(), distance });
        }
    }
    Ok(out)
}

/// Messages of the codewords nearest to `r` and their distance.
pub fn nearest_codewords(code: &GrsCode, r: &[Fe]) -> Result<(usize, Vec<Candidate>)> {
    let all = exhaustive_decode(code, r, code.n())?;
    let best = all.iter().map(|c| c.distance).min().unwrap_or(code.n());
    Ok((best, all.into_iter().filter(|c| c.distance == best).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoder::params_for;
    use crate::syndromes::gs_syndromes;

    fn rs16_4() -> GrsCode {
        let f = Field::prime(17).unwrap();
        GrsCode::from_generator_powers(&f, 16, 4).unwrap()
    }

    #[test]
    fn nullspace_trivial_cases() {
        let f = Field::prime(17).unwrap();
        let id = Matrix::from_fn(&f, 3, 3, |i, j| if i == j { Fe::ONE } else { Fe::ZERO });
        assert!(nullspace(&id).is_empty());
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(nullspace(&z).len(), 3);
    }

    #[test]
    fn constraint_shape_reference_gs() {
        let code = rs16_4();
        let p = params_for(&code, 8).unwrap();
        let r = vec![Fe::ZERO; 16];
        let cm = build_constraints(&code, &r, &p).unwrap();
        assert_eq!((cm.matrix.rows(), cm.matrix.cols()), (48, 50));
        let p7 = params_for(&code, 7).unwrap();
        let cm7 = build_constraints(&code, &r, &p7).unwrap();
        assert_eq!((cm7.matrix.rows(), cm7.matrix.cols()), (16, 18));
    }

    #[test]
    fn verifier_rejects_zero_and_high_degree() {
        let code = rs16_4();
        let f = code.field().clone();
        let p = params_for(&code, 8).unwrap();
        let r = vec![Fe::ZERO; 16];
        assert_eq!(verify_interpolation(&code, &r, &p, &BiPoly::zero(&f)), Err(Violation::ZeroPolynomial));
        let g2 = BiPoly::from_rows(&f, vec![code.locator_poly().pow(2)]);
        let err = verify_interpolation(&code, &r, &p, &g2).unwrap_err();
        assert_eq!(err, Violation::WeightedDegree { wdeg: 32, bound: 16 });
        assert_eq!(err.condition(), 3);
    }

    #[test]
    fn flatten_round_trip() {
        let f = Field::prime(17).unwrap();
        let bounds = [9, 6, 3];
        let v: Vec<Fe> = (0..18).map(|i| f.from_int(i * 5 + 1)).collect();
        let q = unflatten(&f, &v, &bounds, 3);
        assert_eq!(flatten(&q, &bounds, 3).unwrap(), v);
    }

    #[test]
    fn exhaustive_decode_trivial() {
        let f = Field::prime(5).unwrap();
        let code = GrsCode::primitive(&f, 2).unwrap();
        let c = code.encode(&UniPoly::from_indices(&f, &[1, 3]).unwrap()).unwrap();
        let near = exhaustive_decode(&code, &c, code.d() - 1).unwrap();
        assert_eq!(near.len(), 1);
        assert_eq!(near[0].codeword, c);
        assert_eq!(exhaustive_decode(&code, &c, code.n()).unwrap().len(), 25);
    }

    #[test]
    fn block_hankel_shapes() {
        let code = rs16_4();
        let r: Vec<Fe> = (0..16).map(|i| code.field().from_int(i * i + 3)).collect();
        let set = gs_syndromes(&code, &r, 2, 4, 8).unwrap();
        let m = block_hankel_matrix(&set, 3);
        assert_eq!((m.rows(), m.cols()), (48, 50));
        let mi = block_hankel_matrix_interleaved(&set, 3);
        assert_eq!(rank(&m), rank(&mi));
    }
}
