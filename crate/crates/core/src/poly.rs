//! Dense univariate and bivariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

fn assert_same_field(a: &Field, b: &Field) {
    assert!(a == b, "polynomials over different fields: {a:?} vs {b:?}");
}

/// Univariate polynomial, coefficients low-to-high with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs.iter().map(|c| c.index()).collect::<Vec<_>>())
    }
}

impl fmt::Display for UniPoly {
    /// Coefficient list, low-to-high, space separated; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl UniPoly {
    pub fn zero(field: &Field) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, Fe::ONE)
    }

    pub fn constant(field: &Field, c: Fe) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c · x^i`.
    pub fn monomial(field: &Field, i: usize, c: Fe) -> Self {
        let mut v = vec![Fe::ZERO; i + 1];
        v[i] = c;
        Self::from_coeffs(field, v)
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    /// Builds from canonical indices; fails if any index is not a field element.
    pub fn from_indices(field: &Field, idx: &[u64]) -> Result<Self> {
        let coeffs = idx.iter().map(|&v| field.elem(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// `None` is the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        assert_same_field(&self.field, &other.field);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        UniPoly::from_coeffs(f, v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        assert_same_field(&self.field, &other.field);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        UniPoly::from_coeffs(f, v)
    }

    pub fn neg(&self) -> UniPoly {
        let f = &self.field;
        UniPoly { field: f.clone(), coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn scale(&self, c: Fe) -> UniPoly {
        let f = &self.field;
        UniPoly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        assert_same_field(&self.field, &other.field);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let f = &self.field;
        let mut v = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        UniPoly::from_coeffs(f, v)
    }

    /// Product truncated modulo `x^n`.
    pub fn mul_trunc(&self, other: &UniPoly, n: usize) -> UniPoly {
        assert_same_field(&self.field, &other.field);
        let f = &self.field;
        let mut v = vec![Fe::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n - i) {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        UniPoly::from_coeffs(f, v)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Fe::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        UniPoly { field: self.field.clone(), coeffs: v }
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        assert_same_field(&self.field, &divisor.field);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv_nz(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::from_coeffs(f, quot), UniPoly::from_coeffs(f, rem)))
    }

    /// Keeps only the coefficients of `x^0 .. x^(n-1)`.
    pub fn truncate(&self, n: usize) -> UniPoly {
        UniPoly::from_coeffs(&self.field, self.coeffs.iter().take(n).copied().collect())
    }
}

/// Lagrange interpolation through `points`; result has degree `< points.len()`.
pub fn lagrange(field: &Field, points: &[(Fe, Fe)]) -> Result<UniPoly> {
    let f = field;
    for (i, a) in points.iter().enumerate() {
        if points[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::DuplicateNode);
        }
    }
    // Newton form via divided differences, then expand.
    let n = points.len();
    let xs: Vec<Fe> = points.iter().map(|p| p.0).collect();
    let mut dd: Vec<Fe> = points.iter().map(|p| p.1).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            let den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.mul(num, f.inv_nz(den));
        }
    }
    let mut result = UniPoly::zero(f);
    for i in (0..n).rev() {
        // result = result·(x − x_i) + dd[i]
        let lin = UniPoly::from_coeffs(f, vec![f.neg(xs[i]), Fe::ONE]);
        result = result.mul(&lin).add(&UniPoly::constant(f, dd[i]));
    }
    Ok(result)
}

/// `x^(n-1) · A(1/x)`: coefficient `j` of the result is `A_(n-1-j)`.
pub fn reciprocal(a: &UniPoly, n: usize) -> Result<UniPoly> {
    if let Some(d) = a.degree() {
        if d >= n {
            return Err(Error::DegreeTooLarge { degree: d, bound: n });
        }
    }
    let v = (0..n).map(|j| a.coeff(n - 1 - j)).collect();
    Ok(UniPoly::from_coeffs(a.field(), v))
}

/// First `n` coefficients of the formal power series `num / den`.
pub fn series_div(num: &UniPoly, den: &UniPoly, n: usize) -> Result<UniPoly> {
    assert_same_field(num.field(), den.field());
    let f = num.field();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::SeriesUndefined);
    }
    let d0_inv = f.inv_nz(d0);
    let den_c = den.coeffs();
    let mut out = vec![Fe::ZERO; n];
    for i in 0..n {
        let mut acc = num.coeff(i);
        for j in 1..den_c.len().min(i + 1) {
            acc = f.sub(acc, f.mul(den_c[j], out[i - j]));
        }
        out[i] = f.mul(acc, d0_inv);
    }
    Ok(UniPoly::from_coeffs(f, out))
}

/// Bivariate polynomial `Σ_t A^(t)(x) y^t`, stored as one [`UniPoly`] per y-degree.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: Field,
    rows: Vec<UniPoly>,
    bounds: Option<Vec<usize>>,
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl fmt::Display for BiPoly {
    /// One row per y-degree, each a low-to-high coefficient list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, row) in self.rows.iter().enumerate() {
            if t > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl BiPoly {
    pub fn zero(field: &Field) -> Self {
        BiPoly { field: field.clone(), rows: Vec::new(), bounds: None }
    }

    pub fn from_rows(field: &Field, rows: Vec<UniPoly>) -> Self {
        for r in &rows {
            assert_same_field(field, r.field());
        }
        let mut p = BiPoly { field: field.clone(), rows, bounds: None };
        p.trim();
        p
    }

    /// Attaches per-row degree bounds `deg A^(t) < bounds[t]`.
    pub fn with_bounds(mut self, bounds: Vec<usize>) -> Result<Self> {
        for (t, row) in self.rows.iter().enumerate() {
            let bound = bounds.get(t).copied().unwrap_or(0);
            if let Some(d) = row.degree() {
                if d >= bound {
                    return Err(Error::DegreeTooLarge { degree: d, bound });
                }
            }
        }
        self.bounds = Some(bounds);
        Ok(self)
    }

    pub fn bounds(&self) -> Option<&[usize]> {
        self.bounds.as_deref()
    }

    /// `c · x^i y^j`.
    pub fn monomial(field: &Field, i: usize, j: usize, c: Fe) -> Self {
        let mut rows = vec![UniPoly::zero(field); j];
        rows.push(UniPoly::monomial(field, i, c));
        BiPoly::from_rows(field, rows)
    }

    /// `y - f(x)`.
    pub fn y_minus(f: &UniPoly) -> Self {
        let field = f.field();
        BiPoly::from_rows(field, vec![f.neg(), UniPoly::one(field)])
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(|r| r.is_zero()) {
            self.rows.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    /// Row `t` (the coefficient of `y^t`), zero beyond the y-degree.
    pub fn row(&self, t: usize) -> UniPoly {
        self.rows.get(t).cloned().unwrap_or_else(|| UniPoly::zero(&self.field))
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        self.rows.get(j).map_or(Fe::ZERO, |r| r.coeff(i))
    }

    /// Nonzero coefficients as `(i, j, value)` for `x^i y^j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Fe)> + '_ {
        self.rows.iter().enumerate().flat_map(|(j, r)| {
            r.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (i, j, c))
        })
    }

    pub fn eval(&self, x: Fe, y: Fe) -> Fe {
        let f = &self.field;
        self.rows.iter().rev().fold(Fe::ZERO, |acc, r| f.add(f.mul(acc, y), r.eval(x)))
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        assert_same_field(&self.field, &other.field);
        let n = self.rows.len().max(other.rows.len());
        let rows = (0..n).map(|t| self.row(t).add(&other.row(t))).collect();
        BiPoly::from_rows(&self.field, rows)
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        assert_same_field(&self.field, &other.field);
        let n = self.rows.len().max(other.rows.len());
        let rows = (0..n).map(|t| self.row(t).sub(&other.row(t))).collect();
        BiPoly::from_rows(&self.field, rows)
    }

    pub fn scale(&self, c: Fe) -> BiPoly {
        BiPoly::from_rows(&self.field, self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        assert_same_field(&self.field, &other.field);
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero(&self.field);
        }
        let mut rows = vec![UniPoly::zero(&self.field); self.rows.len() + other.rows.len() - 1];
        for (a, ra) in self.rows.iter().enumerate() {
            for (b, rb) in other.rows.iter().enumerate() {
                rows[a + b] = rows[a + b].add(&ra.mul(rb));
            }
        }
        BiPoly::from_rows(&self.field, rows)
    }

    /// Multiplication by `x^k`.
    pub fn shift_x(&self, k: usize) -> BiPoly {
        BiPoly::from_rows(&self.field, self.rows.iter().map(|r| r.shift(k)).collect())
    }

    /// Hasse derivative `A^[a,b]` as a polynomial: coefficient `(i, j)` is
    /// `C(i+a, a) · C(j+b, b) · A_(i+a)^(j+b)` with binomials mod p.
    pub fn hasse(&self, a: usize, b: usize) -> BiPoly {
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .skip(b)
            .map(|(j, r)| {
                let cb = f.binomial(j, b);
                let v = r
                    .coeffs()
                    .iter()
                    .enumerate()
                    .skip(a)
                    .map(|(i, &c)| f.mul(f.mul(c, cb), f.binomial(i, a)))
                    .collect();
                UniPoly::from_coeffs(f, v)
            })
            .collect();
        BiPoly::from_rows(f, rows)
    }

    /// `A^[a,b](α, β)` evaluated directly from the defining sum.
    pub fn hasse_eval(&self, a: usize, b: usize, alpha: Fe, beta: Fe) -> Fe {
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for (i, j, c) in self.terms() {
            if i < a || j < b {
                continue;
            }
            let w = f.mul(f.binomial(i, a), f.binomial(j, b));
            let m = f.mul(f.pow(alpha, (i - a) as u64), f.pow(beta, (j - b) as u64));
            acc = f.add(acc, f.mul(c, f.mul(w, m)));
        }
        acc
    }

    /// Largest `s` with `A^[a,b](α, β) = 0` for every `a + b < s`.
    pub fn multiplicity_at(&self, alpha: Fe, beta: Fe) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let max_total = self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0);
        for d in 0..=max_total {
            for a in 0..=d {
                if !self.hasse_eval(a, d - a, alpha, beta).is_zero() {
                    return Ok(d);
                }
            }
        }
        // A nonzero polynomial cannot vanish to order beyond its total degree.
        unreachable!("nonzero polynomial with all Hasse derivatives zero")
    }

    /// `(wx, wy)`-weighted degree; `None` for the zero polynomial.
    pub fn wdeg(&self, wx: i64, wy: i64) -> Option<i64> {
        self.terms().map(|(i, j, _)| i as i64 * wx + j as i64 * wy).max()
    }

    /// `Σ_(i,j) A_i^(j) B_i^(j)`.
    pub fn inner_product(&self, other: &BiPoly) -> Fe {
        assert_same_field(&self.field, &other.field);
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for (ra, rb) in self.rows.iter().zip(&other.rows) {
            for (&a, &b) in ra.coeffs().iter().zip(rb.coeffs()) {
                acc = f.add(acc, f.mul(a, b));
            }
        }
        acc
    }

    /// `Σ_t A^(t)(x) · R(x)^t`.
    pub fn eval_y_subst(&self, r: &UniPoly) -> UniPoly {
        assert_same_field(&self.field, r.field());
        self.rows.iter().rev().fold(UniPoly::zero(&self.field), |acc, row| acc.mul(r).add(row))
    }

    /// `A(x, y + γ)`, a Taylor shift in `y`.
    pub fn shift_y(&self, gamma: Fe) -> BiPoly {
        let f = &self.field;
        // Horner in y: acc = acc·(y + γ) + row
        let mut acc: Vec<UniPoly> = Vec::new();
        for row in self.rows.iter().rev() {
            let mut next = vec![UniPoly::zero(f); acc.len() + 1];
            for (t, r) in acc.iter().enumerate() {
                next[t + 1] = next[t + 1].add(r);
                next[t] = next[t].add(&r.scale(gamma));
            }
            next[0] = next[0].add(row);
            acc = next;
        }
        BiPoly::from_rows(f, acc)
    }

    /// Divides by `y − f(x)` as a polynomial in `y` over `F[x]`:
    /// returns `(quotient, remainder)` with remainder `A(x, f(x))`.
    pub fn div_y_minus(&self, fx: &UniPoly) -> (BiPoly, UniPoly) {
        let f = &self.field;
        if self.rows.is_empty() {
            return (BiPoly::zero(f), UniPoly::zero(f));
        }
        let l = self.rows.len() - 1;
        let mut quot = vec![UniPoly::zero(f); l];
        let mut carry = UniPoly::zero(f);
        for t in (0..=l).rev() {
            let cur = self.rows[t].add(&carry.mul(fx));
            if t == 0 {
                return (BiPoly::from_rows(f, quot), cur);
            }
            quot[t - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }
}
