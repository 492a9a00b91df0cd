//! Generalized Reed–Solomon codes.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{lagrange, UniPoly};

/// A GRS(n, k) code: evaluations `c_i = υ'_i · f(α_i)` of polynomials `f`
/// with `deg f < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsCode {
    field: Field,
    k: usize,
    alphas: Vec<Fe>,
    vprimes: Vec<Fe>,
    v_dual: Vec<Fe>,
}

impl GrsCode {
    pub fn new(field: &Field, k: usize, alphas: Vec<Fe>, vprimes: Vec<Fe>) -> Result<Self> {
        let n = alphas.len();
        if vprimes.len() != n {
            return Err(Error::WrongLength { expected: n, got: vprimes.len() });
        }
        if k == 0 {
            return Err(Error::InvalidCode("dimension must be at least 1".into()));
        }
        if k >= n {
            return Err(Error::InvalidCode(format!("need k < n, got k={k}, n={n}")));
        }
        if n as u64 >= field.order() as u64 {
            return Err(Error::InvalidCode(format!(
                "length {n} needs n < q = {}",
                field.order()
            )));
        }
        if alphas.iter().any(|a| a.is_zero()) {
            return Err(Error::InvalidCode("code locators must be nonzero".into()));
        }
        for (i, a) in alphas.iter().enumerate() {
            if alphas[..i].contains(a) {
                return Err(Error::InvalidCode(format!("repeated locator {a}")));
            }
        }
        if vprimes.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidCode("column multipliers must be nonzero".into()));
        }
        let v_dual = dual_multipliers(field, &alphas, &vprimes);
        Ok(GrsCode { field: field.clone(), k, alphas, vprimes, v_dual })
    }

    /// Primitive code: all `q − 1` nonzero elements in generator order, `υ'_i = 1`.
    pub fn primitive(field: &Field, k: usize) -> Result<Self> {
        let n = field.order() as usize - 1;
        Self::from_generator_powers(field, n, k)
    }

    /// Locators `g^0, …, g^(n−1)` for the field's primitive element `g`, `υ'_i = 1`.
    pub fn from_generator_powers(field: &Field, n: usize, k: usize) -> Result<Self> {
        let alphas: Vec<Fe> = field.nonzero_elements().take(n).collect();
        if alphas.len() < n {
            return Err(Error::InvalidCode(format!(
                "length {n} needs n < q = {}",
                field.order()
            )));
        }
        Self::new(field, k, alphas, vec![Fe::ONE; n])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n − k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn alphas(&self) -> &[Fe] {
        &self.alphas
    }

    pub fn vprimes(&self) -> &[Fe] {
        &self.vprimes
    }

    /// Column multipliers `υ_i` of the dual code.
    pub fn v_dual(&self) -> &[Fe] {
        &self.v_dual
    }

    pub fn encode(&self, f: &UniPoly) -> Result<Vec<Fe>> {
        if let Some(d) = f.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooLarge { degree: d, bound: self.k });
            }
        }
        let fld = &self.field;
        Ok(self.alphas.iter().zip(&self.vprimes).map(|(&a, &v)| fld.mul(v, f.eval(a))).collect())
    }

    /// Interpolation points `(α_i, r_i / υ'_i)` of a received word.
    pub fn points(&self, r: &[Fe]) -> Result<Vec<(Fe, Fe)>> {
        self.check_len(r)?;
        let f = &self.field;
        Ok(self
            .alphas
            .iter()
            .zip(&self.vprimes)
            .zip(r)
            .map(|((&a, &v), &ri)| (a, f.mul(ri, f.inv_nz(v))))
            .collect())
    }

    /// Lagrange polynomial `R(x)` with `R(α_i) = r_i / υ'_i`.
    pub fn received_poly(&self, r: &[Fe]) -> Result<UniPoly> {
        lagrange(&self.field, &self.points(r)?)
    }

    /// Message polynomial of a codeword, or `None` if `c` is not a codeword.
    pub fn message_of(&self, c: &[Fe]) -> Result<Option<UniPoly>> {
        let f = self.received_poly(c)?;
        Ok(match f.degree() {
            Some(d) if d >= self.k => None,
            _ => Some(f),
        })
    }

    /// `G(x) = Π (x − α_i)`.
    pub fn locator_poly(&self) -> UniPoly {
        let f = &self.field;
        self.alphas.iter().fold(UniPoly::one(f), |acc, &a| {
            acc.mul(&UniPoly::from_coeffs(f, vec![f.neg(a), Fe::ONE]))
        })
    }

    pub(crate) fn check_len(&self, r: &[Fe]) -> Result<()> {
        if r.len() != self.n() {
            return Err(Error::WrongLength { expected: self.n(), got: r.len() });
        }
        if let Some(bad) = r.iter().find(|e| e.index() >= self.field.order()) {
            return Err(Error::NotAnElement { value: bad.index() as u64, q: self.field.order() });
        }
        Ok(())
    }
}

/// `υ_i = 1/υ'_i · 1/Π_(j≠i)(α_i − α_j)`.
pub fn dual_multipliers(field: &Field, alphas: &[Fe], vprimes: &[Fe]) -> Vec<Fe> {
    alphas
        .iter()
        .zip(vprimes)
        .enumerate()
        .map(|(i, (&ai, &vi))| {
            let prod = alphas
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Fe::ONE, |acc, (_, &aj)| field.mul(acc, field.sub(ai, aj)));
            field.inv_nz(field.mul(vi, prod))
        })
        .collect()
}

/// Number of positions where `a` and `b` differ.
pub fn hamming_distance(a: &[Fe], b: &[Fe]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf17() -> Field {
        Field::prime(17).unwrap()
    }

    #[test]
    fn rs16_4_is_valid() {
        let f = gf17();
        let code = GrsCode::primitive(&f, 4).unwrap();
        assert_eq!((code.n(), code.k(), code.d()), (16, 4, 13));
    }

    #[test]
    fn construction_errors() {
        let f = gf17();
        let all: Vec<Fe> = f.elements().collect();
        assert!(GrsCode::new(&f, 4, all.clone(), vec![Fe::ONE; 17]).is_err());
        assert!(GrsCode::primitive(&f, 0).is_err());
        assert!(GrsCode::primitive(&f, 16).is_err());
        let one = f.elem(1).unwrap();
        assert!(GrsCode::new(&f, 1, vec![one, one], vec![one, one]).is_err());
        assert!(GrsCode::new(&f, 1, vec![Fe::ZERO, one], vec![one, one]).is_err());
        let two = f.elem(2).unwrap();
        assert!(GrsCode::new(&f, 1, vec![one, two], vec![one, Fe::ZERO]).is_err());
    }

    #[test]
    fn dual_multipliers_two_points() {
        let f = gf17();
        let (one, two) = (f.elem(1).unwrap(), f.elem(2).unwrap());
        let code = GrsCode::new(&f, 1, vec![one, two], vec![one, one]).unwrap();
        assert_eq!(code.v_dual(), &[f.elem(16).unwrap(), one]);
        let s0 = f.add(code.v_dual()[0], code.v_dual()[1]);
        assert!(s0.is_zero());
    }

    #[test]
    fn dual_orthogonality_rs16_4() {
        let f = gf17();
        let code = GrsCode::primitive(&f, 4).unwrap();
        for j in 0..=14u64 {
            let s = f.sum((0..16).map(|i| {
                f.mul(f.mul(code.vprimes()[i], code.v_dual()[i]), f.pow(code.alphas()[i], j))
            }));
            assert!(s.is_zero(), "j={j}");
        }
    }

    #[test]
    fn scaling_vprimes_scales_dual_inversely() {
        let f = gf17();
        let alphas: Vec<Fe> = (1..=6).map(|v| f.elem(v).unwrap()).collect();
        let c = f.elem(5).unwrap();
        let a = GrsCode::new(&f, 2, alphas.clone(), vec![Fe::ONE; 6]).unwrap();
        let b = GrsCode::new(&f, 2, alphas, vec![c; 6]).unwrap();
        let cinv = f.inv(c).unwrap();
        for (x, y) in a.v_dual().iter().zip(b.v_dual()) {
            assert_eq!(f.mul(*x, cinv), *y);
        }
    }

    #[test]
    fn locator_poly_examples() {
        let f = gf17();
        // k < n forbids n = 1, so check the two-locator product (x − 7)(x − 3)
        let two = GrsCode::new(&f, 1, vec![f.elem(7).unwrap(), f.elem(3).unwrap()], vec![Fe::ONE; 2])
            .unwrap();
        assert_eq!(two.locator_poly(), UniPoly::from_indices(&f, &[21 % 17, 17 - 10, 1]).unwrap());
        let code = GrsCode::primitive(&f, 4).unwrap();
        let mut expected = vec![Fe::ZERO; 17];
        expected[0] = f.elem(16).unwrap();
        expected[16] = Fe::ONE;
        let big_g = code.locator_poly();
        assert_eq!(big_g, UniPoly::from_coeffs(&f, expected));
        assert!(code.alphas().iter().all(|&a| big_g.eval(a).is_zero()));
    }

    #[test]
    fn encode_examples() {
        let f = gf17();
        let code = GrsCode::primitive(&f, 4).unwrap();
        assert!(code.encode(&UniPoly::zero(&f)).unwrap().iter().all(|c| c.is_zero()));
        let c = f.elem(6).unwrap();
        assert!(code.encode(&UniPoly::constant(&f, c)).unwrap().iter().all(|&x| x == c));
        let too_big = UniPoly::monomial(&f, 4, Fe::ONE);
        assert!(code.encode(&too_big).is_err());
    }
}
