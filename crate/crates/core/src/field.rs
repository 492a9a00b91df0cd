//! Arithmetic in GF(p^m) for q = p^m ≤ 2^16.
//!
//! Elements are encoded by their index in `[0, q)`: for prime fields the
//! residue itself, for extension fields the coefficient vector over GF(p)
//! (low degree first) read as a base-p integer. Multiplication goes through
//! log/antilog tables; addition in odd-characteristic extension fields uses a
//! Zech logarithm table so every operation is a couple of table lookups.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Parameters identifying a finite field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    /// Characteristic.
    pub p: u32,
    /// Extension degree.
    pub m: u32,
    /// Monic irreducible polynomial of degree `m` over GF(p), coefficients
    /// low-to-high (length `m + 1`). Ignored when `m == 1`.
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, m: 1, modulus: Vec::new() }
    }

    pub fn extension(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec { p, m, modulus }
    }
}

/// A field element, stored as its canonical index in `[0, q)`.
///
/// Elements carry no reference to their field; arithmetic goes through a
/// [`Field`] handle. Polynomials and codes pin the field and reject mixing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
enum Addition {
    /// m = 1: integer addition mod p.
    Modular,
    /// p = 2: XOR of bit vectors.
    Xor,
    /// Odd p, m > 1: `zech[i] = log(1 + g^i)`, `u32::MAX` when `1 + g^i = 0`.
    Zech(Vec<u32>),
}

#[derive(Debug)]
struct Inner {
    spec: FieldSpec,
    q: u32,
    /// `exp[i] = g^i` for `i < 2(q - 1)`.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    addition: Addition,
    /// Factorials mod p and their inverses, for Lucas binomials.
    fact: Vec<u32>,
    inv_fact: Vec<u32>,
}

/// Shared, immutable handle to a finite field.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.spec.p, self.0.spec.m)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` divided by the monic polynomial `b` over GF(p).
/// Both are coefficient vectors low-to-high.
fn poly_rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let t = (lead as u64 * bc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=m/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if poly_rem_mod_p(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut index: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(index % p);
        index /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Slow reference multiplication used only to build tables.
fn slow_mul(a: u32, b: u32, spec: &FieldSpec) -> u32 {
    let p = spec.p;
    if spec.m == 1 {
        return (a as u64 * b as u64 % p as u64) as u32;
    }
    let m = spec.m as usize;
    let da = digits(a, p, m);
    let db = digits(b, p, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let mut r = poly_rem_mod_p(&prod, &spec.modulus, p);
    r.resize(m, 0);
    undigits(&r, p)
}

fn slow_add(a: u32, b: u32, spec: &FieldSpec) -> u32 {
    let p = spec.p;
    let m = spec.m as usize;
    let da = digits(a, p, m);
    let db = digits(b, p, m);
    let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
    undigits(&sum, p)
}

impl Field {
    /// Builds the field, validating the characteristic and modulus.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        if spec.m < 1 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if !is_prime(spec.p) {
            return Err(Error::InvalidField(format!("{} is not prime", spec.p)));
        }
        let q64 = (spec.p as u64).checked_pow(spec.m).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER as u64 {
            return Err(Error::InvalidField(format!("order {}^{} exceeds 2^16", spec.p, spec.m)));
        }
        let q = q64 as u32;
        let mut spec = spec;
        if spec.m == 1 {
            spec.modulus = Vec::new();
        } else {
            if spec.modulus.len() != spec.m as usize + 1 {
                return Err(Error::InvalidField(format!(
                    "modulus must have {} coefficients",
                    spec.m + 1
                )));
            }
            if spec.modulus.iter().any(|&c| c >= spec.p) {
                return Err(Error::InvalidField("modulus coefficient not reduced mod p".into()));
            }
            if *spec.modulus.last().unwrap() != 1 {
                return Err(Error::InvalidField("modulus must be monic".into()));
            }
            if !is_irreducible(&spec.modulus, spec.p) {
                return Err(Error::InvalidField("modulus is reducible".into()));
            }
        }

        // Find a primitive element by brute force on the multiplicative order.
        let order = q - 1;
        let mut exp = Vec::with_capacity(2 * order as usize);
        if q == 2 {
            exp.extend([1, 1]);
        } else {
            let mut found = false;
            for g in 2..q {
                exp.clear();
                let mut x = 1u32;
                for _ in 0..order {
                    exp.push(x);
                    x = slow_mul(x, g, &spec);
                    if x == 1 {
                        break;
                    }
                }
                if exp.len() == order as usize {
                    found = true;
                    break;
                }
            }
            // Irreducible modulus guarantees a cyclic multiplicative group.
            debug_assert!(found);
            let first: Vec<u32> = exp.clone();
            exp.extend(first);
        }
        let mut log = vec![0u32; q as usize];
        for i in 0..order {
            log[exp[i as usize] as usize] = i;
        }

        let addition = if spec.m == 1 {
            Addition::Modular
        } else if spec.p == 2 {
            Addition::Xor
        } else {
            let zech = (0..order)
                .map(|i| {
                    let v = slow_add(1, exp[i as usize], &spec);
                    if v == 0 {
                        u32::MAX
                    } else {
                        log[v as usize]
                    }
                })
                .collect();
            Addition::Zech(zech)
        };

        let p = spec.p as u64;
        let mut fact = vec![1u32; spec.p as usize];
        for i in 1..spec.p as usize {
            fact[i] = (fact[i - 1] as u64 * i as u64 % p) as u32;
        }
        let inv_fact = fact
            .iter()
            .map(|&f| mod_pow(f as u64, p - 2, p) as u32)
            .collect();

        Ok(Field(Arc::new(Inner { spec, q, exp, log, addition, fact, inv_fact })))
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec::prime(p))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    /// Element with the given canonical index.
    pub fn elem(&self, index: u64) -> Result<Fe> {
        if index >= self.0.q as u64 {
            return Err(Error::NotAnElement { value: index, q: self.0.q });
        }
        Ok(Fe(index as u32))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.0.spec.p as i64) as u32)
    }

    /// The primitive element whose powers index the log tables.
    pub fn generator(&self) -> Fe {
        Fe(self.0.exp[1 % self.0.exp.len()])
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    /// All nonzero elements in generator order `g^0, g^1, ..., g^(q-2)`.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        self.0.exp[..(self.0.q - 1) as usize].iter().map(|&v| Fe(v))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.addition {
            Addition::Modular => {
                let s = a.0 + b.0;
                let p = self.0.spec.p;
                Fe(if s >= p { s - p } else { s })
            }
            Addition::Xor => Fe(a.0 ^ b.0),
            Addition::Zech(zech) => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let order = self.0.q - 1;
                let la = self.0.log[a.0 as usize];
                let lb = self.0.log[b.0 as usize];
                let d = if lb >= la { lb - la } else { lb + order - la };
                let z = zech[d as usize];
                if z == u32::MAX {
                    Fe(0)
                } else {
                    Fe(self.0.exp[(la + z) as usize])
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        match &self.0.addition {
            Addition::Modular => {
                if a.0 == 0 {
                    a
                } else {
                    Fe(self.0.spec.p - a.0)
                }
            }
            Addition::Xor => a,
            Addition::Zech(_) => self.mul(a, Fe(self.0.spec.p - 1)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let l = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Fe(self.0.exp[l as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Ok(Fe(self.0.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Inverse of an element the caller knows to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Fe) -> Fe {
        self.inv(a).expect("inverse of a value checked nonzero")
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe(1);
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64 * (e % order) % order;
        Fe(self.0.exp[l as usize])
    }

    /// Binomial coefficient `C(n, k)` reduced into the prime subfield
    /// (Lucas' theorem on base-p digits).
    pub fn binomial(&self, mut n: usize, mut k: usize) -> Fe {
        if k > n {
            return Fe(0);
        }
        let p = self.0.spec.p as usize;
        let mut acc: u64 = 1;
        while k > 0 || n > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return Fe(0);
            }
            acc = acc * self.0.fact[nd] as u64 % p as u64 * self.0.inv_fact[kd] as u64 % p as u64
                * self.0.inv_fact[nd - kd] as u64
                % p as u64;
            n /= p;
            k /= p;
        }
        Fe(acc as u32)
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe(0), |acc, x| self.add(acc, x))
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(FieldSpec::extension(2, 2, vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn constructs_reference_and_small_fields() {
        assert_eq!(Field::prime(17).unwrap().order(), 17);
        assert_eq!(gf4().order(), 4);
        assert!(matches!(Field::prime(15), Err(Error::InvalidField(_))));
        assert!(Field::new(FieldSpec { p: 2, m: 0, modulus: vec![] }).is_err());
    }

    #[test]
    fn rejects_reducible_or_oversized() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(Field::new(FieldSpec::extension(2, 2, vec![1, 0, 1])).is_err());
        // x^2 + 1 is irreducible over GF(3)
        assert!(Field::new(FieldSpec::extension(3, 2, vec![1, 0, 1])).is_ok());
        assert!(Field::new(FieldSpec::extension(2, 17, vec![0; 18])).is_err());
        assert!(Field::new(FieldSpec::extension(2, 2, vec![1, 1, 2])).is_err());
    }

    #[test]
    fn inverse_examples() {
        let f = Field::prime(17).unwrap();
        assert_eq!(f.inv(Fe::ONE).unwrap(), Fe::ONE);
        // exhaustive scan of the multiplication table for 2·b = 1
        let two = f.elem(2).unwrap();
        let scanned = (0..17u64)
            .map(|b| f.elem(b).unwrap())
            .find(|&b| (2 * b.index()) % 17 == 1)
            .unwrap();
        assert_eq!(scanned.index(), 9);
        assert_eq!(f.inv(two).unwrap(), scanned);
        assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_fields_match_integer_arithmetic() {
        for p in [2u32, 3, 5, 7, 11, 13, 17] {
            let f = Field::prime(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    let (x, y) = (Fe(a), Fe(b));
                    assert_eq!(f.add(x, y).index(), (a + b) % p);
                    assert_eq!(f.sub(x, y).index(), (a + p - b) % p);
                    assert_eq!(f.mul(x, y).index(), a * b % p);
                }
            }
        }
    }

    #[test]
    fn fermat_exhaustive_small_fields() {
        let fields = [
            Field::prime(17).unwrap(),
            gf4(),
            Field::new(FieldSpec::extension(3, 2, vec![1, 0, 1])).unwrap(),
            Field::new(FieldSpec::extension(2, 5, vec![1, 0, 1, 0, 0, 1])).unwrap(),
            Field::new(FieldSpec::extension(2, 6, vec![1, 1, 0, 0, 0, 0, 1])).unwrap(),
            Field::new(FieldSpec::extension(5, 2, vec![2, 1, 1])).unwrap(),
        ];
        for f in &fields {
            let q = f.order() as u64;
            assert!(q <= 64);
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1), Fe::ONE, "{f:?} a={a}");
                // repeated multiplication, independent of the log tables' pow
                let mut acc = Fe::ONE;
                for _ in 0..q - 1 {
                    acc = f.mul(acc, a);
                }
                assert_eq!(acc, Fe::ONE);
            }
            assert_eq!(f.nonzero_elements().count() as u64, q - 1);
        }
    }

    #[test]
    fn extension_matches_reference_multiplication() {
        let spec = FieldSpec::extension(3, 2, vec![1, 0, 1]);
        let f = Field::new(spec.clone()).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.mul(Fe(a), Fe(b)).index(), slow_mul(a, b, &spec));
                assert_eq!(f.add(Fe(a), Fe(b)).index(), slow_add(a, b, &spec));
            }
        }
    }

    #[test]
    fn lucas_binomials() {
        let f = Field::prime(5).unwrap();
        let mut pascal = vec![vec![0u64; 30]; 30];
        for n in 0..30 {
            pascal[n][0] = 1;
            for k in 1..=n {
                pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 5;
            }
        }
        for n in 0..30 {
            for k in 0..30 {
                assert_eq!(f.binomial(n, k).index() as u64, pascal[n][k], "C({n},{k})");
            }
        }
        let g = gf4();
        assert_eq!(g.binomial(3, 1), Fe::ONE);
        assert_eq!(g.binomial(2, 1), Fe::ZERO);
    }
}
