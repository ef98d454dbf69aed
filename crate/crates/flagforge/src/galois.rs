//! Arithmetic in GF(p^e) for a prime p and e >= 1.
//!
//! Elements are identified with the integers 0..q (q = p^e) through the
//! base-p expansion c0 + c1*p + ... + c_{e-1}*p^{e-1}, constant term first.
//! Every field is built over a single canonical modulus: the monic
//! irreducible of degree e over GF(p) whose coefficient vector, read as
//! base-p digits constant-term first, has the smallest integer encoding.
//! That makes element codes, matrices and serialized codes reproducible
//! across platforms and runs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest permitted field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug)]
struct FieldSpec {
    p: u64,
    e: u32,
    q: u64,
    /// e + 1 coefficients of the modulus, constant term first; always monic.
    modulus: Vec<u32>,
}

/// Handle to a finite field GF(p^e). Cloning is cheap; all operations are
/// pure functions of the operand codes.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

/// An element of some [`Field`], stored as its integer code in 0..q.
///
/// Elements carry no back reference to their field; mixing codes across
/// fields is a caller error that matrix and subspace operations guard
/// against at their own boundaries.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    /// The integer code of the element.
    pub fn code(self) -> u64 {
        u64::from(self.0)
    }

    /// Is this the additive identity?
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Build GF(p^e) over the canonical (smallest-encoding) modulus.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        let q128 = (p as u128).pow(e);
        if q128 > u128::from(MAX_ORDER) {
            return Err(Error::TooLarge(format!(
                "field order {p}^{e} exceeds the cap of {MAX_ORDER}"
            )));
        }
        let q = q128 as u64;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let prime = Field::new(p, 1)?;
            let found = smallest_irreducible(&prime, e as usize)?;
            found.into_iter().map(|c| c.0).collect()
        };
        Ok(Field(Arc::new(FieldSpec { p, e, q, modulus })))
    }

    /// Build the field of the given order, factoring it as a prime power.
    pub fn from_order(q: u64) -> Result<Field> {
        if q < 2 {
            return Err(Error::BadParams(format!("order {q} is not a prime power")));
        }
        let mut p = 2;
        while p * p <= q {
            if q.is_multiple_of(p) {
                break;
            }
            p += 1;
        }
        if p * p > q {
            p = q; // q itself is prime
        }
        let mut e = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::BadParams(format!("order {q} is not a prime power")));
        }
        Field::new(p, e)
    }

    /// Build GF(p^e) over a caller-supplied modulus (constant term first).
    ///
    /// Accepts any monic irreducible of degree e so that serialized codes
    /// survive a round trip even if they were written with a non-canonical
    /// modulus; freshly constructed objects always use [`Field::new`].
    pub fn with_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        let q128 = (p as u128).pow(e);
        if q128 > u128::from(MAX_ORDER) {
            return Err(Error::TooLarge(format!(
                "field order {p}^{e} exceeds the cap of {MAX_ORDER}"
            )));
        }
        if modulus.len() != e as usize + 1 {
            return Err(Error::Format(format!(
                "modulus must list {} coefficients, got {}",
                e + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Format("modulus coefficient out of range".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::Format("modulus must be monic".into()));
        }
        if e > 1 {
            let prime = Field::new(p, 1)?;
            let poly: Vec<Fe> = modulus.iter().map(|&c| Fe(c as u32)).collect();
            if !is_irreducible(&prime, &poly) {
                return Err(Error::Format("modulus is not irreducible".into()));
            }
        }
        Ok(Field(Arc::new(FieldSpec {
            p,
            e,
            q: q128 as u64,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
        })))
    }

    /// Characteristic p.
    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree e over the prime field.
    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Field order q = p^e.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, constant term first (length e + 1, monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Validate an integer code and wrap it as an element.
    pub fn el(&self, code: u64) -> Result<Fe> {
        if code < self.0.q {
            Ok(Fe(code as u32))
        } else {
            Err(Error::BadParams(format!(
                "element code {code} out of range for {self}"
            )))
        }
    }

    /// The additive identity.
    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    /// The multiplicative identity.
    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// All q elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q as u32).map(Fe)
    }

    fn digits(&self, code: u32) -> Vec<u32> {
        let s = &*self.0;
        let mut v = vec![0u32; s.e as usize];
        let mut c = u64::from(code);
        for d in v.iter_mut() {
            *d = (c % s.p) as u32;
            c /= s.p;
        }
        v
    }

    fn recompose(&self, digits: &[u64]) -> u32 {
        let s = &*self.0;
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            acc = acc * s.p + d;
        }
        acc as u32
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let s = &*self.0;
        debug_assert!(u64::from(a.0) < s.q && u64::from(b.0) < s.q);
        if s.e == 1 {
            return Fe(((u64::from(a.0) + u64::from(b.0)) % s.p) as u32);
        }
        let ad = self.digits(a.0);
        let bd = self.digits(b.0);
        let sum: Vec<u64> = ad
            .iter()
            .zip(&bd)
            .map(|(&x, &y)| (u64::from(x) + u64::from(y)) % s.p)
            .collect();
        Fe(self.recompose(&sum))
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let s = &*self.0;
        debug_assert!(u64::from(a.0) < s.q);
        if s.e == 1 {
            return Fe(((s.p - u64::from(a.0)) % s.p) as u32);
        }
        let neg: Vec<u64> = self
            .digits(a.0)
            .iter()
            .map(|&x| (s.p - u64::from(x)) % s.p)
            .collect();
        Fe(self.recompose(&neg))
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let s = &*self.0;
        debug_assert!(u64::from(a.0) < s.q && u64::from(b.0) < s.q);
        if s.e == 1 {
            return Fe(((u64::from(a.0) * u64::from(b.0)) % s.p) as u32);
        }
        let e = s.e as usize;
        let ad = self.digits(a.0);
        let bd = self.digits(b.0);
        let mut conv = vec![0u64; 2 * e - 1];
        for (i, &x) in ad.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in bd.iter().enumerate() {
                conv[i + j] = (conv[i + j] + u64::from(x) * u64::from(y)) % s.p;
            }
        }
        // Reduce modulo the monic modulus, highest term first.
        for i in (e..2 * e - 1).rev() {
            let c = conv[i];
            if c == 0 {
                continue;
            }
            conv[i] = 0;
            let shift = i - e;
            for (j, &m) in s.modulus.iter().take(e).enumerate() {
                let t = (c * u64::from(m)) % s.p;
                conv[shift + j] = (conv[shift + j] + s.p - t) % s.p;
            }
        }
        Fe(self.recompose(&conv[..e]))
    }

    pub fn pow(&self, a: Fe, mut exp: u64) -> Fe {
        let mut result = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Multiplicative inverse via a^(q-2).
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0.q - 2))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.e.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{} mod {:?})",
            self.0.p, self.0.e, self.0.modulus
        )
    }
}

// ---------------------------------------------------------------------------
// Polynomials over an arbitrary Field, used for modulus searches here and in
// the extension tower of the rank-metric module. Coefficients are constant
// term first; all divisors are monic, so no leading-coefficient inversions
// are ever needed.
// ---------------------------------------------------------------------------

/// Decode `len` base-q digits of `code` into field elements.
pub(crate) fn vec_from_code(f: &Field, mut code: u64, len: usize) -> Vec<Fe> {
    let q = f.order();
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(Fe((code % q) as u32));
        code /= q;
    }
    v
}

/// Remainder of `num` modulo the monic polynomial `den`.
pub(crate) fn poly_rem(f: &Field, num: &[Fe], den: &[Fe]) -> Vec<Fe> {
    let dd = den.len() - 1;
    let mut r: Vec<Fe> = num.to_vec();
    while r.len() > dd {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dd;
        if !lead.is_zero() {
            for j in 0..dd {
                let t = f.mul(lead, den[j]);
                r[shift + j] = f.sub(r[shift + j], t);
            }
        }
        r.pop();
    }
    r
}

/// Is the monic polynomial irreducible over f? Decided by trial division
/// against every monic polynomial of degree up to deg/2.
pub(crate) fn is_irreducible(f: &Field, poly: &[Fe]) -> bool {
    let deg = poly.len() - 1;
    debug_assert!(deg >= 1 && poly[deg] == f.one());
    if deg == 1 {
        return true;
    }
    // Degree-0 coefficient zero means x divides the polynomial.
    if poly[0].is_zero() {
        return false;
    }
    let q = f.order();
    for div_deg in 1..=deg / 2 {
        let count = q.pow(div_deg as u32);
        for low in 0..count {
            let mut den = vec_from_code(f, low, div_deg);
            den.push(f.one());
            let rem = poly_rem(f, poly, &den);
            if rem.iter().all(|c| c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of the given degree over f whose coefficient
/// vector has the smallest base-q integer encoding.
pub(crate) fn smallest_irreducible(f: &Field, degree: usize) -> Result<Vec<Fe>> {
    debug_assert!(degree >= 1);
    let q = f.order();
    let count = (q as u128).pow(degree as u32);
    let mut low = 0u64;
    while (low as u128) < count {
        let mut poly = vec_from_code(f, low, degree);
        poly.push(f.one());
        if is_irreducible(f, &poly) {
            return Ok(poly);
        }
        low += 1;
    }
    Err(Error::Internal(format!(
        "no irreducible of degree {degree} over {f}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    /// Independent root finder used to cross-check the modulus search:
    /// for degrees 2 and 3 a polynomial over GF(p) is irreducible exactly
    /// when it has no root in GF(p).
    fn has_root(poly: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(gf(2).modulus(), &[0, 1]);
        assert_eq!(gf(4).modulus(), &[1, 1, 1]);
        assert_eq!(gf(8).modulus(), &[1, 1, 0, 1]);
        assert_eq!(gf(9).modulus(), &[1, 0, 1]);
        assert_eq!(gf(16).modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(gf(25).modulus(), &[2, 0, 1]);
        assert_eq!(gf(32).modulus(), &[1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn modulus_minimality_cross_check() {
        // GF(4): the two monic quadratics over GF(2) with smaller encoding
        // than x^2+x+1 both have roots; the chosen one has none.
        assert!(has_root(&[0, 0, 1], 2));
        assert!(has_root(&[1, 0, 1], 2));
        assert!(!has_root(&[1, 1, 1], 2));
        // GF(9): the only monic quadratic below x^2+1 in encoding order is
        // x^2 itself, which has root 0.
        assert!(has_root(&[0, 0, 1], 3));
        assert!(!has_root(&[1, 0, 1], 3));
        // GF(8): every cubic with smaller low part than [1,1,0,1] has a root.
        for low in 0..3u64 {
            let poly = [low & 1, (low >> 1) & 1, 0, 1];
            assert!(has_root(&poly, 2), "x^3 candidate {low} should be reducible");
        }
        assert!(!has_root(&[1, 1, 0, 1], 2));
    }

    #[test]
    fn gf4_tables() {
        let f = gf(4);
        let el = |c| f.el(c).unwrap();
        // Addition is XOR of codes in characteristic 2 with this encoding.
        assert_eq!(f.add(el(2), el(2)), el(0));
        assert_eq!(f.add(el(2), el(3)), el(1));
        assert_eq!(f.add(el(1), el(2)), el(3));
        // Multiplication: with x^2+x+1, alpha*alpha = alpha+1.
        assert_eq!(f.mul(el(2), el(2)), el(3));
        assert_eq!(f.mul(el(2), el(3)), el(1));
        assert_eq!(f.mul(el(3), el(3)), el(2));
        // Inverses.
        assert_eq!(f.inv(el(1)).unwrap(), el(1));
        assert_eq!(f.inv(el(2)).unwrap(), el(3));
        assert_eq!(f.inv(el(3)).unwrap(), el(2));
        assert_eq!(f.inv(el(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [4u64, 8, 9] {
            let f = gf(q);
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 128, 256] {
            let f = gf(q);
            for a in f.elements().skip(1) {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), f.one(), "inverse failed in {f} for {a}");
            }
        }
    }

    #[test]
    fn pow_laws() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 25] {
            let f = gf(q);
            for a in f.elements() {
                assert_eq!(f.pow(a, 0), f.one());
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q - 1), f.one());
                }
                assert_eq!(f.pow(a, 3), f.mul(f.mul(a, a), a));
            }
        }
    }

    #[test]
    fn from_order_factors() {
        let f = gf(49);
        assert_eq!((f.p(), f.e()), (7, 2));
        assert_eq!(gf(65536).order(), 65536);
        assert_eq!(
            Field::from_order(12),
            Err(Error::BadParams("order 12 is not a prime power".into()))
        );
        assert!(Field::from_order(1).is_err());
        assert!(Field::from_order(0).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(Field::new(6, 1), Err(Error::NotPrime(6)));
        assert!(matches!(Field::new(2, 17), Err(Error::TooLarge(_))));
        assert!(matches!(Field::new(2, 0), Err(Error::BadParams(_))));
        assert!(matches!(
            Field::new(65537, 1),
            Err(Error::TooLarge(_))
        ));
        let f = gf(4);
        assert!(f.el(3).is_ok());
        assert!(f.el(4).is_err());
    }

    #[test]
    fn explicit_modulus() {
        let f = Field::with_modulus(2, 2, &[1, 1, 1]).unwrap();
        assert_eq!(f, gf(4));
        // x^2 + 1 = (x+1)^2 over GF(2).
        assert!(matches!(
            Field::with_modulus(2, 2, &[1, 0, 1]),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            Field::with_modulus(2, 2, &[1, 1, 2]),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            Field::with_modulus(2, 2, &[1, 1]),
            Err(Error::Format(_))
        ));
        // Non-canonical but valid: x^2 + x + 2 over GF(3).
        let g = Field::with_modulus(3, 2, &[2, 1, 1]).unwrap();
        assert_ne!(g, gf(9));
        for a in g.elements().skip(1) {
            assert_eq!(g.mul(a, g.inv(a).unwrap()), g.one());
        }
    }

    #[test]
    fn field_identity() {
        assert_eq!(gf(4), gf(4));
        assert_ne!(gf(4), gf(8));
        assert_ne!(gf(4), gf(9));
        let f = gf(4);
        let g = f.clone();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "GF(4)");
    }
}
