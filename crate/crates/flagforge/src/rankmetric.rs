//! Square MRD codes in the rank metric, realized as Gabidulin codes.
//!
//! A code with designed distance delta on m x m matrices over GF(q) is
//! obtained from the linearized polynomials a_0 x + a_1 x^q + ... +
//! a_{m-delta} x^(q^(m-delta)) with coefficients in GF(q^m). Each such map
//! is GF(q)-linear on GF(q^m); expanding it in the polynomial basis
//! (1, alpha, ..., alpha^(m-1)) of the canonical degree-m extension gives
//! the codeword matrix, row i holding the coordinates of the image of
//! alpha^i (row-vector convention: x maps to x * M).
//!
//! The extension GF(q^m) is built over the monic irreducible of degree m
//! over GF(q) with the smallest base-q encoding, the same rule the base
//! fields use, so codewords are canonical. For delta = m the codewords are
//! exactly the q^m multiplication matrices of GF(q^m), the square MRD
//! family the flag construction consumes.

use crate::error::{Error, Result};
use crate::galois::{poly_rem, smallest_irreducible, vec_from_code, Fe, Field};
use crate::matrix::MatGF;

/// Hard cap on the number of codewords any enumeration may produce.
pub const ENUM_CAP: u64 = 1 << 20;

/// GF(q^m) as a tower over a base [`Field`]; elements are coordinate
/// vectors of length m in the polynomial basis.
#[derive(Clone, Debug)]
pub(crate) struct ExtField {
    base: Field,
    m: usize,
    /// m + 1 coefficients over the base field, constant term first; monic.
    modulus: Vec<Fe>,
}

impl ExtField {
    pub(crate) fn new(base: Field, m: usize) -> Result<ExtField> {
        debug_assert!(m >= 1);
        let modulus = smallest_irreducible(&base, m)?;
        Ok(ExtField { base, m, modulus })
    }

    pub(crate) fn modulus(&self) -> &[Fe] {
        &self.modulus
    }

    pub(crate) fn zero(&self) -> Vec<Fe> {
        vec![Fe(0); self.m]
    }

    /// The image of x in the quotient, i.e. the basis element alpha.
    /// Degenerate for m = 1, where alpha = 0 and the basis is (1).
    pub(crate) fn alpha(&self) -> Vec<Fe> {
        let mut v = self.zero();
        if self.m > 1 {
            v[1] = Fe(1);
        }
        v
    }

    pub(crate) fn decode(&self, code: u64) -> Vec<Fe> {
        vec_from_code(&self.base, code, self.m)
    }

    pub(crate) fn add(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    pub(crate) fn mul(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let f = &self.base;
        let mut conv = vec![Fe(0); 2 * self.m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = f.mul(x, y);
                conv[i + j] = f.add(conv[i + j], t);
            }
        }
        let mut rem = poly_rem(f, &conv, &self.modulus);
        rem.resize(self.m, Fe(0));
        rem
    }

    pub(crate) fn pow(&self, a: &[Fe], mut exp: u64) -> Vec<Fe> {
        let mut result = self.zero();
        result[0] = Fe(1);
        let mut base = a.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        result
    }
}

/// A square Gabidulin code on m x m matrices over GF(q) with designed
/// rank distance delta and dimension m * (m - delta + 1) over GF(q).
#[derive(Clone, Debug)]
pub struct MrdCode {
    field: Field,
    m: usize,
    delta: usize,
    dim: u32,
    ext: ExtField,
    /// frob[i][j] holds (alpha^i)^(q^j) for 0 <= i < m, 0 <= j <= m - delta.
    frob: Vec<Vec<Vec<Fe>>>,
}

impl MrdCode {
    /// Build the canonical square Gabidulin code for the given parameters.
    pub fn gabidulin(m: usize, delta: usize, field: &Field) -> Result<MrdCode> {
        if m == 0 {
            return Err(Error::BadParams("matrix side m must be at least 1".into()));
        }
        if delta == 0 || delta > m {
            return Err(Error::InvalidDelta { delta, m });
        }
        let dim = (m * (m - delta + 1)) as u32;
        let q = field.order();
        if (q as u128).pow(dim) > u128::from(ENUM_CAP) {
            return Err(Error::TooLarge(format!(
                "codeword count {q}^{dim} exceeds the enumeration cap of {ENUM_CAP}"
            )));
        }
        let ext = ExtField::new(field.clone(), m)?;
        let alpha = ext.alpha();
        let terms = m - delta + 1;
        let mut frob = Vec::with_capacity(m);
        for i in 0..m {
            let base_el = ext.pow(&alpha, i as u64);
            let mut row = Vec::with_capacity(terms);
            let mut current = base_el;
            for _ in 0..terms {
                row.push(current.clone());
                current = ext.pow(&current, q);
            }
            frob.push(row);
        }
        Ok(MrdCode {
            field: field.clone(),
            m,
            delta,
            dim,
            ext,
            frob,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Dimension over GF(q).
    pub fn dimension(&self) -> usize {
        self.dim as usize
    }

    /// Number of codewords, q^dimension.
    pub fn codeword_count(&self) -> u64 {
        self.field.order().pow(self.dim)
    }

    /// Coefficients of the degree-m extension modulus as integer codes,
    /// constant term first.
    pub fn ext_modulus(&self) -> Vec<u64> {
        self.ext.modulus().iter().map(|c| c.code()).collect()
    }

    /// The codeword at the given enumeration index. Indices encode the
    /// coefficient vector (a_0, ..., a_(m-delta)) in base q^m with a_0
    /// least significant, so index 0 is the zero codeword and the order is
    /// a pure function of the parameters.
    pub fn codeword(&self, index: u64) -> Result<MatGF> {
        if index >= self.codeword_count() {
            return Err(Error::BadParams(format!(
                "codeword index {index} out of range 0..{}",
                self.codeword_count()
            )));
        }
        let ext_order = self.field.order().pow(self.m as u32);
        let terms = self.m - self.delta + 1;
        let mut coeffs = Vec::with_capacity(terms);
        let mut rest = index;
        for _ in 0..terms {
            coeffs.push(self.ext.decode(rest % ext_order));
            rest /= ext_order;
        }
        let mut entries = Vec::with_capacity(self.m * self.m);
        for i in 0..self.m {
            let mut val = self.ext.zero();
            for (j, a) in coeffs.iter().enumerate() {
                let term = self.ext.mul(a, &self.frob[i][j]);
                val = self.ext.add(&val, &term);
            }
            entries.extend_from_slice(&val);
        }
        Ok(MatGF::from_entries(
            self.field.clone(),
            self.m,
            self.m,
            entries,
        ))
    }

    /// All codewords in enumeration order (zero codeword first).
    pub fn codewords(&self) -> Vec<MatGF> {
        (0..self.codeword_count())
            .map(|i| self.codeword(i).expect("index in range"))
            .collect()
    }
}

/// Rank distance between two matrices of equal shape.
pub fn rank_distance(a: &MatGF, b: &MatGF) -> Result<usize> {
    Ok(a.sub(b)?.rank())
}

/// Restrict every codeword to its top t rows.
pub fn truncate_code(words: &[MatGF], t: usize) -> Result<Vec<MatGF>> {
    let Some(first) = words.first() else {
        return Err(Error::DimensionMismatch("empty code".into()));
    };
    let m = first.rows();
    if t == 0 || t > m {
        return Err(Error::InvalidT { t, m });
    }
    words.iter().map(|w| w.top_rows(t)).collect()
}

/// Smallest pairwise rank distance, or None for fewer than two codewords.
/// Exhaustive over all pairs.
pub fn min_rank_distance(words: &[MatGF]) -> Result<Option<usize>> {
    for w in words {
        if w.rows() != words[0].rows() || w.cols() != words[0].cols() {
            return Err(Error::DimensionMismatch(
                "codewords have mixed shapes".into(),
            ));
        }
    }
    let mut best: Option<usize> = None;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let d = rank_distance(a, b)?;
            if best.is_none_or(|m| d < m) {
                best = Some(d);
            }
        }
    }
    Ok(best)
}

/// Does every pair of codewords keep rank distance at least delta?
/// Exhaustive over all pairs; a single codeword passes vacuously.
pub fn verify_mrd(words: &[MatGF], delta: usize) -> Result<bool> {
    if words.is_empty() {
        return Err(Error::DimensionMismatch("empty code".into()));
    }
    let m = words[0].rows();
    if delta == 0 || delta > m {
        return Err(Error::InvalidDelta { delta, m });
    }
    Ok(min_rank_distance(words)?.is_none_or(|d| d >= delta))
}
