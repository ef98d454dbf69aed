//! Subspaces of GF(q)^n with the subspace distance and the echelon-form
//! invariants used by the distance arguments.
//!
//! A subspace is stored as the RREF basis of its row space, which makes
//! equality and hashing structural. The inverse echelon basis (pivots on
//! the right) is computed lazily and cached, since only some distance
//! arguments need it.
//!
//! Two binary invariants drive the Hamming-distance bounds: the
//! identifying vector (ones exactly at the RREF pivot columns) and the
//! inverse identifying vector (ones at the inverse-form pivot columns).
//! The subspace distance between U and V always dominates the Hamming
//! distance of either pair of invariants, and when the invariants agree
//! the distance collapses to a rank distance of pivot complements; the
//! self-test suites exercise both facts at scale.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::matrix::{EchelonForm, MatGF};

/// A nonzero subspace of GF(q)^n, canonically represented.
#[derive(Clone)]
pub struct Subspace {
    basis: MatGF,
    pivots: Vec<usize>,
    inverse: OnceLock<(MatGF, Vec<usize>)>,
}

impl Subspace {
    /// The row space of an arbitrary matrix. Fails on the zero matrix.
    pub fn from_matrix(m: &MatGF) -> Result<Subspace> {
        let ech = m.rref();
        if ech.rank == 0 {
            return Err(Error::ZeroMatrix);
        }
        Ok(Subspace {
            basis: ech.matrix,
            pivots: ech.pivots,
            inverse: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    /// The canonical RREF basis, one row per dimension.
    pub fn basis(&self) -> &MatGF {
        &self.basis
    }

    /// Pivot columns of the RREF basis, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn inverse_form(&self) -> &(MatGF, Vec<usize>) {
        self.inverse.get_or_init(|| {
            let ech = self.basis.inv_rref();
            (ech.matrix, ech.pivots)
        })
    }

    /// The inverse echelon basis (pivots accumulate on the right; rows
    /// ordered by decreasing pivot).
    pub fn inverse_basis(&self) -> &MatGF {
        &self.inverse_form().0
    }

    /// Pivot columns of the inverse echelon basis, strictly decreasing.
    pub fn inverse_pivots(&self) -> &[usize] {
        &self.inverse_form().1
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    /// Subspace distance: dim(U + V) - dim(U intersect V), computed as
    /// 2 rank([U; V]) - dim U - dim V.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        let joint = self.basis.stack(&other.basis)?.rank();
        Ok(2 * joint - self.dim() - other.dim())
    }

    /// Dimension of the intersection.
    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        let joint = self.basis.stack(&other.basis)?.rank();
        Ok(self.dim() + other.dim() - joint)
    }

    /// Is `other` contained in this subspace?
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis.stack(&other.basis)?.rank() == self.dim())
    }

    /// Binary vector with ones exactly at the RREF pivot columns.
    pub fn identifying_vector(&self) -> IdVector {
        IdVector::from_positions(self.ambient(), &self.pivots)
    }

    /// Binary vector with ones exactly at the inverse-form pivot columns.
    pub fn inverse_identifying_vector(&self) -> IdVector {
        IdVector::from_positions(self.ambient(), self.inverse_pivots())
    }

    /// The chosen echelon basis with its pivot columns deleted: a
    /// dim x (ambient - dim) matrix, rows in basis order. When two
    /// subspaces share an identifying vector, the rank distance of their
    /// complements reproduces half the subspace distance.
    pub fn pivot_complement(&self, form: EchelonForm) -> MatGF {
        match form {
            EchelonForm::Standard => self.basis.without_cols(&self.pivots),
            EchelonForm::Inverse => {
                let (basis, pivots) = self.inverse_form();
                basis.without_cols(pivots)
            }
        }
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}^{}):\n{:?}",
            self.dim(),
            self.field(),
            self.ambient(),
            self.basis
        )
    }
}

/// A binary invariant vector attached to a subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdVector(Vec<bool>);

impl IdVector {
    pub fn from_positions(len: usize, positions: &[usize]) -> IdVector {
        let mut bits = vec![false; len];
        for &p in positions {
            bits[p] = true;
        }
        IdVector(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones; equals the dimension of the owning subspace.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Hamming distance to another vector of the same length.
    pub fn hamming(&self, other: &IdVector) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| a != b)
            .count())
    }
}
