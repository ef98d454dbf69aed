//! Dense matrices over a [`Field`], with the two echelon forms the flag
//! machinery needs.
//!
//! Besides the usual reduced row echelon form (RREF), subspace invariants
//! use an "inverse" echelon form in which pivots accumulate at the right.
//! It is defined operationally: reverse the column order, run RREF,
//! reverse the column order again, and map pivot indices back through the
//! reversal. Rows therefore come out with strictly decreasing pivot
//! columns. Both forms drop zero rows, so the result of either is a
//! canonical basis of the row space.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Index;

use crate::error::{Error, Result};
use crate::galois::{Fe, Field};

/// Which echelon form an operation should use.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EchelonForm {
    /// Pivots accumulate at the left; rows ordered by increasing pivot.
    Standard,
    /// Pivots accumulate at the right; rows ordered by decreasing pivot.
    Inverse,
}

/// Outcome of an echelon reduction: the reduced matrix with zero rows
/// dropped, the pivot column of each remaining row (in row order), and the
/// rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonResult {
    pub matrix: MatGF,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A rows x cols matrix over GF(q), stored row major. Matrices are
/// immutable once built; every operation returns a fresh matrix.
#[derive(Clone)]
pub struct MatGF {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Fe>,
}

impl MatGF {
    /// Build a matrix from row-major integer codes.
    pub fn new(field: Field, rows: usize, cols: usize, codes: &[u64]) -> Result<MatGF> {
        if codes.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                codes.len()
            )));
        }
        let entries = codes
            .iter()
            .map(|&c| field.el(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatGF {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Build a matrix from per-row integer codes; rows must have equal length.
    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Result<MatGF> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let flat: Vec<u64> = rows.iter().flatten().copied().collect();
        MatGF::new(field, height, width, &flat)
    }

    /// The all-zero matrix of the given shape (either side may be 0).
    pub fn zeros(field: Field, rows: usize, cols: usize) -> MatGF {
        MatGF {
            field,
            rows,
            cols,
            entries: vec![Fe(0); rows * cols],
        }
    }

    /// The n x n identity.
    pub fn identity(field: Field, n: usize) -> MatGF {
        let mut m = MatGF::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Fe(1);
        }
        m
    }

    pub(crate) fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Fe>) -> MatGF {
        debug_assert_eq!(entries.len(), rows * cols);
        MatGF {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    /// One row as a slice.
    pub fn row(&self, r: usize) -> &[Fe] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-major integer codes, one vector per row.
    pub fn row_codes(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.code()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.entries[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: Fe) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, self.field.mul(v, factor));
        }
    }

    /// row[dst] -= factor * row[src]
    fn row_sub_scaled(&mut self, dst: usize, src: usize, factor: Fe) {
        for c in 0..self.cols {
            let t = self.field.mul(factor, self.get(src, c));
            let v = self.field.sub(self.get(dst, c), t);
            self.set(dst, c, v);
        }
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> EchelonResult {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m
                .field
                .inv(m.get(r, c))
                .expect("pivot entry is nonzero by selection");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c);
                    m.row_sub_scaled(i, r, factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.entries.truncate(r * m.cols);
        m.rows = r;
        EchelonResult {
            matrix: m,
            pivots,
            rank: r,
        }
    }

    /// Inverse reduced row echelon form: column-reversed conjugation of
    /// [`MatGF::rref`]. Pivot columns are reported in row order, which for
    /// this form means strictly decreasing.
    pub fn inv_rref(&self) -> EchelonResult {
        let ech = self.reverse_cols().rref();
        let pivots = ech.pivots.iter().map(|&c| self.cols - 1 - c).collect();
        EchelonResult {
            matrix: ech.matrix.reverse_cols(),
            pivots,
            rank: ech.rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A square matrix with full rank?
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Mirror the column order.
    pub fn reverse_cols(&self) -> MatGF {
        let mut m = self.clone();
        for r in 0..m.rows {
            m.entries[r * m.cols..(r + 1) * m.cols].reverse();
        }
        m
    }

    /// Vertical concatenation (self on top).
    pub fn stack(&self, other: &MatGF) -> Result<MatGF> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns onto {}",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Rows lo..hi as a new matrix.
    pub fn rows_range(&self, lo: usize, hi: usize) -> Result<MatGF> {
        if lo > hi || hi > self.rows {
            return Err(Error::DimensionMismatch(format!(
                "row range {lo}..{hi} out of bounds for {} rows",
                self.rows
            )));
        }
        Ok(MatGF {
            field: self.field.clone(),
            rows: hi - lo,
            cols: self.cols,
            entries: self.entries[lo * self.cols..hi * self.cols].to_vec(),
        })
    }

    /// The first j rows; j must satisfy 1 <= j <= rows.
    pub fn top_rows(&self, j: usize) -> Result<MatGF> {
        if j == 0 || j > self.rows {
            return Err(Error::DimensionMismatch(format!(
                "top_rows({j}) out of range 1..={}",
                self.rows
            )));
        }
        self.rows_range(0, j)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &MatGF) -> Result<MatGF> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} minus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(MatGF {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Matrix product self * rhs.
    pub fn mul(&self, rhs: &MatGF) -> Result<MatGF> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = MatGF::zeros(self.field.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = f.mul(a, rhs.get(l, j));
                    let v = f.add(out.get(i, j), t);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Copy of the matrix without the listed columns (duplicates ignored).
    pub(crate) fn without_cols(&self, drop: &[usize]) -> MatGF {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !drop.contains(c)).collect();
        let mut entries = Vec::with_capacity(self.rows * keep.len());
        for r in 0..self.rows {
            for &c in &keep {
                entries.push(self.get(r, c));
            }
        }
        MatGF {
            field: self.field.clone(),
            rows: self.rows,
            cols: keep.len(),
            entries,
        }
    }
}

/// Assemble a block matrix from a grid of blocks. Blocks in the same grid
/// row must agree on height, blocks in the same grid column on width, and
/// all on the field. Zero-height and zero-width blocks are allowed.
pub fn block_assemble(layout: &[Vec<&MatGF>]) -> Result<MatGF> {
    if layout.is_empty() || layout[0].is_empty() {
        return Err(Error::DimensionMismatch("empty block layout".into()));
    }
    let grid_cols = layout[0].len();
    if layout.iter().any(|row| row.len() != grid_cols) {
        return Err(Error::DimensionMismatch("ragged block layout".into()));
    }
    let field = layout[0][0].field.clone();
    for row in layout {
        for block in row {
            if block.field != field {
                return Err(Error::FieldMismatch);
            }
        }
    }
    let heights: Vec<usize> = layout.iter().map(|row| row[0].rows).collect();
    let widths: Vec<usize> = layout[0].iter().map(|b| b.cols).collect();
    for (i, row) in layout.iter().enumerate() {
        for (j, block) in row.iter().enumerate() {
            if block.rows != heights[i] || block.cols != widths[j] {
                return Err(Error::DimensionMismatch(format!(
                    "block ({i},{j}) is {}x{}, expected {}x{}",
                    block.rows, block.cols, heights[i], widths[j]
                )));
            }
        }
    }
    let total_rows: usize = heights.iter().sum();
    let total_cols: usize = widths.iter().sum();
    let mut out = MatGF::zeros(field, total_rows, total_cols);
    let mut row_off = 0;
    for (i, row) in layout.iter().enumerate() {
        let mut col_off = 0;
        for (j, block) in row.iter().enumerate() {
            for r in 0..block.rows {
                for c in 0..block.cols {
                    out.set(row_off + r, col_off + c, block.get(r, c));
                }
            }
            col_off += widths[j];
        }
        row_off += heights[i];
    }
    Ok(out)
}

impl Index<(usize, usize)> for MatGF {
    type Output = Fe;

    fn index(&self, (r, c): (usize, usize)) -> &Fe {
        &self.entries[r * self.cols + c]
    }
}

impl PartialEq for MatGF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field == other.field
            && self.entries == other.entries
    }
}

impl Eq for MatGF {}

impl Hash for MatGF {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn mat(q: u64, rows: &[Vec<u64>]) -> MatGF {
        MatGF::from_rows(gf(q), rows).unwrap()
    }

    fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut StdRng) -> MatGF {
        let codes: Vec<u64> = (0..rows * cols).map(|_| rng.gen_range(0..f.order())).collect();
        MatGF::new(f.clone(), rows, cols, &codes).unwrap()
    }

    fn random_invertible(f: &Field, n: usize, rng: &mut StdRng) -> MatGF {
        loop {
            let m = random_matrix(f, n, n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }

    #[test]
    fn rref_examples() {
        let id = MatGF::identity(gf(2), 3);
        let ech = id.rref();
        assert_eq!(ech.matrix, id);
        assert_eq!(ech.pivots, vec![0, 1, 2]);

        let ech = mat(2, &[vec![1, 1, 0], vec![1, 0, 1]]).rref();
        assert_eq!(ech.matrix, mat(2, &[vec![1, 0, 1], vec![0, 1, 1]]));
        assert_eq!(ech.pivots, vec![0, 1]);

        let ech = mat(2, &[vec![1, 1], vec![1, 1]]).rref();
        assert_eq!(ech.matrix, mat(2, &[vec![1, 1]]));
        assert_eq!(ech.pivots, vec![0]);
        assert_eq!(ech.rank, 1);

        let zero = MatGF::zeros(gf(2), 2, 3);
        let ech = zero.rref();
        assert_eq!(ech.rank, 0);
        assert_eq!(ech.matrix.rows(), 0);
        assert!(ech.pivots.is_empty());
    }

    #[test]
    fn inv_rref_examples() {
        // Definition: reverse columns, reduce, reverse back. Rows come out
        // ordered by decreasing pivot, so the identity maps to the reversed
        // identity (same row set).
        let ech = MatGF::identity(gf(2), 2).inv_rref();
        assert_eq!(ech.matrix, mat(2, &[vec![0, 1], vec![1, 0]]));
        assert_eq!(ech.pivots, vec![1, 0]);

        let ech = mat(2, &[vec![1, 1, 0], vec![1, 0, 1]]).inv_rref();
        assert_eq!(ech.matrix, mat(2, &[vec![1, 0, 1], vec![1, 1, 0]]));
        assert_eq!(ech.pivots, vec![2, 1]);

        let ech = mat(2, &[vec![1, 1]]).inv_rref();
        assert_eq!(ech.matrix, mat(2, &[vec![1, 1]]));
        assert_eq!(ech.pivots, vec![1]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatGF::zeros(gf(3), 2, 2).rank(), 0);
        assert_eq!(MatGF::identity(gf(3), 4).rank(), 4);
        assert_eq!(mat(2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert!(MatGF::identity(gf(2), 3).is_invertible());
        assert!(!MatGF::zeros(gf(2), 2, 2).is_invertible());
        assert!(mat(2, &[vec![0, 1], vec![1, 1]]).is_invertible());
        assert!(!mat(2, &[vec![1, 0], vec![1, 0]]).is_invertible());
        // Non-square matrices are never invertible.
        assert!(!mat(2, &[vec![1, 0]]).is_invertible());
    }

    #[test]
    fn stack_and_slice() {
        let a = mat(2, &[vec![1, 0]]);
        let b = mat(2, &[vec![0, 1]]);
        assert_eq!(a.stack(&b).unwrap(), MatGF::identity(gf(2), 2));
        let id4 = MatGF::identity(gf(2), 4);
        assert_eq!(
            id4.top_rows(2).unwrap(),
            mat(2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]])
        );
        assert!(id4.top_rows(0).is_err());
        assert!(id4.top_rows(5).is_err());
        assert_eq!(
            id4.rows_range(1, 3).unwrap(),
            mat(2, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]])
        );
        assert!(a.stack(&mat(2, &[vec![1]])).is_err());
        assert!(a.stack(&MatGF::from_rows(gf(3), &[vec![1, 0]]).unwrap()).is_err());
    }

    #[test]
    fn block_assembly() {
        let f = gf(2);
        let a = mat(2, &[vec![0, 1], vec![1, 1]]);
        let i2 = MatGF::identity(f.clone(), 2);
        let o2 = MatGF::zeros(f.clone(), 2, 2);
        let m = block_assemble(&[vec![&a, &i2], vec![&a, &o2]]).unwrap();
        assert_eq!(
            m,
            mat(
                2,
                &[
                    vec![0, 1, 1, 0],
                    vec![1, 1, 0, 1],
                    vec![0, 1, 0, 0],
                    vec![1, 1, 0, 0]
                ]
            )
        );
        // Zero-height blocks vanish from the layout.
        let empty = MatGF::zeros(f.clone(), 0, 2);
        let m = block_assemble(&[vec![&i2], vec![&empty]]).unwrap();
        assert_eq!(m, i2);
        // Shape errors are rejected.
        let i3 = MatGF::identity(f, 3);
        assert!(block_assemble(&[vec![&a, &i3]]).is_err());
        assert!(block_assemble(&[]).is_err());
    }

    #[test]
    fn product_and_difference() {
        let a = mat(2, &[vec![0, 1], vec![1, 1]]);
        let i2 = MatGF::identity(gf(2), 2);
        assert_eq!(a.mul(&i2).unwrap(), a);
        // a * a = a + i over GF(2) with this particular a.
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, mat(2, &[vec![1, 1], vec![1, 0]]));
        assert_eq!(a.sub(&a).unwrap(), MatGF::zeros(gf(2), 2, 2));
        assert!(a.mul(&mat(2, &[vec![1, 0]])).is_err());
        assert!(a.sub(&mat(2, &[vec![1, 0]])).is_err());
    }

    #[test]
    fn column_helpers() {
        let m = mat(2, &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.reverse_cols(), mat(2, &[vec![1, 0, 1], vec![1, 1, 0]]));
        assert_eq!(m.without_cols(&[0, 1]), mat(2, &[vec![1], vec![1]]));
        assert_eq!(m.without_cols(&[]), m);
        assert_eq!(m.without_cols(&[0, 1, 2]).cols(), 0);
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let q = [2u64, 3, 4][rng.gen_range(0..3)];
            let f = gf(q);
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&f, rows, cols, &mut rng);
            let ech = m.rref();
            // Idempotence.
            let again = ech.matrix.rref();
            assert_eq!(again.matrix, ech.matrix);
            assert_eq!(again.pivots, ech.pivots);
            // Pivot structure: strictly increasing, pivot entries are 1 and
            // alone in their column.
            for w in ech.pivots.windows(2) {
                assert!(w[0] < w[1]);
            }
            for (r, &c) in ech.pivots.iter().enumerate() {
                assert_eq!(ech.matrix.get(r, c).code(), 1);
                for other in 0..ech.rank {
                    if other != r {
                        assert!(ech.matrix.get(other, c).is_zero());
                    }
                }
            }
            // Canonicality: any invertible recombination of the rows has the
            // same RREF.
            if ech.rank > 0 {
                let t = random_invertible(&f, ech.rank, &mut rng);
                let recombined = t.mul(&ech.matrix).unwrap();
                let ech2 = recombined.rref();
                assert_eq!(ech2.matrix, ech.matrix);
                assert_eq!(ech2.pivots, ech.pivots);
            }
        }
    }

    #[test]
    fn inv_rref_matches_conjugated_rref() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let q = [2u64, 3][rng.gen_range(0..2)];
            let f = gf(q);
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&f, rows, cols, &mut rng);
            let ech = m.inv_rref();
            let conj = m.reverse_cols().rref();
            assert_eq!(ech.matrix, conj.matrix.reverse_cols());
            assert_eq!(ech.rank, conj.rank);
            for (a, b) in ech.pivots.iter().zip(&conj.pivots) {
                assert_eq!(*a, cols - 1 - *b);
            }
            for w in ech.pivots.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
    }

    #[test]
    fn rank_of_stack_bounds() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let f = gf(2);
            let cols = rng.gen_range(1..=5);
            let a = random_matrix(&f, rng.gen_range(1..=4), cols, &mut rng);
            let b = random_matrix(&f, rng.gen_range(1..=4), cols, &mut rng);
            let stacked = a.stack(&b).unwrap();
            let r = stacked.rank();
            assert!(r <= a.rank() + b.rank());
            assert!(r >= a.rank().max(b.rank()));
            assert!(r <= cols);
        }
    }

    #[test]
    fn entry_validation() {
        assert!(MatGF::new(gf(2), 1, 2, &[0, 2]).is_err());
        assert!(MatGF::new(gf(2), 2, 2, &[0, 1, 1]).is_err());
        assert!(MatGF::from_rows(gf(2), &[vec![1, 0], vec![1]]).is_err());
    }
}
