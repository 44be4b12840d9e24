//! Dense matrices over a division ring with 1-based positions: the
//! carrier of the biring structure.
//!
//! Two products live side by side. The rc-product is the conventional
//! one, `(A ⊛ B)(r,c) = Σ_k A(r,k)·B(k,c)`. The cr-product is its dual,
//! `(A ⊛' B)(r,c) = Σ_k A(k,c)·B(r,k)`, which is *not* the reversed
//! rc-product once scalars stop commuting. They share the Kronecker
//! identity and are linked by `(A ⊛ B)ᵀ = Aᵀ ⊛' Bᵀ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::DivisionRing;

/// Which of the two biring products an operation should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Rc,
    Cr,
}

impl ProductKind {
    /// The dual product, used by duality-principle checks.
    pub fn flipped(self) -> ProductKind {
        match self {
            ProductKind::Rc => ProductKind::Cr,
            ProductKind::Cr => ProductKind::Rc,
        }
    }
}

/// Side on which a scalar acts on a matrix. Order matters over
/// noncommutative scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Ordered, duplicate-free set of 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds the set from arbitrary-order input; positions are sorted.
    /// Rejects position 0 and duplicates.
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        for pair in positions.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateIndex(pair[0]));
            }
        }
        if positions.first() == Some(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(IndexSet(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.0.binary_search(&pos).is_ok()
    }

    fn check_bound(&self, bound: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last > bound => Err(Error::IndexOutOfBounds { pos: last, bound }),
            _ => Ok(()),
        }
    }

    /// Positions in `1..=bound` not present in this set.
    pub fn complement(&self, bound: usize) -> IndexSet {
        IndexSet((1..=bound).filter(|p| !self.contains(*p)).collect())
    }
}

/// One axis of a minor: keep exactly these positions, or drop them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorAxis {
    Select(IndexSet),
    Delete(IndexSet),
}

impl MinorAxis {
    /// All positions of the axis, i.e. `Delete` of nothing.
    pub fn all() -> MinorAxis {
        MinorAxis::Delete(IndexSet(Vec::new()))
    }

    /// The selected positions in increasing order. Deleting a set is the
    /// same as selecting its complement.
    fn resolve(&self, bound: usize) -> Result<Vec<usize>> {
        match self {
            MinorAxis::Select(set) => {
                set.check_bound(bound)?;
                Ok(set.0.clone())
            }
            MinorAxis::Delete(set) => {
                set.check_bound(bound)?;
                Ok(set.complement(bound).0)
            }
        }
    }
}

/// Row and column selection describing a minor of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSpec {
    pub rows: MinorAxis,
    pub cols: MinorAxis,
}

/// Dense `rows × cols` matrix over a division ring, entries stored
/// row-major and addressed by 1-based `(row, column)` positions.
/// Immutable after construction; all operations return fresh values.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: DivisionRing> Matrix<S> {
    /// Builds a matrix from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left_rows: n_rows,
                    left_cols: n_cols,
                    right_rows: 1,
                    right_cols: row.len(),
                });
            }
        }
        Ok(Matrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix by evaluating `f` at every 1-based `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 1..=rows {
            for c in 1..=cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// The Kronecker symbol: 1 on the diagonal, 0 elsewhere. Identity for
    /// both products.
    pub fn kronecker_delta(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(Matrix::from_fn(n, n, |r, c| {
            if r == c {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 1-based `(r, c)`. Panics when out of range; operations
    /// that take user-supplied positions validate first.
    pub fn entry(&self, r: usize, c: usize) -> &S {
        assert!(
            (1..=self.rows).contains(&r) && (1..=self.cols).contains(&c),
            "entry ({r}, {c}) out of bounds for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(r - 1) * self.cols + (c - 1)]
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `result(r, c) = self(c, r)`.
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.entry(c, r).clone())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "add",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c).add(other.entry(r, c))
        }))
    }

    /// rc-product: `(A ⊛ B)(r, c) = Σ_k A(r, k)·B(k, c)`, factors in
    /// that order within each term.
    pub fn rc_product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "rc_product",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = S::zero();
            for k in 1..=self.cols {
                let (left, right) = (self.entry(r, k), other.entry(k, c));
                if !left.is_zero() && !right.is_zero() {
                    acc = acc.add(&left.mul(right));
                }
            }
            acc
        }))
    }

    /// cr-product by direct summation: `(A ⊛' B)(r, c) = Σ_k A(k, c)·B(r, k)`.
    ///
    /// This is the canonical form; [`Matrix::cr_product_via_transpose`]
    /// computes the same thing through the rc-product and exists to
    /// cross-check this one.
    pub fn cr_product(&self, other: &Self) -> Result<Self> {
        if self.rows != other.cols {
            return Err(Error::DimensionMismatch {
                op: "cr_product",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(Matrix::from_fn(other.rows, self.cols, |r, c| {
            let mut acc = S::zero();
            for k in 1..=self.rows {
                let (left, right) = (self.entry(k, c), other.entry(r, k));
                if !left.is_zero() && !right.is_zero() {
                    acc = acc.add(&left.mul(right));
                }
            }
            acc
        }))
    }

    /// cr-product computed as `(Aᵀ ⊛ Bᵀ)ᵀ`.
    pub fn cr_product_via_transpose(&self, other: &Self) -> Result<Self> {
        let product = self.transpose().rc_product(&other.transpose()).map_err(|e| {
            match e {
                Error::DimensionMismatch { .. } => Error::DimensionMismatch {
                    op: "cr_product",
                    left_rows: self.rows,
                    left_cols: self.cols,
                    right_rows: other.rows,
                    right_cols: other.cols,
                },
                other_err => other_err,
            }
        })?;
        Ok(product.transpose())
    }

    /// The chosen product applied to `(self, other)`.
    pub fn product(&self, kind: ProductKind, other: &Self) -> Result<Self> {
        match kind {
            ProductKind::Rc => self.rc_product(other),
            ProductKind::Cr => self.cr_product(other),
        }
    }

    /// Recursive power under the chosen product: the zeroth power is the
    /// Kronecker identity, and `A^n = A^{n-1} ∘ A`.
    pub fn power(&self, kind: ProductKind, n: usize) -> Result<Self> {
        let size = self.require_square()?;
        let mut acc = Matrix::kronecker_delta(size)?;
        for _ in 0..n {
            acc = acc.product(kind, self)?;
        }
        Ok(acc)
    }

    /// Multiplies every entry by `m` on the chosen side.
    pub fn scalar_mul(&self, side: Side, m: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| match side {
            Side::Left => m.mul(self.entry(r, c)),
            Side::Right => self.entry(r, c).mul(m),
        })
    }

    /// The minor described by `spec`, rows and columns kept in their
    /// induced order. Deleting a set selects its complement.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Self> {
        let row_positions = spec.rows.resolve(self.rows)?;
        let col_positions = spec.cols.resolve(self.cols)?;
        if row_positions.is_empty() || col_positions.is_empty() {
            return Err(Error::EmptyMinor);
        }
        Ok(Matrix::from_fn(
            row_positions.len(),
            col_positions.len(),
            |r, c| self.entry(row_positions[r - 1], col_positions[c - 1]).clone(),
        ))
    }

    /// Submatrix with one row and one column removed. Unlike
    /// [`Matrix::minor`] this may produce a 0×0 matrix, which the
    /// determinant recursion needs.
    pub(crate) fn delete_row_col(&self, r: usize, c: usize) -> Self {
        let keep_rows: Vec<usize> = (1..=self.rows).filter(|&p| p != r).collect();
        let keep_cols: Vec<usize> = (1..=self.cols).filter(|&p| p != c).collect();
        Matrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self.entry(keep_rows[i - 1], keep_cols[j - 1]).clone()
        })
    }

    pub(crate) fn swap_rows(&self, i: usize, j: usize) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            let source_row = if r == i { j } else if r == j { i } else { r };
            self.entry(source_row, c).clone()
        })
    }

    pub(crate) fn swap_cols(&self, i: usize, j: usize) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            let source_col = if c == i { j } else if c == j { i } else { c };
            self.entry(r, source_col).clone()
        })
    }

    /// Hadamard inverse: entrywise scalar inverse with row and column
    /// positions exchanged, `result(r, c) = self(c, r)⁻¹`.
    pub fn hadamard_inverse(&self) -> Result<Self> {
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                if self.entry(r, c).is_zero() {
                    return Err(Error::ZeroEntry { row: r, col: c });
                }
            }
        }
        Ok(Matrix::from_fn(self.cols, self.rows, |r, c| {
            self.entry(c, r)
                .inv()
                .expect("zero entries were rejected above")
        }))
    }
}

impl<S: DivisionRing> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
