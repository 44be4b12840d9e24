//! Commutative specialization over the rationals.
//!
//! Over a field the two products reduce to each other
//! (`A ⊛ B = B ⊛' A`), the rc- and cr-inverses coincide, and a
//! quasideterminant collapses to a signed ratio of determinants:
//! `|A|(r,c) = (−1)^{r+c}·det(A)/det(minor deleting row r, column c)`.
//! The determinant is computed by cofactor recursion with `det() = 1`
//! on the empty matrix. These functions are the exact oracle against
//! which the division-ring code is validated.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quasidet::{cr_inverse, rc_inverse, InverseAlgorithm, QuasidetOutcome, UndefinedQuasidet};
use crate::scalar::{DivisionRing, Quaternion, Rational};

/// A matrix over the field of rationals, where entries commute.
pub type FieldMatrix = Matrix<Rational>;

/// Determinant by cofactor expansion along column 1. The 0×0 matrix has
/// determinant 1, which grounds the recursion.
pub fn determinant(a: &FieldMatrix) -> Result<Rational> {
    if a.rows() == 0 && a.cols() == 0 {
        return Ok(Rational::one());
    }
    determinant_along_column(a, 1)
}

/// Determinant expanded along the given 1-based column; the value does
/// not depend on the choice, which the tests exploit.
pub fn determinant_along_column(a: &FieldMatrix, col: usize) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    if col == 0 {
        return Err(Error::ZeroIndex);
    }
    if col > n {
        return Err(Error::IndexOutOfBounds { pos: col, bound: n });
    }
    Ok(expand(a, col))
}

fn expand(a: &FieldMatrix, col: usize) -> Rational {
    let n = a.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for row in 1..=n {
        let entry = a.entry(row, col);
        if entry.is_zero() {
            continue;
        }
        let cofactor = entry.mul(&expand(&a.delete_row_col(row, col), 1));
        total = if (row + col).is_multiple_of(2) {
            total.add(&cofactor)
        } else {
            total.sub(&cofactor)
        };
    }
    total
}

/// Signed determinant ratio `(−1)^{r+c}·det(A)/det(minor)`; undefined
/// when the minor deleting row r and column c has determinant zero.
/// Over the rationals this equals the rc-quasideterminant wherever
/// either side is defined.
pub fn det_ratio_quasidet(
    a: &FieldMatrix,
    r: usize,
    c: usize,
) -> Result<QuasidetOutcome<Rational>> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let n = a.rows();
    if r == 0 || c == 0 {
        return Err(Error::ZeroIndex);
    }
    if r > n {
        return Err(Error::IndexOutOfBounds { pos: r, bound: n });
    }
    if c > n {
        return Err(Error::IndexOutOfBounds { pos: c, bound: n });
    }

    let minor_det = determinant(&a.delete_row_col(r, c))?;
    if minor_det.is_zero() {
        return Ok(QuasidetOutcome::Undefined(UndefinedQuasidet {
            position: (r, c),
            cause: format!("determinant of the minor deleting row {r}, column {c} is zero"),
        }));
    }
    let mut ratio = determinant(a)?.mul(&minor_det.inv()?);
    if (r + c) % 2 == 1 {
        ratio = ratio.neg();
    }
    Ok(QuasidetOutcome::Value(ratio))
}

/// Whether `A ⊛ B = B ⊛' A` holds entrywise. Always true over a
/// commutative scalar ring; the generic signature lets noncommutative
/// counterexamples run through the same code path.
pub fn check_reducibility<S: DivisionRing>(a: &Matrix<S>, b: &Matrix<S>) -> Result<bool> {
    Ok(a.rc_product(b)? == b.cr_product(a)?)
}

/// A stored quaternion pair on which the reducibility identity fails,
/// proving [`check_reducibility`] is not vacuous. The products differ
/// at cell (1, 1): `i·j + 1 = 1 + k` versus `j·i + 1 = 1 − k`.
pub fn reducibility_counterexample() -> (Matrix<Quaternion>, Matrix<Quaternion>) {
    let a = Matrix::from_rows(vec![
        vec![Quaternion::unit_i(), Quaternion::one()],
        vec![Quaternion::zero(), Quaternion::unit_j()],
    ])
    .expect("fixed shape");
    let b = Matrix::from_rows(vec![
        vec![Quaternion::unit_j(), Quaternion::zero()],
        vec![Quaternion::one(), Quaternion::unit_k()],
    ])
    .expect("fixed shape");
    (a, b)
}

/// Per-identity outcome of the field-coincidence checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCoincidenceReport {
    /// `A^{cr-inv} = A^{rc-inv}`.
    pub inverses_coincide: bool,
    /// `(A ⊛ B)ᵀ = Bᵀ ⊛ Aᵀ`.
    pub rc_transpose_reverses: bool,
    /// `(A ⊛' B)ᵀ = Bᵀ ⊛' Aᵀ`.
    pub cr_transpose_reverses: bool,
}

impl FieldCoincidenceReport {
    pub fn all_hold(&self) -> bool {
        self.inverses_coincide && self.rc_transpose_reverses && self.cr_transpose_reverses
    }
}

/// Checks the identities that only hold once products reduce: inverse
/// coincidence for `a` and transpose reversal for both products of
/// `a` with `b`. `a` must be invertible.
pub fn field_coincidence_report(
    a: &FieldMatrix,
    b: &FieldMatrix,
) -> Result<FieldCoincidenceReport> {
    let rc_inv = rc_inverse(a, InverseAlgorithm::Elimination)?;
    let cr_inv = cr_inverse(a, InverseAlgorithm::Elimination)?;
    Ok(FieldCoincidenceReport {
        inverses_coincide: cr_inv == rc_inv,
        rc_transpose_reverses: a.rc_product(b)?.transpose()
            == b.transpose().rc_product(&a.transpose())?,
        cr_transpose_reverses: a.cr_product(b)?.transpose()
            == b.transpose().cr_product(&a.transpose())?,
    })
}
