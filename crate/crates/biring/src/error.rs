//! Error type shared by the scalar, matrix, and quasideterminant layers.

use thiserror::Error;

/// Why a square matrix turned out not to be invertible.
///
/// Carried inside [`Error::NotInvertible`] so callers can see which
/// sub-problem failed rather than just a yes/no answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularWitness {
    /// Elimination or the block recursion found no usable pivot.
    NoPivot { step: usize },
    /// A quasideterminant needed by the Hadamard-inverse route is undefined.
    UndefinedQuasidet { row: usize, col: usize, cause: String },
    /// A quasideterminant is defined but equals zero, so it has no inverse.
    ZeroQuasidet { row: usize, col: usize },
}

impl std::fmt::Display for SingularWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularWitness::NoPivot { step } => {
                write!(f, "no nonzero pivot at elimination step {step}")
            }
            SingularWitness::UndefinedQuasidet { row, col, cause } => {
                write!(f, "quasideterminant at ({row}, {col}) is undefined: {cause}")
            }
            SingularWitness::ZeroQuasidet { row, col } => {
                write!(f, "quasideterminant at ({row}, {col}) is zero")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("malformed scalar {0:?}")]
    MalformedScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),
    #[error("dimension mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("position {pos} is out of bounds 1..={bound}")]
    IndexOutOfBounds { pos: usize, bound: usize },
    #[error("duplicate position {0} in index set")]
    DuplicateIndex(usize),
    #[error("position 0 is invalid; positions are 1-based")]
    ZeroIndex,
    #[error("minor selection is empty")]
    EmptyMinor,
    #[error("zero entry at row {row}, column {col}")]
    ZeroEntry { row: usize, col: usize },
    #[error("matrix is not invertible: {witness}")]
    NotInvertible { witness: SingularWitness },
    #[error("matrix size {size} exceeds the limit {limit} for the definitional recursion")]
    SizeLimit { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
