//! Exact linear algebra in the matrix biring over a division ring.
//!
//! Square matrices over a division ring carry two products linked by
//! transposition: the usual row-by-column product and its dual, the
//! column-by-row product. Together with entrywise sum and transpose they
//! form a *biring*. This crate implements that structure with exact
//! arithmetic over two scalar rings — arbitrary-precision rationals and
//! rational-coefficient quaternions — plus quasideterminants, the
//! matrix inverses they assemble, and the commutative specialization
//! where a quasideterminant reduces to a signed ratio of determinants.

pub mod doc;
pub mod error;
pub mod field;
pub mod matrix;
pub mod quasidet;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{IndexSet, Matrix, MinorAxis, MinorSpec, ProductKind, Side};
pub use quasidet::{InverseAlgorithm, QuasidetOutcome};
pub use scalar::{DivisionRing, Quaternion, Rational};
