//! Exact linear algebra over ℚ and large prime fields.

pub mod dense;
pub mod echelon;
pub mod field;
pub mod sparse;
pub mod subspace;

pub use echelon::{rank, rref, Rref};
pub use field::{elem_from_scalar, is_prime, random_prime_near_2_31, parse_rational, Field, FieldKind, PrimeField, Rationals, Scalar};
pub use sparse::{AnyMatrix, SparseMatrix, SparseVec};
pub use subspace::{image, kernel, Subspace};
