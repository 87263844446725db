//! Exact scalars and dense linear algebra over ℚ and prime fields.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{is_prime, rational_to_fp, FieldTag, Fp, Scalar, Q};
pub use matrix::{kernel, rank, DenseMatrix};
pub use subspace::{intersect, SubspaceBasis};
