//! Linear systems of plane curves with prescribed singularities, the
//! configuration taxonomy, and singular sets over prime fields.

pub mod classify;
pub mod conditions;
pub mod constraints;
pub mod parse;
pub mod poly;
pub mod singular;
pub mod types;

pub use classify::{classify, classify_points, matching_types, Classification};
pub use conditions::{check_conditions, ConditionsReport};
pub use constraints::{constraint_subspace, dim_l, divisibility_subspace, singularity_rows, vanishing_and_singular, vanishing_row};
pub use poly::{monomial_basis, HomogeneousPoly};
pub use singular::{singular_set_bruteforce, SingularSet};
pub use types::{expected_dim, type_record, ConfigTypeRecord, TYPE_TABLE};
