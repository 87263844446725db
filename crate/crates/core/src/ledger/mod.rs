//! Spectral-sequence bookkeeping: Poincaré polynomials, sparse `E^1`
//! tables with differentials, column shifts, duality, and built-in datasets.

pub mod dataset;
pub mod poly;
pub mod table;

pub use dataset::{dataset_quintic, Dataset};
pub use poly::{grassmann_poincare, PoincarePoly};
pub use table::{apply_differentials, column_contribution, totalize, ColumnSpec, DifferentialDecl, E1Table};
