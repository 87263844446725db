//! Finite cellular chain complexes with rank-one local coefficient systems:
//! homology, tensor products, algebraic mapping tori and induced maps.

pub mod complex;
pub mod models;

pub use complex::{homology, induced_map, mapping_torus, poincare_dual, tensor, ChainMap, CwComplex, LocalSystem, TwistedChainComplex};
pub use models::{figure_eight, pairs_in_cstar, random_complex, random_graph, swap_loops, ModelOutcome, ModelSpec, ReportMap};
