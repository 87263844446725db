pub mod classify;
pub mod dims;
pub mod homology;
pub mod ledger;
