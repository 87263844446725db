//! Exact computations around the discriminant of plane quintics.
//!
//! * [`exactalg`]: rationals, prime fields, rank/kernel/intersection.
//! * [`projgeom`]: points, lines and conics in the projective plane, typed
//!   configurations and their sampler, the Hausdorff distance.
//! * [`lsys`]: linear systems of quintics singular along a configuration,
//!   the 42-type taxonomy, singular sets over finite fields.
//! * [`twisted`]: cellular chain complexes with rank-one local systems.
//! * [`ledger`]: spectral-sequence tables, column shifts and duality.

pub mod error;
pub mod exactalg;
pub mod ledger;
pub mod lsys;
pub mod projgeom;
pub mod twisted;

pub use error::{Error, Result};
pub use exactalg::{DenseMatrix, FieldTag, Fp, Scalar, SubspaceBasis, Q};

/// The default sampling field.
pub type F65521 = Fp<65521>;
/// Field used by the singular-set oracle checks.
pub type F101 = Fp<101>;

pub type QMatrix = DenseMatrix<Q>;
pub type FpMatrix<const P: u64> = DenseMatrix<Fp<P>>;
pub type QSubspace = SubspaceBasis<Q>;
