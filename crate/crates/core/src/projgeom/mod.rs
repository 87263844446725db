//! Points, lines and conics of the projective plane over an exact field,
//! typed configurations, their generic sampler, and the Hausdorff distance.

pub mod config;
pub mod conic;
pub mod hausdorff;
pub mod point;
pub mod sample;
pub mod transform;

pub use config::Config;
pub use conic::{on_common_conic, tangent, veronese, Conic};
pub use hausdorff::{hausdorff, hausdorff_projective};
pub use point::{collinear, incident, ProjLine, ProjPoint};
pub use sample::{sample_generic, split_seed};
pub use transform::ProjTransform;
