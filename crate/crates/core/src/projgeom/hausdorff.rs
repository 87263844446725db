//! Hausdorff-type distance between finite point sets.
//!
//! The distance is the sum `max_{x∈K} ρ(x, L) + max_{y∈L} ρ(y, K)` of the two
//! directional maxima, with ρ the Chebyshev (L∞) distance on affine
//! coordinates. It works over any ordered exact type (rationals, integers)
//! and also over floats.

use num_traits::Signed;

use super::point::ProjPoint;
use crate::error::{input, Error, Result};
use crate::exactalg::Q;

fn chebyshev<T: Clone + PartialOrd + Signed>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.clone() - y.clone()).abs())
        .fold(T::zero(), |m, d| if d > m { d } else { m })
}

/// ρ(x, L) = min over y ∈ L of the Chebyshev distance.
fn dist_to_set<T: Clone + PartialOrd + Signed>(x: &[T], set: &[Vec<T>]) -> T {
    let mut best: Option<T> = None;
    for y in set {
        let d = chebyshev(x, y);
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    }
    best.expect("nonempty set")
}

fn directed<T: Clone + PartialOrd + Signed>(k: &[Vec<T>], l: &[Vec<T>]) -> T {
    k.iter()
        .map(|x| dist_to_set(x, l))
        .fold(T::zero(), |m, d| if d > m { d } else { m })
}

/// Distance between two nonempty finite sets of affine points of equal dimension.
pub fn hausdorff<T: Clone + PartialOrd + Signed>(k: &[Vec<T>], l: &[Vec<T>]) -> Result<T> {
    if k.is_empty() || l.is_empty() {
        return input("Hausdorff distance of an empty set");
    }
    let dim = k[0].len();
    if k.iter().chain(l).any(|p| p.len() != dim) {
        return input("points of different dimensions");
    }
    Ok(directed(k, l) + directed(l, k))
}

/// Affine coordinates `(x/z, y/z)` of a rational projective point.
pub fn affine_chart(p: &ProjPoint<Q>) -> Result<Vec<Q>> {
    let [x, y, z] = p.coords();
    if num_traits::Zero::is_zero(z) {
        return Err(Error::OutsideChart(p.to_string()));
    }
    Ok(vec![x / z, y / z])
}

/// Distance between finite sets of projective points, measured in the chart z ≠ 0.
pub fn hausdorff_projective(k: &[ProjPoint<Q>], l: &[ProjPoint<Q>]) -> Result<Q> {
    let ka = k.iter().map(affine_chart).collect::<Result<Vec<_>>>()?;
    let la = l.iter().map(affine_chart).collect::<Result<Vec<_>>>()?;
    hausdorff(&ka, &la)
}
