//! Singular sets of plane curves over a prime field by exhaustive enumeration.

use std::collections::HashSet;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use super::classify::{classify, Classification};
use super::poly::HomogeneousPoly;
use crate::error::{input, Error, Result};
use crate::exactalg::{Fp, Scalar};
use crate::projgeom::{incident, Config, Conic, ProjLine, ProjPoint};

/// Largest modulus accepted by [`singular_set_bruteforce`]; the plane over F_p has p²+p+1 points.
pub const MAX_ENUMERATION_PRIME: u64 = 2053;

/// Singular points split into full line and conic components and the remaining isolated points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularSet<F: Scalar> {
    pub isolated_points: Vec<ProjPoint<F>>,
    pub line_components: Vec<ProjLine<F>>,
    pub conic_components: Vec<Conic<F>>,
    /// Every singular point found, in enumeration order.
    pub all_points: Vec<ProjPoint<F>>,
    /// Set only for the zero polynomial, which is singular everywhere.
    pub whole_plane: bool,
}

impl<F: Scalar> SingularSet<F> {
    pub fn is_empty(&self) -> bool {
        self.all_points.is_empty()
    }

    pub fn to_config(&self) -> Config<F> {
        if self.whole_plane {
            return Config::whole_plane();
        }
        Config::new(self.isolated_points.clone(), self.line_components.clone(), self.conic_components.clone(), None)
            .expect("enumerated points are distinct")
    }

    pub fn classify(&self) -> Result<Classification> {
        classify(&self.to_config())
    }
}

/// All points of the projective plane over F_p: `(1:y:z)`, `(0:1:z)`, `(0:0:1)`.
pub fn plane_points<const P: u64>() -> Vec<ProjPoint<Fp<P>>> {
    let mut out = Vec::with_capacity((P * P + P + 1) as usize);
    for y in Fp::<P>::elements() {
        for z in Fp::<P>::elements() {
            out.push(ProjPoint::new([Fp::new(1), y, z]).expect("nonzero"));
        }
    }
    for z in Fp::<P>::elements() {
        out.push(ProjPoint::new([Fp::new(0), Fp::new(1), z]).expect("nonzero"));
    }
    out.push(ProjPoint::new([Fp::new(0), Fp::new(0), Fp::new(1)]).expect("nonzero"));
    out
}

fn line_points<const P: u64>(l: &ProjLine<Fp<P>>) -> Vec<ProjPoint<Fp<P>>> {
    let [u, v] = l.spanning_points();
    let mut out: Vec<_> = Fp::<P>::elements()
        .map(|t| {
            let c: [Fp<P>; 3] = std::array::from_fn(|i| u.coords()[i] + t * v.coords()[i]);
            ProjPoint::new(c).expect("independent spanning points")
        })
        .collect();
    out.push(v);
    out
}

/// Points of a nondegenerate conic through a known point `base`, one per line through `base`.
fn conic_points<const P: u64>(c: &Conic<Fp<P>>, base: &ProjPoint<Fp<P>>) -> Vec<ProjPoint<Fp<P>>> {
    let mut out = vec![base.clone()];
    let dir_line = [ProjLine::from_i64(1, 0, 0), ProjLine::from_i64(0, 1, 0), ProjLine::from_i64(0, 0, 1)]
        .into_iter()
        .map(|l| l.expect("coordinate line"))
        .find(|l| !incident(base, l))
        .expect("some coordinate line avoids the point");
    for w in line_points(&dir_line) {
        if let Ok(q) = c.second_intersection(base, &w) {
            if !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}

/// The singular set of `f` over F_p, found by testing all three partials at every point.
///
/// A line or nondegenerate conic is reported as a component only when all of
/// its F_p-points are singular.
pub fn singular_set_bruteforce<const P: u64>(f: &HomogeneousPoly<Fp<P>>) -> Result<SingularSet<Fp<P>>> {
    if P < 5 {
        return input(format!("prime {P} is below 5"));
    }
    if P > MAX_ENUMERATION_PRIME {
        return Err(Error::Unsupported(format!("enumerating the plane over F_{P} is too large (limit {MAX_ENUMERATION_PRIME})")));
    }
    if f.degree() as u64 % P == 0 {
        return input(format!("p = {P} divides the degree {}", f.degree()));
    }
    if f.is_zero() {
        return Ok(SingularSet { isolated_points: Vec::new(), line_components: Vec::new(), conic_components: Vec::new(), all_points: plane_points::<P>(), whole_plane: true });
    }
    let grad = f.gradient();
    let all: Vec<ProjPoint<Fp<P>>> = plane_points::<P>()
        .into_iter()
        .filter(|p| grad.iter().all(|g| g.eval(p.coords()).is_zero()))
        .collect();
    let set: HashSet<&ProjPoint<Fp<P>>> = all.iter().collect();
    let line_size = P as usize + 1;

    let mut lines = Vec::new();
    if all.len() >= line_size {
        let mut seen = HashSet::new();
        for (a, b) in all.iter().tuple_combinations() {
            if lines.iter().any(|l| incident(a, l) && incident(b, l)) {
                continue;
            }
            let l = a.join(b).expect("distinct points");
            if seen.insert(l.clone()) && line_points(&l).iter().all(|q| set.contains(q)) {
                lines.push(l);
            }
        }
    }
    let mut rest: Vec<ProjPoint<Fp<P>>> = all.iter().filter(|p| !lines.iter().any(|l| incident(p, l))).cloned().collect();

    let mut conics = Vec::new();
    while rest.len() + 2 * lines.len() + 2 * conics.len() >= line_size && rest.len() >= 5 {
        let head: Vec<_> = rest.iter().take(15).cloned().collect();
        let found = head.iter().cloned().combinations(5).find_map(|five| {
            let c = Conic::through(&five).ok()?;
            if c.is_degenerate() {
                return None;
            }
            conic_points(&c, &five[0]).iter().all(|q| set.contains(q)).then_some(c)
        });
        match found {
            Some(c) => {
                rest.retain(|p| !c.contains(p));
                conics.push(c);
            }
            None => break,
        }
    }

    Ok(SingularSet { isolated_points: rest, line_components: lines, conic_components: conics, all_points: all, whole_plane: false })
}

/// Singular points by the constraint-matrix route: `a` is singular iff the
/// coefficient vector of `f` is killed by the derivative rows at `a`.
pub fn singular_points_by_rows<const P: u64>(f: &HomogeneousPoly<Fp<P>>) -> Vec<ProjPoint<Fp<P>>> {
    let v = f.to_vector();
    plane_points::<P>()
        .into_iter()
        .filter(|a| {
            super::constraints::singularity_rows(a, f.degree())
                .mul_vec(&v)
                .expect("width matches")
                .iter()
                .all(|x| x.is_zero())
        })
        .collect()
}
