//! Structural checks of the taxonomy on sampled configurations.
//!
//! For a finite configuration `K` of type `i`, every proper subset that is
//! itself of some type must be of a type listed before `i`, and no
//! configuration may satisfy two type predicates at once.

use itertools::Itertools;
use serde::Serialize;

use super::classify::matching_types;
use crate::exactalg::Scalar;
use crate::projgeom::Config;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// The sample carries no type tag.
    Untyped,
    /// The sample itself does not classify to its own tag.
    SelfMismatch { classified: Vec<u8> },
    /// A configuration matched more than one type.
    Overlap { types: Vec<u8> },
    /// A subset classified to a type not earlier than the sample's.
    SubsetNotEarlier { subset_type: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sample: usize,
    pub type_id: Option<u8>,
    /// Indices of the offending subset; empty when the sample itself is at fault.
    pub subset: Vec<usize>,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub samples: usize,
    pub subsets_checked: usize,
    /// Proper subsets matching no type.
    pub unclassified_subsets: usize,
    pub violations: Vec<Violation>,
}

impl ConditionsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the subset-ordering and disjointness checks on every sample.
pub fn check_conditions<F: Scalar>(samples: &[Config<F>]) -> ConditionsReport {
    let mut report = ConditionsReport { samples: samples.len(), ..Default::default() };
    for (si, k) in samples.iter().enumerate() {
        let violation = |subset: Vec<usize>, kind| Violation { sample: si, type_id: k.type_id(), subset, kind };
        let Some(t) = k.type_id() else {
            report.violations.push(violation(vec![], ViolationKind::Untyped));
            continue;
        };
        let own = matching_types(k);
        if own.len() > 1 {
            report.violations.push(violation(vec![], ViolationKind::Overlap { types: own.clone() }));
        }
        if own != [t] {
            report.violations.push(violation(vec![], ViolationKind::SelfMismatch { classified: own }));
        }
        if !k.is_finite() {
            continue;
        }
        let n = k.points().len();
        for size in 1..n {
            for idx in (0..n).combinations(size) {
                report.subsets_checked += 1;
                let hits = matching_types(&k.subset(&idx));
                match hits.as_slice() {
                    [] => report.unclassified_subsets += 1,
                    [j] if *j < t => {}
                    [j] => report.violations.push(violation(idx, ViolationKind::SubsetNotEarlier { subset_type: *j })),
                    _ => report.violations.push(violation(idx, ViolationKind::Overlap { types: hits })),
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;
    use crate::projgeom::ProjPoint;

    fn p(x: i64, y: i64, z: i64) -> ProjPoint<Q> {
        ProjPoint::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn two_points_pass() {
        let k = Config::from_points(vec![p(1, 0, 0), p(0, 1, 0)]).unwrap().with_type(Some(2));
        let r = check_conditions(&[k]);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.subsets_checked, 2);
    }

    #[test]
    fn four_collinear_pass() {
        let k = Config::from_points((1..=4).map(|i| p(i, 0, 1)).collect()).unwrap().with_type(Some(4));
        assert!(check_conditions(&[k]).passed());
    }

    #[test]
    fn four_on_line_plus_two() {
        let mut pts: Vec<_> = (1..=4).map(|i| p(i, 0, 1)).collect();
        pts.extend([p(0, 1, 1), p(1, 3, 1)]);
        let k = Config::from_points(pts).unwrap().with_type(Some(19));
        let r = check_conditions(&[k]);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn wrong_tag_is_reported() {
        let k = Config::from_points(vec![p(1, 0, 0), p(0, 1, 0)]).unwrap().with_type(Some(1));
        let r = check_conditions(&[k]);
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| matches!(v.kind, ViolationKind::SelfMismatch { .. })));
        assert!(r.violations.iter().any(|v| matches!(v.kind, ViolationKind::SubsetNotEarlier { subset_type: 1 })));
    }
}
