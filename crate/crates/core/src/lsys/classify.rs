//! Recognition of the configuration type from incidence data.
//!
//! Each type has a predicate on the combinatorics of the configuration:
//! the number of points, the maximal collinear subsets with at least three
//! points, conic membership, and any full components. Classification
//! evaluates every predicate; the types are pairwise disjoint, so more than
//! one match is reported as an internal error.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, Scalar};
use crate::projgeom::conic::veronese;
use crate::projgeom::point::collinear_any;
use crate::projgeom::{incident, Config, Conic, ProjPoint};

/// Result of classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    Type(u8),
    /// Nonempty but matching no type.
    None,
    /// Empty configuration: the curve is nonsingular.
    Nonsingular,
}

impl Classification {
    pub fn type_id(self) -> Option<u8> {
        match self {
            Classification::Type(t) => Some(t),
            _ => None,
        }
    }
}

/// Incidence data of a finite point set.
struct Fingerprint<'a, F> {
    pts: &'a [ProjPoint<F>],
    /// Maximal collinear subsets with at least three points, largest first.
    rich: Vec<Vec<usize>>,
    /// Size of the largest collinear subset.
    m: usize,
}

impl<'a, F: Scalar> Fingerprint<'a, F> {
    fn new(pts: &'a [ProjPoint<F>]) -> Self {
        let n = pts.len();
        let mut by_line: HashMap<_, Vec<usize>> = HashMap::new();
        for (i, j) in (0..n).tuple_combinations() {
            let l = pts[i].join(&pts[j]).expect("distinct points");
            let e = by_line.entry(l).or_default();
            for k in [i, j] {
                if !e.contains(&k) {
                    e.push(k);
                }
            }
        }
        let mut rich: Vec<Vec<usize>> = by_line
            .into_values()
            .filter(|v| v.len() >= 3)
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect();
        rich.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let m = rich.first().map_or(n.min(2), |l| l.len());
        Fingerprint { pts, rich, m }
    }

    fn n(&self) -> usize {
        self.pts.len()
    }

    fn lines_of_size(&self, k: usize) -> Vec<&Vec<usize>> {
        self.rich.iter().filter(|l| l.len() == k).collect()
    }

    fn complement(&self, idx: &[usize]) -> Vec<usize> {
        (0..self.n()).filter(|i| !idx.contains(i)).collect()
    }

    fn collinear(&self, idx: &[usize]) -> bool {
        idx.iter()
            .tuple_combinations()
            .all(|(&a, &b, &c)| collinear_any(&self.pts[a], &self.pts[b], &self.pts[c]))
    }

    fn no_three_collinear(&self, idx: &[usize]) -> bool {
        idx.iter()
            .tuple_combinations()
            .all(|(&a, &b, &c)| !collinear_any(&self.pts[a], &self.pts[b], &self.pts[c]))
    }

    fn conic_space_dim(&self, idx: &[usize]) -> (usize, DenseMatrix<F>) {
        let rows = idx.iter().map(|&i| veronese(&self.pts[i]).to_vec()).collect();
        let m = DenseMatrix::from_rows(rows, 6).expect("width 6");
        let k = m.kernel();
        (k.dim(), k.as_matrix())
    }

    /// All chosen points lie on one conic, possibly degenerate.
    fn on_conic(&self, idx: &[usize]) -> bool {
        self.conic_space_dim(idx).0 > 0
    }

    /// All chosen points lie on one nondegenerate conic.
    fn on_nondegenerate_conic(&self, idx: &[usize]) -> bool {
        let (dim, basis) = self.conic_space_dim(idx);
        if dim != 1 {
            // Several conics through five or more points force four of them
            // onto a line, which every such conic then contains.
            return false;
        }
        let c: [F; 6] = std::array::from_fn(|j| basis.get(0, j).clone());
        Conic::new(c).map(|c| !c.is_degenerate()).unwrap_or(false)
    }

    fn disjoint(a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|i| !b.contains(i))
    }

    fn shared(a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().copied().filter(|i| b.contains(i)).collect()
    }

    /// Two disjoint collinear triples among the rich lines of size 3.
    fn two_disjoint_triples(&self) -> bool {
        self.lines_of_size(3).iter().tuple_combinations().any(|(a, b)| Self::disjoint(a, b))
    }

    fn pair_of_four_lines(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let fours = self.lines_of_size(4);
        (fours.len() == 2).then(|| (fours[0].clone(), fours[1].clone()))
    }

    fn matches(&self, t: u8) -> bool {
        let (n, m) = (self.n(), self.m);
        let all: Vec<usize> = (0..n).collect();
        match t {
            1..=3 => n == t as usize,
            4..=10 => n == t as usize && m == n,
            12 => n == 4 && m < 4,
            13..=16 => n == t as usize - 8 && m == n - 1,
            18 => n == 5 && m <= 3,
            19..=21 => n == t as usize - 13 && m == n - 2,
            23 => n == 6 && m == 3 && self.on_conic(&all),
            24 => n == 6 && m <= 2 && self.on_conic(&all),
            25 => {
                n == 7 && m == 4 && matches!(self.pair_of_four_lines(), Some((a, b)) if Self::shared(&a, &b).len() == 1)
            }
            26 => n == 6 && m <= 3 && !self.on_conic(&all),
            27 | 34 => {
                n == 7 && m == 4 && self.lines_of_size(4).len() == 1 && {
                    let off = self.complement(self.lines_of_size(4)[0]);
                    self.collinear(&off) == (t == 27)
                }
            }
            28 => n == 8 && m == 5 && self.lines_of_size(5).len() == 1 && self.collinear(&self.complement(&self.rich[0])),
            30 => n == 8 && m == 4 && matches!(self.pair_of_four_lines(), Some((a, b)) if Self::disjoint(&a, &b)),
            32 => n == 7 && m <= 2 && self.on_nondegenerate_conic(&all),
            35 => n == 7 && m == 3 && self.two_disjoint_triples(),
            36 => {
                n == 7
                    && !self.on_conic(&all)
                    && (0..n).any(|skip| self.on_nondegenerate_conic(&self.complement(&[skip])))
            }
            37 => {
                n == 8
                    && m == 4
                    && matches!(self.pair_of_four_lines(), Some((a, b)) if Self::shared(&a, &b).len() == 1)
            }
            38 => n == 8 && m == 4 && self.lines_of_size(4).len() == 1 && self.pencil_pairs(self.lines_of_size(4)[0]),
            39 => n == 9 && m == 4 && self.triangle_with_conic(),
            40 => n == 10 && m == 4 && self.five_lines(),
            _ => false,
        }
    }

    /// Four points on a line and four off it, no three of those collinear,
    /// such that the line points split into two pairs each conconic with the four.
    fn pencil_pairs(&self, line: &[usize]) -> bool {
        let off = self.complement(line);
        if !self.no_three_collinear(&off) {
            return false;
        }
        let pairings = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
        pairings.iter().any(|p| {
            let with = |a: usize, b: usize| {
                let mut s = off.clone();
                s.extend([line[a], line[b]]);
                self.on_conic(&s)
            };
            with(p[0], p[1]) && with(p[2], p[3])
        })
    }

    /// Three four-point lines forming a triangle whose vertices are in the set,
    /// with the six non-vertex points on a conic.
    fn triangle_with_conic(&self) -> bool {
        let fours = self.lines_of_size(4);
        if fours.len() != 3 {
            return false;
        }
        let mut vertices = Vec::new();
        for (a, b) in fours.iter().tuple_combinations() {
            let s = Self::shared(a, b);
            if s.len() != 1 {
                return false;
            }
            vertices.push(s[0]);
        }
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != 3 {
            return false;
        }
        let rest = self.complement(&vertices);
        let covered = rest.iter().all(|i| fours.iter().any(|l| l.contains(i)));
        covered && self.on_conic(&rest)
    }

    /// Five four-point lines with every point on exactly two of them.
    fn five_lines(&self) -> bool {
        let fours = self.lines_of_size(4);
        fours.len() == 5 && (0..self.n()).all(|i| fours.iter().filter(|l| l.contains(&i)).count() == 2)
    }
}

/// Types whose predicates hold for a finite point set.
fn finite_matches<F: Scalar>(pts: &[ProjPoint<F>]) -> Vec<u8> {
    let fp = Fingerprint::new(pts);
    (1..=42u8).filter(|&t| fp.matches(t)).collect()
}

/// Classifies a configuration, absorbing listed points that lie on its components.
pub fn classify<F: Scalar>(k: &Config<F>) -> Result<Classification> {
    if k.is_whole_plane() {
        return Ok(Classification::Type(42));
    }
    let iso = k.isolated_points();
    let (lines, conics) = (k.lines(), k.conics());
    if lines.is_empty() && conics.is_empty() {
        if iso.is_empty() {
            return Ok(Classification::Nonsingular);
        }
        let hits = finite_matches(&iso);
        return match hits.as_slice() {
            [] => Ok(Classification::None),
            [t] => Ok(Classification::Type(*t)),
            _ => Err(Error::Invariant(format!("configuration matches several types {hits:?}"))),
        };
    }
    let t = match (lines.len(), conics.len(), iso.len()) {
        (0, 1, 0) if !conics[0].is_degenerate() => Some(33),
        (2, 0, 0) => Some(31),
        (1, 0, 0) => Some(11),
        (1, 0, 1) => Some(17),
        (1, 0, 2) => Some(22),
        (1, 0, 3) => {
            let c = collinear_any(&iso[0], &iso[1], &iso[2]);
            Some(if c { 29 } else { 41 })
        }
        _ => None,
    };
    Ok(t.map_or(Classification::None, Classification::Type))
}

/// Classifies a finite point set.
pub fn classify_points<F: Scalar>(pts: &[ProjPoint<F>]) -> Result<Classification> {
    classify(&Config::from_points(pts.to_vec())?)
}

/// Every type whose predicate holds; more than one entry means the taxonomy overlaps.
pub fn matching_types<F: Scalar>(k: &Config<F>) -> Vec<u8> {
    if k.is_finite() {
        finite_matches(&k.isolated_points())
    } else {
        classify(k).ok().and_then(|c| c.type_id()).into_iter().collect()
    }
}

/// True iff the point lies on some listed component of the configuration.
pub fn on_component<F: Scalar>(k: &Config<F>, p: &ProjPoint<F>) -> bool {
    k.lines().iter().any(|l| incident(p, l)) || k.conics().iter().any(|c| c.contains(p))
}
