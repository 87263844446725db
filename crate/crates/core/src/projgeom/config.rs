use serde::{Deserialize, Serialize};

use super::conic::Conic;
use super::point::{incident, ProjLine, ProjPoint};
use crate::error::{input, Result};
use crate::exactalg::Scalar;

/// A candidate singular set: finitely many points plus optional full
/// components (lines, conics, or the whole plane), tagged with its type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Config<F: Scalar> {
    points: Vec<ProjPoint<F>>,
    lines: Vec<ProjLine<F>>,
    conics: Vec<Conic<F>>,
    whole_plane: bool,
    type_id: Option<u8>,
}

impl<F: Scalar> Config<F> {
    pub fn new(
        points: Vec<ProjPoint<F>>,
        lines: Vec<ProjLine<F>>,
        conics: Vec<Conic<F>>,
        type_id: Option<u8>,
    ) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return input(format!("point {p} listed twice"));
            }
        }
        for (i, l) in lines.iter().enumerate() {
            if lines[..i].contains(l) {
                return input(format!("line {l} listed twice"));
            }
        }
        if let Some(t) = type_id {
            if !(1..=42).contains(&t) {
                return input(format!("type id {t} outside 1..=42"));
            }
        }
        Ok(Config { points, lines, conics, whole_plane: false, type_id })
    }

    pub fn from_points(points: Vec<ProjPoint<F>>) -> Result<Self> {
        Self::new(points, Vec::new(), Vec::new(), None)
    }

    pub fn empty() -> Self {
        Config { points: Vec::new(), lines: Vec::new(), conics: Vec::new(), whole_plane: false, type_id: None }
    }

    /// The configuration consisting of every point of the plane.
    pub fn whole_plane() -> Self {
        Config { whole_plane: true, type_id: Some(42), ..Self::empty() }
    }

    pub fn with_type(mut self, type_id: Option<u8>) -> Self {
        self.type_id = type_id;
        self
    }

    pub fn points(&self) -> &[ProjPoint<F>] {
        &self.points
    }

    pub fn lines(&self) -> &[ProjLine<F>] {
        &self.lines
    }

    pub fn conics(&self) -> &[Conic<F>] {
        &self.conics
    }

    pub fn is_whole_plane(&self) -> bool {
        self.whole_plane
    }

    pub fn type_id(&self) -> Option<u8> {
        self.type_id
    }

    /// True when the configuration is a finite point set.
    pub fn is_finite(&self) -> bool {
        !self.whole_plane && self.lines.is_empty() && self.conics.is_empty()
    }

    /// Whether a point belongs to the set described by the configuration.
    pub fn covers(&self, p: &ProjPoint<F>) -> bool {
        self.whole_plane
            || self.points.contains(p)
            || self.lines.iter().any(|l| incident(p, l))
            || self.conics.iter().any(|c| c.contains(p))
    }

    /// Points not already lying on a listed component.
    pub fn isolated_points(&self) -> Vec<ProjPoint<F>> {
        self.points
            .iter()
            .filter(|p| !self.lines.iter().any(|l| incident(p, l)) && !self.conics.iter().any(|c| c.contains(p)))
            .cloned()
            .collect()
    }

    /// The finite configuration made of the chosen points; components are dropped.
    pub fn subset(&self, indices: &[usize]) -> Self {
        Config {
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            lines: Vec::new(),
            conics: Vec::new(),
            whole_plane: false,
            type_id: None,
        }
    }

    /// Applies `f` to every point, line and conic.
    pub fn map_geometry(
        &self,
        fp: impl Fn(&ProjPoint<F>) -> Result<ProjPoint<F>>,
        fl: impl Fn(&ProjLine<F>) -> Result<ProjLine<F>>,
        fc: impl Fn(&Conic<F>) -> Result<Conic<F>>,
    ) -> Result<Self> {
        Ok(Config {
            points: self.points.iter().map(fp).collect::<Result<_>>()?,
            lines: self.lines.iter().map(fl).collect::<Result<_>>()?,
            conics: self.conics.iter().map(fc).collect::<Result<_>>()?,
            whole_plane: self.whole_plane,
            type_id: self.type_id,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    #[test]
    fn rejects_repeated_points() {
        let p = ProjPoint::<Q>::from_i64(1, 2, 3).unwrap();
        let q = ProjPoint::<Q>::from_i64(2, 4, 6).unwrap();
        assert!(Config::from_points(vec![p, q]).is_err());
    }

    #[test]
    fn isolated_points_skip_components() {
        let on = ProjPoint::<Q>::from_i64(0, 1, 1).unwrap();
        let off = ProjPoint::<Q>::from_i64(1, 1, 1).unwrap();
        let x0 = ProjLine::from_i64(1, 0, 0).unwrap();
        let k = Config::new(vec![on.clone(), off.clone()], vec![x0], vec![], Some(17)).unwrap();
        assert_eq!(k.isolated_points(), vec![off]);
        assert!(k.covers(&on));
        assert!(!k.is_finite());
    }
}
