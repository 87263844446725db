use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::exactalg::{DenseMatrix, Scalar};

/// Scales a nonzero triple so that its first nonzero entry is 1.
fn normalize<F: Scalar>(mut v: [F; 3]) -> Option<[F; 3]> {
    let lead = v.iter().find(|x| !x.is_zero())?.inv()?;
    for x in v.iter_mut() {
        *x = x.clone() * lead.clone();
    }
    Some(v)
}

fn dot<F: Scalar>(a: &[F; 3], b: &[F; 3]) -> F {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub(crate) fn cross<F: Scalar>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub(crate) fn det3<F: Scalar>(a: &[F; 3], b: &[F; 3], c: &[F; 3]) -> F {
    dot(a, &cross(b, c))
}

/// A point of the projective plane, stored with first nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjPoint<F> {
    coords: [F; 3],
}

/// A line `a x + b y + c z = 0`, normalized like a point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjLine<F> {
    coeffs: [F; 3],
}

impl<F: Scalar> ProjPoint<F> {
    pub fn new(coords: [F; 3]) -> Result<Self> {
        normalize(coords)
            .map(|coords| ProjPoint { coords })
            .ok_or_else(|| Error::Input("projective point with all coordinates zero".into()))
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([F::from_i64(x), F::from_i64(y), F::from_i64(z)])
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }

    /// The line through two distinct points.
    pub fn join(&self, other: &Self) -> Result<ProjLine<F>> {
        ProjLine::new(cross(&self.coords, &other.coords))
            .map_err(|_| Error::Input("join of coincident points".into()))
    }
}

impl<F: Scalar> ProjLine<F> {
    pub fn new(coeffs: [F; 3]) -> Result<Self> {
        normalize(coeffs)
            .map(|coeffs| ProjLine { coeffs })
            .ok_or_else(|| Error::Input("projective line with all coefficients zero".into()))
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([F::from_i64(a), F::from_i64(b), F::from_i64(c)])
    }

    pub fn coeffs(&self) -> &[F; 3] {
        &self.coeffs
    }

    pub fn eval(&self, pt: &ProjPoint<F>) -> F {
        dot(&self.coeffs, &pt.coords)
    }

    /// The common point of two distinct lines.
    pub fn meet(&self, other: &Self) -> Result<ProjPoint<F>> {
        ProjPoint::new(cross(&self.coeffs, &other.coeffs))
            .map_err(|_| Error::Input("meet of coincident lines".into()))
    }

    /// Two points spanning the line, used to parametrize it.
    pub fn spanning_points(&self) -> [ProjPoint<F>; 2] {
        let row = DenseMatrix::from_rows(vec![self.coeffs.to_vec()], 3).expect("1x3 row");
        let k = row.kernel();
        let v = k.vectors();
        let to_pt = |v: &Vec<F>| ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone()]).expect("kernel vector is nonzero");
        [to_pt(&v[0]), to_pt(&v[1])]
    }

    /// The point `s U + t V` for the spanning points `U`, `V`.
    pub fn point_at(&self, s: &F, t: &F) -> Result<ProjPoint<F>> {
        let [u, v] = self.spanning_points();
        let c = |i: usize| s.clone() * u.coords[i].clone() + t.clone() * v.coords[i].clone();
        ProjPoint::new([c(0), c(1), c(2)])
    }
}

/// True iff the point lies on the line.
pub fn incident<F: Scalar>(pt: &ProjPoint<F>, ln: &ProjLine<F>) -> bool {
    ln.eval(pt).is_zero()
}

/// True iff three distinct points lie on one line.
pub fn collinear<F: Scalar>(p1: &ProjPoint<F>, p2: &ProjPoint<F>, p3: &ProjPoint<F>) -> Result<bool> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return input("collinearity of coincident points");
    }
    Ok(det3(&p1.coords, &p2.coords, &p3.coords).is_zero())
}

/// Collinearity without the distinctness precondition; coincident points count as collinear.
pub(crate) fn collinear_any<F: Scalar>(p1: &ProjPoint<F>, p2: &ProjPoint<F>, p3: &ProjPoint<F>) -> bool {
    det3(&p1.coords, &p2.coords, &p3.coords).is_zero()
}

impl<F: fmt::Display> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl<F: fmt::Display> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<F: fmt::Display> fmt::Debug for ProjLine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

impl<F: fmt::Display> fmt::Display for ProjLine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
