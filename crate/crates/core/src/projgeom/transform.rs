use rand::Rng;

use super::conic::Conic;
use super::config::Config;
use super::point::{ProjLine, ProjPoint};
use crate::error::{input, Result};
use crate::exactalg::{DenseMatrix, Scalar};

/// An invertible linear change of coordinates of the plane.
///
/// Points map by `M p`, lines by `M^{-T} l`, conics by `M^{-T} S M^{-1}`,
/// so incidence and conic membership are preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjTransform<F: Scalar> {
    m: DenseMatrix<F>,
    inv: DenseMatrix<F>,
}

impl<F: Scalar> ProjTransform<F> {
    pub fn new(m: DenseMatrix<F>) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return input("projective transform must be 3x3");
        }
        match m.inverse()? {
            Some(inv) => Ok(ProjTransform { m, inv }),
            None => input("projective transform must be invertible"),
        }
    }

    /// A random invertible transform with entries drawn by `F::sample`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let data = (0..9).map(|_| F::sample(rng)).collect();
            let m = DenseMatrix::new(3, 3, data).expect("3x3");
            if let Ok(t) = Self::new(m) {
                return t;
            }
        }
    }

    pub fn matrix(&self) -> &DenseMatrix<F> {
        &self.m
    }

    pub fn point(&self, p: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        let v = self.m.mul_vec(p.coords())?;
        ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn line(&self, l: &ProjLine<F>) -> Result<ProjLine<F>> {
        let v = self.inv.transpose().mul_vec(l.coeffs())?;
        ProjLine::new([v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn conic(&self, c: &Conic<F>) -> Result<Conic<F>> {
        let s = self.inv.transpose().mul(&c.double_gram())?.mul(&self.inv)?;
        Conic::from_double_gram(&s)
    }

    pub fn config(&self, k: &Config<F>) -> Result<Config<F>> {
        k.map_geometry(|p| self.point(p), |l| self.line(l), |c| self.conic(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;
    use crate::projgeom::point::incident;

    #[test]
    fn preserves_incidence_and_membership() {
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]).unwrap();
        let t = ProjTransform::new(m).unwrap();
        let a = ProjPoint::from_i64(1, 2, 3).unwrap();
        let b = ProjPoint::from_i64(0, 1, 5).unwrap();
        let l = a.join(&b).unwrap();
        assert!(incident(&t.point(&a).unwrap(), &t.line(&l).unwrap()));
        let c = Conic::<Q>::from_i64([0, 0, -1, 1, 0, 0]).unwrap();
        let on = ProjPoint::from_i64(4, 1, 2).unwrap();
        assert!(c.contains(&on));
        assert!(t.conic(&c).unwrap().contains(&t.point(&on).unwrap()));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).unwrap();
        assert!(ProjTransform::new(m).is_err());
    }
}
