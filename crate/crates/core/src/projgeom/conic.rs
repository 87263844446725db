use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::{ProjLine, ProjPoint};
use crate::error::{input, Error, Result};
use crate::exactalg::{DenseMatrix, Scalar};

/// Row `(x², y², z², xy, xz, yz)` of a point, matching the conic coefficient order.
pub fn veronese<F: Scalar>(p: &ProjPoint<F>) -> [F; 6] {
    let [x, y, z] = p.coords().clone();
    [
        x.clone() * x.clone(),
        y.clone() * y.clone(),
        z.clone() * z.clone(),
        x.clone() * y.clone(),
        x * z.clone(),
        y * z,
    ]
}

/// A plane conic `A x² + B y² + C z² + D xy + E xz + F yz = 0`,
/// normalized so that the first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conic<F> {
    coeffs: [F; 6],
}

impl<F: Scalar> Conic<F> {
    pub fn new(mut coeffs: [F; 6]) -> Result<Self> {
        let lead = coeffs
            .iter()
            .find(|x| !x.is_zero())
            .and_then(|x| x.inv())
            .ok_or_else(|| Error::Input("conic with all coefficients zero".into()))?;
        for c in coeffs.iter_mut() {
            *c = c.clone() * lead.clone();
        }
        Ok(Conic { coeffs })
    }

    pub fn from_i64(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(F::from_i64))
    }

    pub fn coeffs(&self) -> &[F; 6] {
        &self.coeffs
    }

    /// Value of the quadratic form at a representative triple.
    pub fn eval_coords(&self, v: &[F; 3]) -> F {
        let [x, y, z] = v.clone();
        let terms = [
            x.clone() * x.clone(),
            y.clone() * y.clone(),
            z.clone() * z.clone(),
            x.clone() * y.clone(),
            x * z.clone(),
            y * z,
        ];
        self.coeffs
            .iter()
            .zip(terms)
            .fold(F::zero(), |acc, (c, t)| acc + c.clone() * t)
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        self.eval_coords(p.coords()).is_zero()
    }

    /// Twice the symmetric Gram matrix, which keeps entries integral.
    pub fn double_gram(&self) -> DenseMatrix<F> {
        let [a, b, c, d, e, f] = self.coeffs.clone();
        let two = F::from_i64(2);
        DenseMatrix::from_rows(
            vec![
                vec![two.clone() * a, d.clone(), e.clone()],
                vec![d, two.clone() * b, f.clone()],
                vec![e, f, two * c],
            ],
            3,
        )
        .expect("3x3 matrix")
    }

    /// Rebuilds a conic from twice its Gram matrix.
    pub fn from_double_gram(m: &DenseMatrix<F>) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return input("conic Gram matrix must be 3x3");
        }
        let half = F::from_i64(2).inv().ok_or_else(|| Error::Unsupported("conics in characteristic 2".into()))?;
        Self::new([
            m.get(0, 0).clone() * half.clone(),
            m.get(1, 1).clone() * half.clone(),
            m.get(2, 2).clone() * half,
            m.get(0, 1).clone(),
            m.get(0, 2).clone(),
            m.get(1, 2).clone(),
        ])
    }

    /// Degenerate iff the symmetric determinant vanishes (line pair or double line).
    pub fn is_degenerate(&self) -> bool {
        self.double_gram().det().expect("square").is_zero()
    }

    /// The unique conic through five points, if they determine one.
    pub fn through(points: &[ProjPoint<F>]) -> Result<Self> {
        if points.len() != 5 {
            return input(format!("a conic is fixed by 5 points, got {}", points.len()));
        }
        let rows = points.iter().map(|p| veronese(p).to_vec()).collect();
        let k = DenseMatrix::from_rows(rows, 6)?.kernel();
        if k.dim() != 1 {
            return input("five points with four on a line lie on a pencil of conics");
        }
        let v = &k.vectors()[0];
        Self::new(std::array::from_fn(|i| v[i].clone()))
    }

    /// Coefficients `(a, b, c)` of the restriction `a s² + b s t + c t²`
    /// along the parametrization `s U + t V` of the line.
    fn restriction(&self, ln: &ProjLine<F>) -> [F; 3] {
        let [u, v] = ln.spanning_points();
        let (u, v) = (u.coords().clone(), v.coords().clone());
        let w: [F; 3] = std::array::from_fn(|i| u[i].clone() + v[i].clone());
        let a = self.eval_coords(&u);
        let c = self.eval_coords(&v);
        let b = self.eval_coords(&w) - a.clone() - c.clone();
        [a, b, c]
    }

    /// Tangency of a line: the restricted binary form has zero discriminant.
    pub fn is_tangent(&self, ln: &ProjLine<F>) -> Result<bool> {
        let [a, b, c] = self.restriction(ln);
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::LineInConic);
        }
        Ok((b.clone() * b - F::from_i64(4) * a * c).is_zero())
    }

    /// The other point where the line through `p` and `w` meets the conic,
    /// given that `p` is on the conic. Fails when that line is tangent at `p`
    /// or is contained in the conic.
    pub fn second_intersection(&self, p: &ProjPoint<F>, w: &ProjPoint<F>) -> Result<ProjPoint<F>> {
        if !self.contains(p) {
            return input("second intersection needs a point on the conic");
        }
        if p == w {
            return input("second intersection needs two distinct points");
        }
        let (pc, wc) = (p.coords(), w.coords());
        let sum: [F; 3] = std::array::from_fn(|i| pc[i].clone() + wc[i].clone());
        let cw = self.eval_coords(wc);
        let mixed = self.eval_coords(&sum) - self.eval_coords(pc) - cw.clone();
        if mixed.is_zero() {
            return Err(if cw.is_zero() { Error::LineInConic } else { Error::Input("line is tangent at the given point".into()) });
        }
        ProjPoint::new(std::array::from_fn(|i| mixed.clone() * wc[i].clone() - cw.clone() * pc[i].clone()))
    }
}

/// Tangency of a line to a conic; errors if the line is a component.
pub fn tangent<F: Scalar>(c: &Conic<F>, ln: &ProjLine<F>) -> Result<bool> {
    c.is_tangent(ln)
}

/// True iff six points lie on a common conic, degenerate conics included.
pub fn on_common_conic<F: Scalar>(pts: &[ProjPoint<F>]) -> Result<bool> {
    if pts.len() != 6 {
        return input(format!("common-conic test needs six points, got {}", pts.len()));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if pts[i] == pts[j] {
                return input("common-conic test needs distinct points");
            }
        }
    }
    Ok(on_common_conic_unchecked(pts))
}

pub(crate) fn on_common_conic_unchecked<F: Scalar>(pts: &[ProjPoint<F>]) -> bool {
    let rows = pts.iter().map(|p| veronese(p).to_vec()).collect();
    DenseMatrix::from_rows(rows, 6).expect("6x6").det().expect("square").is_zero()
}

impl<F: fmt::Display> fmt::Debug for Conic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(f, "Conic[{}, {}, {}, {}, {}, {}]", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}
