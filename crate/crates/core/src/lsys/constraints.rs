//! Linear conditions on `Π_d` (forms of degree `d`) imposed by singular points
//! and by forced components.
//!
//! `L(K)` is the space of forms singular at every point of `K`. A finite point
//! contributes the three partial-derivative rows at that point; a line or a
//! conic contained in `K` is encoded as divisibility by its square, since a
//! form is singular along a reduced curve exactly when the curve's square
//! divides it. The pieces are combined by intersecting subspaces.

use super::poly::{dim_forms, eval_monomial, monomial_basis, HomogeneousPoly};
use crate::error::{input, Result};
use crate::exactalg::{DenseMatrix, Scalar, SubspaceBasis};
use crate::projgeom::{Config, ProjPoint};

/// The three rows `∂f/∂x = ∂f/∂y = ∂f/∂z = 0` at `a`, in monomial coordinates.
pub fn singularity_rows<F: Scalar>(a: &ProjPoint<F>, d: u32) -> DenseMatrix<F> {
    let basis = monomial_basis(d);
    let rows = (0..3)
        .map(|var| {
            basis
                .iter()
                .map(|&e| {
                    if e[var] == 0 {
                        return F::zero();
                    }
                    let mut lower = e;
                    lower[var] -= 1;
                    F::from_i64(e[var] as i64) * eval_monomial(lower, a.coords())
                })
                .collect()
        })
        .collect();
    DenseMatrix::from_rows(rows, basis.len()).expect("rows match basis")
}

/// The row `f(a) = 0`.
pub fn vanishing_row<F: Scalar>(a: &ProjPoint<F>, d: u32) -> DenseMatrix<F> {
    let row = monomial_basis(d).into_iter().map(|e| eval_monomial(e, a.coords())).collect();
    DenseMatrix::from_rows(vec![row], dim_forms(d)).expect("row matches basis")
}

/// `{ g^m h : h ∈ Π_{d - m deg g} }` inside `Π_d`.
pub fn divisibility_subspace<F: Scalar>(g: &HomogeneousPoly<F>, m: u32, d: u32) -> Result<SubspaceBasis<F>> {
    let used = m * g.degree();
    if used > d {
        return input(format!("g^{m} has degree {used} > {d}"));
    }
    if g.is_zero() {
        return input("divisibility by the zero polynomial");
    }
    let gm = g.pow(m);
    let vecs = monomial_basis(d - used)
        .into_iter()
        .map(|e| gm.mul(&HomogeneousPoly::monomial(e, F::one())).to_vector())
        .collect();
    SubspaceBasis::span(dim_forms(d), vecs)
}

/// The space `L(K)` of degree-`d` forms singular along the whole configuration.
pub fn constraint_subspace<F: Scalar>(k: &Config<F>, d: u32) -> Result<SubspaceBasis<F>> {
    if d == 0 {
        return input("forms of degree 0 have no singular points to prescribe");
    }
    let n = dim_forms(d);
    if k.is_whole_plane() {
        return Ok(SubspaceBasis::zero(n));
    }
    let mut eqs = DenseMatrix::empty(n);
    for p in k.points() {
        eqs = eqs.vstack(&singularity_rows(p, d))?;
    }
    let mut components = Vec::new();
    for l in k.lines() {
        components.push(HomogeneousPoly::linear(l));
    }
    for c in k.conics() {
        components.push(HomogeneousPoly::quadratic(c));
    }
    for g in &components {
        if 2 * g.degree() > d {
            // No nonzero form of degree d is divisible by g²; only 0 survives.
            return Ok(SubspaceBasis::zero(n));
        }
        eqs = eqs.vstack(&divisibility_subspace(g, 2, d)?.equations())?;
    }
    Ok(eqs.kernel())
}

/// `dim L(K)` for forms of degree `d`. The whole plane gives 0 without building a matrix.
pub fn dim_l<F: Scalar>(k: &Config<F>, d: u32) -> Result<usize> {
    if k.is_whole_plane() {
        return Ok(0);
    }
    Ok(constraint_subspace(k, d)?.dim())
}

/// Forms of degree `d` vanishing at every `on` point and singular at every `sing` point.
pub fn vanishing_and_singular<F: Scalar>(on: &[ProjPoint<F>], sing: &[ProjPoint<F>], d: u32) -> DenseMatrix<F> {
    let mut m = DenseMatrix::empty(dim_forms(d));
    for p in on {
        m = m.vstack(&vanishing_row(p, d)).expect("same width");
    }
    for p in sing {
        m = m.vstack(&singularity_rows(p, d)).expect("same width");
    }
    m
}
