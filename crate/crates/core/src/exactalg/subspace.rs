use serde::{Deserialize, Serialize};

use super::field::Scalar;
use super::matrix::DenseMatrix;
use crate::error::{input, Result};

/// A linear subspace of `F^n`, stored as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// bases compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubspaceBasis<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> SubspaceBasis<F> {
    /// Span of arbitrary (possibly dependent) vectors of length `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return input(format!("vector of length {} in ambient dimension {ambient_dim}", v.len()));
        }
        let (basis, pivots) = F::rref(vectors, ambient_dim);
        Ok(SubspaceBasis { ambient_dim, basis, pivots })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        SubspaceBasis { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn as_matrix(&self) -> DenseMatrix<F> {
        DenseMatrix::from_rows(self.basis.clone(), self.ambient_dim).expect("basis rows have ambient length")
    }

    /// Linear equations cutting out the subspace: rows spanning its annihilator.
    pub fn equations(&self) -> DenseMatrix<F> {
        if self.basis.is_empty() {
            return DenseMatrix::identity(self.ambient_dim);
        }
        let ann = self.as_matrix().kernel();
        if ann.dim() == 0 {
            return DenseMatrix::empty(self.ambient_dim);
        }
        ann.as_matrix()
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[F]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * b.clone();
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains(v))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_ambient(self, other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, vecs)
    }

    /// `self ∩ other`, computed as the common solution set of both equation systems.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_ambient(self, other)?;
        let eqs = self.equations().vstack(&other.equations())?;
        Ok(eqs.kernel())
    }
}

fn check_ambient<F: Scalar>(a: &SubspaceBasis<F>, b: &SubspaceBasis<F>) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return input(format!("ambient dimensions {} and {} differ", a.ambient_dim, b.ambient_dim));
    }
    Ok(())
}

/// `a ∩ b`.
pub fn intersect<F: Scalar>(a: &SubspaceBasis<F>, b: &SubspaceBasis<F>) -> Result<SubspaceBasis<F>> {
    a.intersect(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Q;

    fn e(n: usize, i: usize) -> Vec<Q> {
        (0..n).map(|j| Q::from_i64((i == j) as i64)).collect()
    }

    #[test]
    fn coordinate_planes() {
        let a = SubspaceBasis::span(4, vec![e(4, 0), e(4, 1)]).unwrap();
        let b = SubspaceBasis::span(4, vec![e(4, 2), e(4, 3)]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let c = SubspaceBasis::span(3, vec![e(3, 0), e(3, 1)]).unwrap();
        let d = SubspaceBasis::span(3, vec![e(3, 1), e(3, 2)]).unwrap();
        let cap = c.intersect(&d).unwrap();
        assert_eq!(cap, SubspaceBasis::span(3, vec![e(3, 1)]).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = SubspaceBasis::<Q>::full(3);
        let b = SubspaceBasis::<Q>::full(4);
        assert!(a.intersect(&b).is_err());
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn full_and_zero_equations() {
        let full = SubspaceBasis::<Q>::full(3);
        assert_eq!(full.equations().rows(), 0);
        assert_eq!(full.equations().kernel(), full);
        let zero = SubspaceBasis::<Q>::zero(3);
        assert_eq!(zero.equations().kernel().dim(), 0);
    }

    #[test]
    fn canonical_basis_is_independent_of_spanning_set() {
        let v1: Vec<Q> = [1, 2, 3].iter().map(|&x| Q::from_i64(x)).collect();
        let v2: Vec<Q> = [0, 1, 1].iter().map(|&x| Q::from_i64(x)).collect();
        let w: Vec<Q> = v1.iter().zip(&v2).map(|(a, b)| a + b * Q::from_i64(3)).collect();
        let a = SubspaceBasis::span(3, vec![v1.clone(), v2.clone()]).unwrap();
        let b = SubspaceBasis::span(3, vec![w, v2, v1]).unwrap();
        assert_eq!(a, b);
    }
}
