use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{input, Result};
use crate::exactalg::Scalar;
use crate::projgeom::{Conic, ProjLine};

/// Exponent triple `(a, b, c)` of the monomial `x^a y^b z^c`.
pub type Exponent = [u32; 3];

/// Monomials of degree `d` in graded-lex order with `x > y > z`:
/// `x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y², …, z^d`.
pub fn monomial_basis(d: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(dim_forms(d));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// `dim Π_d = (d+1)(d+2)/2`.
pub fn dim_forms(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// Position of a monomial of degree `a+b+c` in [`monomial_basis`].
pub fn monomial_index(e: Exponent) -> usize {
    let d = e[0] + e[1] + e[2];
    let k = (d - e[0]) as usize;
    k * (k + 1) / 2 + (k - e[1] as usize)
}

/// Evaluates a monomial at a coordinate triple.
pub fn eval_monomial<F: Scalar>(e: Exponent, v: &[F; 3]) -> F {
    let mut acc = F::one();
    for (x, &k) in v.iter().zip(&e) {
        for _ in 0..k {
            acc = acc * x.clone();
        }
    }
    acc
}

/// A homogeneous polynomial in `x, y, z`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly<F> {
    degree: u32,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> HomogeneousPoly<F> {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPoly { degree, terms: BTreeMap::new() }
    }

    pub fn new(degree: u32, terms: impl IntoIterator<Item = (Exponent, F)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return input(format!("monomial {e:?} does not have degree {degree}"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: F) {
        let sum = self.terms.remove(&e).map_or(c.clone(), |old| old + c);
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn monomial(e: Exponent, c: F) -> Self {
        Self::new(e.iter().sum(), [(e, c)]).expect("degree matches")
    }

    pub fn linear(l: &ProjLine<F>) -> Self {
        let [a, b, c] = l.coeffs().clone();
        Self::new(1, [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)]).expect("degree 1")
    }

    pub fn quadratic(q: &Conic<F>) -> Self {
        let exps = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];
        Self::new(2, exps.into_iter().zip(q.coeffs().iter().cloned())).expect("degree 2")
    }

    /// Coordinates in [`monomial_basis`] order.
    pub fn from_vector(degree: u32, v: &[F]) -> Result<Self> {
        if v.len() != dim_forms(degree) {
            return input(format!("vector of length {} for degree {degree}", v.len()));
        }
        Self::new(degree, monomial_basis(degree).into_iter().zip(v.iter().cloned()))
    }

    pub fn to_vector(&self) -> Vec<F> {
        let mut v = vec![F::zero(); dim_forms(self.degree)];
        for (e, c) in &self.terms {
            v[monomial_index(*e)] = c.clone();
        }
        v
    }

    /// A polynomial with every coefficient drawn by `F::sample`.
    pub fn random<R: Rng + ?Sized>(degree: u32, rng: &mut R) -> Self {
        let v: Vec<F> = (0..dim_forms(degree)).map(|_| F::sample(rng)).collect();
        Self::from_vector(degree, &v).expect("length matches")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, v: &[F; 3]) -> F {
        self.terms
            .iter()
            .fold(F::zero(), |acc, (e, c)| acc + c.clone() * eval_monomial(*e, v))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return input("sum of forms of different degrees");
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self::zero(self.degree);
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::monomial([0, 0, 0], F::one()), |acc, _| acc.mul(self))
    }

    /// Partial derivative in variable `var` (0 = x, 1 = y, 2 = z).
    ///
    /// The derivative of a linear form is a constant, stored as degree 0.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            out.add_term(e2, c.clone() * F::from_i64(e[var] as i64));
        }
        out
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }
}

impl<F: Scalar> fmt::Debug for HomogeneousPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> fmt::Display for HomogeneousPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in monomial_basis(self.degree) {
            let Some(c) = self.terms.get(&e) else { continue };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (name, k) in ["x", "y", "z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Fp, Q};

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(monomial_basis(5).len(), 21);
        assert_eq!(monomial_basis(1).len(), 3);
        assert_eq!(monomial_basis(3).len(), 10);
        assert_eq!(monomial_basis(0), vec![[0, 0, 0]]);
        assert_eq!(&monomial_basis(2), &[[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]);
        for d in 0..8 {
            for (i, e) in monomial_basis(d).into_iter().enumerate() {
                assert_eq!(monomial_index(e), i);
            }
        }
    }

    #[test]
    fn vector_round_trip_drops_zeros() {
        let v: Vec<Q> = (0..10).map(|i| Q::from_i64(i % 3)).collect();
        let p = HomogeneousPoly::from_vector(3, &v).unwrap();
        assert_eq!(p.terms().len(), 6);
        assert_eq!(p.to_vector(), v);
    }

    #[test]
    fn euler_relation_on_a_fixed_form() {
        type F = Fp<101>;
        let f = HomogeneousPoly::<F>::new(5, [([5, 0, 0], F::new(3)), ([1, 2, 2], F::new(7)), ([0, 1, 4], F::new(100))]).unwrap();
        let x = HomogeneousPoly::monomial([1, 0, 0], F::new(1));
        let y = HomogeneousPoly::monomial([0, 1, 0], F::new(1));
        let z = HomogeneousPoly::monomial([0, 0, 1], F::new(1));
        let [fx, fy, fz] = f.gradient();
        let lhs = x.mul(&fx).add(&y.mul(&fy)).unwrap().add(&z.mul(&fz)).unwrap();
        assert_eq!(lhs, f.scale(&F::new(5)));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        assert!(HomogeneousPoly::<Q>::new(2, [([1, 0, 0], Q::from_i64(1))]).is_err());
    }

    #[test]
    fn power_of_a_line() {
        let l = HomogeneousPoly::<Q>::new(1, [([1, 0, 0], Q::from_i64(1)), ([0, 1, 0], Q::from_i64(1))]).unwrap();
        let sq = l.pow(2);
        assert_eq!(sq.coeff([1, 1, 0]), Q::from_i64(2));
        assert_eq!(sq.degree(), 2);
    }
}
