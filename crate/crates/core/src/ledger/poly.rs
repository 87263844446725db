use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// A polynomial in `t` with nonnegative integer coefficients, used for
/// Betti numbers and Poincaré polynomials. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoincarePoly {
    coeffs: BTreeMap<u32, u64>,
}

impl PoincarePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · t^deg`.
    pub fn monomial(deg: u32, c: u64) -> Self {
        Self::from_terms([(deg, c)])
    }

    /// Sums the given `(degree, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Coefficient list `[c_0, c_1, …]`, e.g. Betti numbers by degree.
    pub fn from_coeff_slice(c: &[u64]) -> Self {
        Self::from_terms(c.iter().enumerate().map(|(d, &c)| (d as u32, c)))
    }

    fn add_term(&mut self, d: u32, c: u64) {
        if c != 0 {
            *self.coeffs.entry(d).or_insert(0) += c;
        }
    }

    pub fn coeff(&self, d: u32) -> u64 {
        self.coeffs.get(&d).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `t = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Value at `t = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms().map(|(d, c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d + k, c)))
    }

    /// Substitutes `t^m` for `t`.
    pub fn substitute_power(&self, m: u32) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d * m, c)))
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d, c * s)))
    }

    /// `t^{2n} · p(1/t)`: Borel–Moore homology of an oriented manifold of
    /// complex dimension `n` from its cohomology, and back.
    pub fn poincare_dual(&self, n: u32) -> Result<Self> {
        let top = 2 * n;
        if self.degree().is_some_and(|d| d > top) {
            return input(format!("degree {} exceeds real dimension {top}", self.degree().unwrap()));
        }
        Ok(Self::from_terms(self.terms().map(|(d, c)| (top - d, c))))
    }

    /// Cohomology of the complement of a hypersurface in `C^D` from the
    /// Borel–Moore homology of the hypersurface: `t^i ↦ t^{2D-1-i}`, plus
    /// the constant term for connectedness.
    pub fn alexander_dualize(&self, big_d: u32) -> Result<Self> {
        let top = 2 * big_d - 1;
        if let Some(bad) = self.coeffs.keys().find(|&&d| d == 0 || d >= top) {
            return input(format!("degree {bad} outside the open range (0, {top})"));
        }
        let mut out = Self::from_terms(self.terms().map(|(d, c)| (top - d, c)));
        out.add_term(0, 1);
        Ok(out)
    }
}

/// Poincaré polynomial of the Grassmannian of `k`-planes in `C^{n+1}`:
/// the Gaussian binomial `[n+1 choose k]` evaluated at `t²`.
pub fn grassmann_poincare(k: u32, n: u32) -> Result<PoincarePoly> {
    if k == 0 || k > n + 1 {
        return input(format!("no Grassmannian of {k}-planes in C^{}", n + 1));
    }
    // Pascal recursion [m, j] = [m-1, j-1] + q^j [m-1, j] in the variable q.
    let m = (n + 1) as usize;
    let k = k as usize;
    let mut rows: Vec<Vec<PoincarePoly>> = vec![vec![PoincarePoly::one()]];
    for mm in 1..=m {
        let prev = &rows[mm - 1];
        let row = (0..=mm)
            .map(|j| {
                let left = if j > 0 { prev[j - 1].clone() } else { PoincarePoly::zero() };
                let right = prev.get(j).map_or_else(PoincarePoly::zero, |p| p.shift(j as u32));
                left + right
            })
            .collect();
        rows.push(row);
    }
    Ok(rows[m][k].substitute_power(2))
}

impl Add for PoincarePoly {
    type Output = PoincarePoly;
    fn add(mut self, rhs: Self) -> Self {
        for (d, c) in rhs.terms() {
            self.add_term(d, c);
        }
        self
    }
}

impl Mul for PoincarePoly {
    type Output = PoincarePoly;
    fn mul(self, rhs: Self) -> Self {
        let mut out = PoincarePoly::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in rhs.terms() {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for PoincarePoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for PoincarePoly {
    /// Ascending degrees without spaces, e.g. `1+2t^2+t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (d, 1) => write_power(f, d)?,
                (d, c) => {
                    write!(f, "{c}")?;
                    write_power(f, d)?;
                }
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, d: u32) -> fmt::Result {
    if d == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{d}")
    }
}

impl fmt::Debug for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PoincarePoly({self})")
    }
}

/// Parses sums of products such as `1+t+t^3`, `t^2(1+t)`, `2t^6`,
/// `(1+t)(1+t^3)(1+t^5)` or `3*t^2`. Whitespace is ignored.
impl FromStr for PoincarePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { chars: &chars, pos: 0 };
        let out = p.sum()?;
        if p.pos != chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in polynomial {text:?}", self.pos))
    }

    fn sum(&mut self) -> Result<PoincarePoly> {
        let mut acc = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            acc = acc + self.product()?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<PoincarePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some('t' | '(' | '0'..='9') => acc = acc * self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PoincarePoly> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                let e = if self.peek() == Some('^') {
                    self.pos += 1;
                    self.number()?
                } else {
                    1
                };
                let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
                Ok(PoincarePoly::monomial(e, 1))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let e = self.number()?;
                    return Ok((0..e).fold(PoincarePoly::one(), |acc, _| acc * inner.clone()));
                }
                Ok(inner)
            }
            Some('0'..='9') => Ok(PoincarePoly::monomial(0, self.number()?)),
            _ => Err(self.error("expected a term")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("number out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PoincarePoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("(1+t)(1+t^3)(1+t^5)").to_string(), "1+t+t^3+t^4+t^5+t^6+t^8+t^9");
        assert_eq!(p("t^2(1+t)"), p("t^2+t^3"));
        assert_eq!(p("t * (t^2 (1 + t))^2").to_string(), "t^5+2t^6+t^7");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("3*t^2 + 1"), PoincarePoly::from_coeff_slice(&[1, 0, 3]));
        for bad in ["", "1+", "t^", "(1+t", "x", "1-t"] {
            assert!(bad.parse::<PoincarePoly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn poincare_dual_examples() {
        assert_eq!(PoincarePoly::one().poincare_dual(1).unwrap(), p("t^2"));
        assert_eq!(p("t^2").poincare_dual(2).unwrap(), p("t^2"));
        assert_eq!(p("t+t^2").poincare_dual(2).unwrap(), p("t^2(1+t)"));
        assert!(p("t^5").poincare_dual(2).is_err());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(PoincarePoly::zero().alexander_dualize(21).unwrap(), PoincarePoly::one());
        assert_eq!(p("t^40").alexander_dualize(21).unwrap(), p("1+t"));
        let sigma = p("t^32+t^33+t^35+t^36+t^37+t^38+t^40");
        assert_eq!(sigma.alexander_dualize(21).unwrap(), p("(1+t)(1+t^3)(1+t^5)"));
        assert!(p("t^41").alexander_dualize(21).is_err());
        assert!(p("1").alexander_dualize(21).is_err());
    }

    #[test]
    fn grassmannians() {
        assert_eq!(grassmann_poincare(1, 2).unwrap(), p("1+t^2+t^4"));
        assert_eq!(grassmann_poincare(2, 2).unwrap(), p("1+t^2+t^4"));
        assert_eq!(grassmann_poincare(2, 3).unwrap(), p("1+t^2+2t^4+t^6+t^8"));
        assert_eq!(grassmann_poincare(2, 2).unwrap().shift(2), p("t^2(1+t^2+t^4)"));
        assert!(grassmann_poincare(0, 2).is_err());
        assert!(grassmann_poincare(4, 2).is_err());
    }

    #[test]
    fn euler_and_total() {
        let q = p("1+2t+t^2");
        assert_eq!(q.euler_characteristic(), 0);
        assert_eq!(q.total(), 4);
        assert_eq!(q.substitute_power(2), p("1+2t^2+t^4"));
    }
}
