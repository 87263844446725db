//! Text form of ternary forms: `x^5 + y^5 + z^5`, `3*x^2*y^2*z`,
//! `(x - y)^2 * (x^3 + y^2*z - z^3)`. Juxtaposition multiplies.

use std::collections::BTreeMap;

use super::poly::{Exponent, HomogeneousPoly};
use crate::error::{Error, Result};
use crate::exactalg::Scalar;

type Sparse<F> = BTreeMap<Exponent, F>;

impl<F: Scalar> HomogeneousPoly<F> {
    /// Parses a homogeneous polynomial; the zero polynomial gets `zero_degree`.
    pub fn parse(s: &str, zero_degree: u32) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, pos: 0 };
        let terms: Sparse<F> = p.expr()?;
        if p.pos != chars.len() {
            return Err(p.error("trailing input"));
        }
        let mut degrees = terms.keys().map(|e| e.iter().sum::<u32>());
        let degree = degrees.next().unwrap_or(zero_degree);
        if degrees.any(|d| d != degree) {
            return Err(Error::Parse(format!("polynomial {s:?} is not homogeneous")));
        }
        Self::new(degree, terms)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

fn add_into<F: Scalar>(acc: &mut Sparse<F>, e: Exponent, c: F) {
    let sum = acc.remove(&e).map_or(c.clone(), |old| old + c);
    if !sum.is_zero() {
        acc.insert(e, sum);
    }
}

fn mul<F: Scalar>(a: &Sparse<F>, b: &Sparse<F>) -> Sparse<F> {
    let mut out = Sparse::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            add_into(&mut out, [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1.clone() * c2.clone());
        }
    }
    out
}

fn constant<F: Scalar>(c: F) -> Sparse<F> {
    let mut out = Sparse::new();
    add_into(&mut out, [0, 0, 0], c);
    out
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in {text:?}", self.pos))
    }

    fn expr<F: Scalar>(&mut self) -> Result<Sparse<F>> {
        let mut acc = Sparse::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -F::one()
            }
            Some('+') => {
                self.pos += 1;
                F::one()
            }
            _ => F::one(),
        };
        loop {
            for (e, c) in self.term::<F>()? {
                add_into(&mut acc, e, sign.clone() * c);
            }
            sign = match self.peek() {
                Some('+') => F::one(),
                Some('-') => -F::one(),
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term<F: Scalar>(&mut self) -> Result<Sparse<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                Some('x' | 'y' | 'z' | '(' | '0'..='9') => {}
                _ => return Ok(acc),
            }
            acc = mul(&acc, &self.power()?);
        }
    }

    fn power<F: Scalar>(&mut self) -> Result<Sparse<F>> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.digits()?.parse::<u32>().map_err(|_| self.error("bad exponent"))?;
        Ok((0..e).fold(constant(F::one()), |acc, _| mul(&acc, &base)))
    }

    fn atom<F: Scalar>(&mut self) -> Result<Sparse<F>> {
        match self.peek() {
            Some(v @ ('x' | 'y' | 'z')) => {
                self.pos += 1;
                let mut e = [0, 0, 0];
                e[(v as u8 - b'x') as usize] = 1;
                let mut out = Sparse::new();
                out.insert(e, F::one());
                Ok(out)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('0'..='9') => {
                let mut text = self.digits()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    text = format!("{text}/{}", self.digits()?);
                }
                Ok(constant(F::parse_scalar(&text)?))
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Fp, Q};

    #[test]
    fn parses_sums_products_and_powers() {
        type F = Fp<11>;
        let f = HomogeneousPoly::<F>::parse("x^5 + y^5 + z^5", 5).unwrap();
        assert_eq!(f.terms().len(), 3);
        let g = HomogeneousPoly::<F>::parse("x^2 y^2 z", 5).unwrap();
        assert_eq!(g, HomogeneousPoly::monomial([2, 2, 1], F::new(1)));
        let h = HomogeneousPoly::<Q>::parse("(x - y)^2", 5).unwrap();
        assert_eq!(h.coeff([1, 1, 0]), Q::from_i64(-2));
        let r = HomogeneousPoly::<Q>::parse("1/2*x - 3y", 5).unwrap();
        assert_eq!(r.coeff([1, 0, 0]), Q::new(1.into(), 2.into()));
        assert_eq!(r.degree(), 1);
        let z = HomogeneousPoly::<Q>::parse("x - x", 5).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 5);
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["x^2 + y", "x +", "(x", "w", "x^"] {
            assert!(HomogeneousPoly::<Q>::parse(s, 5).is_err(), "{s}");
        }
    }
}
