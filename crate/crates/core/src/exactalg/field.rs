//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`Scalar`]. Two families implement
//! it: arbitrary-precision rationals ([`Q`]) and prime fields [`Fp<P>`] with the
//! modulus fixed at compile time, so a matrix or polynomial can never mix
//! coefficient fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rationals, always in lowest terms with positive denominator.
pub type Q = BigRational;

/// Which field a value lives in. Used in file formats and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Rational,
    Prime(u64),
}

impl FieldTag {
    /// Characteristic of the field (0 for ℚ).
    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Rational => 0,
            FieldTag::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "qq"),
            FieldTag::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "qq" {
            return Ok(FieldTag::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("field spec `{s}` is not `qq` or `fp:<p>`")))?;
        if !is_prime(p) {
            return Err(Error::Parse(format!("field spec `{s}`: {p} is not prime")));
        }
        Ok(FieldTag::Prime(p))
    }
}

/// Deterministic primality by trial division; only used on moduli below 2^32.
pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
///
/// The arithmetic operators come from `std::ops`, the additive and
/// multiplicative identities from `num_traits`.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn field_tag() -> FieldTag;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// A random element; for ℚ a small integer, for F_p a uniform residue.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Parses the textual form produced by `Display` (`"a/b"`, `"a"` or a residue).
    fn parse_scalar(s: &str) -> Result<Self>;

    /// Reduced row echelon form of `rows` (each of length `cols`), returning
    /// the nonzero rows and their pivot columns. Leading coefficients are 1.
    fn rref(rows: Vec<Vec<Self>>, cols: usize) -> (Vec<Vec<Self>>, Vec<usize>) {
        gauss_jordan(rows, cols)
    }
}

/// Plain Gauss-Jordan elimination, used for prime fields.
pub(crate) fn gauss_jordan<F: Scalar>(mut rows: Vec<Vec<F>>, cols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(col) {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..cols {
                let delta = factor.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

impl Scalar for Q {
    fn field_tag() -> FieldTag {
        FieldTag::Rational
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        Q::from_integer(BigInt::from(v))
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Q::from_integer(BigInt::from(rng.gen_range(-30i64..=30)))
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("`{s}` is not a rational number"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("`{s}` has zero denominator")));
                }
                Ok(Q::new(n, d))
            }
            None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    fn rref(rows: Vec<Vec<Self>>, cols: usize) -> (Vec<Vec<Self>>, Vec<usize>) {
        bareiss_rref(rows, cols)
    }
}

/// Rational row reduction routed through fraction-free integer elimination.
///
/// Each row is cleared of denominators, Bareiss elimination produces an integer
/// echelon form (every intermediate entry is a minor of the input, so the
/// divisions are exact), and only the final back-substitution touches
/// rationals.
fn bareiss_rref(rows: Vec<Vec<Q>>, cols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
            row.into_iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                for x in row.iter_mut().skip(col + 1) {
                    *x = (pivot * &*x) / &prev;
                }
            } else {
                let lead = row[col].clone();
                for j in col + 1..cols {
                    row[j] = (pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
                }
                row[col] = BigInt::zero();
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);

    let mut out: Vec<Vec<Q>> = a
        .into_iter()
        .map(|row| row.into_iter().map(Q::from_integer).collect())
        .collect();
    for (i, &pc) in pivots.iter().enumerate().rev() {
        let lead = out[i][pc].clone();
        for x in out[i].iter_mut() {
            *x = &*x / &lead;
        }
        for k in 0..i {
            if out[k][pc].is_zero() {
                continue;
            }
            let factor = out[k][pc].clone();
            for j in pc..cols {
                let delta = &factor * &out[i][j];
                out[k][j] = &out[k][j] - delta;
            }
        }
    }
    (out, pivots)
}

/// Residues modulo the odd prime `P < 2^32`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(P > 2 && P < (1 << 32) && is_prime(P), "modulus must be an odd prime below 2^32");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(v % P)
    }

    pub fn from_signed(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// All residues `0..P` in order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field_tag() -> FieldTag {
        FieldTag::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::from_signed(v)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(rng.gen_range(0..P))
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Self::from_signed(v));
        }
        // Accept rationals whose denominator is invertible mod P.
        let q = Q::parse_scalar(s)?;
        let reduce = |n: &BigInt| -> Self {
            let r = (n % BigInt::from(P) + BigInt::from(P)) % BigInt::from(P);
            Self::new(r.to_u64().expect("reduced residue fits"))
        };
        let num = reduce(q.numer());
        let den = reduce(q.denom());
        den.inv()
            .map(|d| num * d)
            .ok_or_else(|| Error::Parse(format!("`{s}`: denominator vanishes mod {P}")))
    }
}

/// Reduces a rational into F_p, failing when the denominator vanishes mod p.
pub fn rational_to_fp<const P: u64>(q: &Q) -> Option<Fp<P>> {
    let reduce = |n: &BigInt| -> Fp<P> {
        let m = BigInt::from(P);
        let r = ((n % &m) + &m) % &m;
        Fp::new(r.to_u64().expect("reduced residue fits"))
    };
    let den = reduce(q.denom());
    den.inv().map(|d| reduce(q.numer()) * d)
}

/// Absolute value helper for ordered scalars; `num_traits::Signed` covers ℚ, i64 and f64.
pub fn abs_diff<T: Signed + Clone>(a: &T, b: &T) -> T {
    (a.clone() - b.clone()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::new(5);
        let b = F7::new(4);
        assert_eq!(a + b, F7::new(2));
        assert_eq!(a - b, F7::new(1));
        assert_eq!(b - a, F7::new(6));
        assert_eq!(a * b, F7::new(6));
        assert_eq!(a * a.inv().unwrap(), F7::one());
        assert_eq!(-F7::zero(), F7::zero());
        assert!(F7::zero().inv().is_none());
        assert_eq!(F7::from_i64(-1), F7::new(6));
    }

    #[test]
    fn rational_parse_and_lowest_terms() {
        let q = Q::parse_scalar("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert!(Q::parse_scalar("1/0").is_err());
        assert_eq!(Fp::<7>::parse_scalar("1/2").unwrap(), F7::new(4));
        assert!(Fp::<7>::parse_scalar("1/7").is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("qq".parse::<FieldTag>().unwrap(), FieldTag::Rational);
        assert_eq!("fp:65521".parse::<FieldTag>().unwrap(), FieldTag::Prime(65521));
        assert!("fp:65520".parse::<FieldTag>().is_err());
        assert!("zz".parse::<FieldTag>().is_err());
    }

    #[test]
    fn bareiss_matches_gauss_jordan_on_rationals() {
        let rows: Vec<Vec<Q>> = [[2, 4, -2, 1], [1, 2, 0, 3], [3, 6, -2, 4]]
            .iter()
            .map(|r| r.iter().map(|&v| Q::from_i64(v)).collect())
            .collect();
        let (fast, p1) = Q::rref(rows.clone(), 4);
        let (slow, p2) = gauss_jordan(rows, 4);
        assert_eq!(p1, p2);
        assert_eq!(fast, slow);
        assert_eq!(p1, vec![0, 2]);
    }
}
