use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Commutative ring with exact arithmetic.
///
/// Methods take references so that big-number types can avoid clones in
/// inner loops.
pub trait Ring: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Parse the canonical string form produced by `Display`.
    fn parse_scalar(s: &str) -> Result<Self>;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.times(&rhs.inv()?))
    }

    /// Rough size of the element, used to prefer cheap pivots.
    fn weight(&self) -> usize {
        1
    }

    /// Integer powers, negative exponents allowed for nonzero elements.
    fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Parse `p` or `p/q` with integer `p`, `q`. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Sign of a rational number: +1, 0 or -1.
pub fn rational_sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("3/6").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rational(-4, 1));
        assert!(parse_rational("0.5").is_err());
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn powi_handles_negative_exponents() {
        let x = rational(2, 3);
        assert_eq!(x.powi(-2).unwrap(), rational(9, 4));
        assert_eq!(x.powi(0).unwrap(), rational(1, 1));
    }
}
