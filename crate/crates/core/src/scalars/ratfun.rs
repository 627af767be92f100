use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::field::{Field, Ring};
use super::laurent::{Exp, LaurentPoly2};
use super::poly::{b_div_exact, b_gcd, from_bipoly, to_bipoly};
use crate::error::{Error, Result};

/// Element of the fraction field of `Z[Q^±1, q^±1]` in canonical form.
///
/// The value is `Q^a q^b * num / den` where `(a, b)` is `shift`, `num` and
/// `den` are polynomials not divisible by `Q` or `q`, `gcd(num, den) = 1`
/// over `Z[Q, q]`, and the lexicographic leading coefficient of `den` is
/// positive. Zero is `num = 0`, `den = 1`, `shift = (0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    shift: Exp,
    num: LaurentPoly2,
    den: LaurentPoly2,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            shift: (0, 0),
            num: LaurentPoly2::zero(),
            den: LaurentPoly2::constant(1),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(&LaurentPoly2::constant(1))
    }

    pub fn integer(v: i64) -> Self {
        Self::from_laurent(&LaurentPoly2::constant(v))
    }

    /// `c Q^a q^b`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_laurent(&LaurentPoly2::monomial(c, a, b))
    }

    pub fn big_q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn small_q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_laurent(p: &LaurentPoly2) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (a, b) = p.min_exponents();
        Self {
            shift: (a, b),
            num: p.shifted(-a, -b),
            den: LaurentPoly2::constant(1),
        }
    }

    /// Build `num / den` and reduce to canonical form.
    pub fn new(num: &LaurentPoly2, den: &LaurentPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (na, nb) = num.min_exponents();
        let (da, db) = den.min_exponents();
        let n = num.shifted(-na, -nb);
        let d = den.shifted(-da, -db);
        Ok(Self::reduce((na - da, nb - db), n, d))
    }

    fn reduce(shift: Exp, n: LaurentPoly2, d: LaurentPoly2) -> Self {
        let (n, d) = if let Some(k) = d.as_constant() {
            let g = n.content().gcd(&k);
            let (mut n, mut k) = (n.div_scalar_exact(&g), &k / &g);
            if k.is_negative() {
                n = n.neg_ref();
                k = -k;
            }
            (n, LaurentPoly2::constant(k))
        } else {
            let (bn, bd) = (to_bipoly(&n), to_bipoly(&d));
            let g = b_gcd(&bn, &bd);
            let (mut n, mut d) = if g.len() == 1 && g[0].len() == 1 && g[0][0].is_one() {
                (n, d)
            } else {
                let qn = b_div_exact(&bn, &g).expect("gcd divides numerator");
                let qd = b_div_exact(&bd, &g).expect("gcd divides denominator");
                (from_bipoly(&qn), from_bipoly(&qd))
            };
            if d.leading_coefficient().is_some_and(|c| c.is_negative()) {
                n = n.neg_ref();
                d = d.neg_ref();
            }
            (n, d)
        };
        Self { shift, num: n, den: d }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly2> {
        self.is_laurent()
            .then(|| self.num.shifted(self.shift.0, self.shift.1))
    }

    pub fn shift(&self) -> Exp {
        self.shift
    }

    /// Numerator as a polynomial, including the positive part of the shift.
    pub fn numerator(&self) -> LaurentPoly2 {
        self.num.shifted(self.shift.0.max(0), self.shift.1.max(0))
    }

    /// Denominator as a polynomial, including the negative part of the shift.
    pub fn denominator(&self) -> LaurentPoly2 {
        self.den.shifted((-self.shift.0).max(0), (-self.shift.1).max(0))
    }

    /// `(numerator, denominator)` with the shift folded into the numerator.
    pub fn laurent_parts(&self) -> (LaurentPoly2, LaurentPoly2) {
        (self.num.shifted(self.shift.0, self.shift.1), self.den.clone())
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_laurent() && rhs.is_laurent() {
            let a = self.num.shifted(self.shift.0, self.shift.1);
            let b = rhs.num.shifted(rhs.shift.0, rhs.shift.1);
            return Self::from_laurent(&a.add_ref(&b));
        }
        let (an, ad) = self.laurent_parts();
        let (bn, bd) = rhs.laurent_parts();
        if ad == bd {
            return Self::new(&an.add_ref(&bn), &ad).expect("nonzero denominator");
        }
        let n = an.mul_ref(&bd).add_ref(&bn.mul_ref(&ad));
        Self::new(&n, &ad.mul_ref(&bd)).expect("nonzero denominator")
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            shift: self.shift,
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let shift = (self.shift.0 + rhs.shift.0, self.shift.1 + rhs.shift.1);
        if self.is_laurent() && rhs.is_laurent() {
            return Self {
                shift,
                num: self.num.mul_ref(&rhs.num),
                den: LaurentPoly2::constant(1),
            };
        }
        let n = self.num.mul_ref(&rhs.num);
        let d = self.den.mul_ref(&rhs.den);
        Self::reduce(shift, n, d)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(
            (-self.shift.0, -self.shift.1),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    /// Canonical string `(numerator)/(denominator)`.
    pub fn to_canonical_string(&self) -> String {
        format!(
            "({})/({})",
            self.numerator().to_canonical_string(),
            self.denominator().to_canonical_string()
        )
    }

    /// Parse either `(p)/(r)` or a bare Laurent polynomial.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("bad rational function {s:?}")))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("bad rational function {s:?}")))?;
            Self::new(&LaurentPoly2::parse(num)?, &LaurentPoly2::parse(den)?)
        } else {
            Ok(Self::from_laurent(&LaurentPoly2::parse(s)?))
        }
    }

    /// Number of terms in numerator and denominator.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// The involution `Q -> Q^-1`, `q -> q^-1`.
    pub fn bar(&self) -> Self {
        let (n, d) = self.laurent_parts();
        Self::new(&n.bar(), &d.bar()).expect("nonzero denominator")
    }

    pub(crate) fn raw_parts(&self) -> (Exp, &LaurentPoly2, &LaurentPoly2) {
        (self.shift, &self.num, &self.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_i64(v: i64) -> Self {
        RationalFunction::integer(v)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub_ref(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        RationalFunction::parse(s)
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Result<Self> {
        self.inverse()
    }
    fn weight(&self) -> usize {
        self.size()
    }
}

/// `f_d(Q, q) = prod_{i=1-d}^{d-1} (Q^-2 + q^{2i})` as a Laurent polynomial.
pub fn poincare_factor(d: usize) -> LaurentPoly2 {
    let mut acc = LaurentPoly2::constant(1);
    let d = d as i32;
    for i in (1 - d)..d {
        let f = LaurentPoly2::monomial(1, -2, 0).add_ref(&LaurentPoly2::monomial(1, 0, 2 * i));
        acc = acc.mul_ref(&f);
    }
    acc
}

impl From<BigInt> for RationalFunction {
    fn from(v: BigInt) -> Self {
        Self::from_laurent(&LaurentPoly2::constant(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn one_minus_q_squared_over_q() {
        // (Q^-1 - Q) has canonical form (1 - Q^2)/Q
        let x = RationalFunction::monomial(1, -1, 0).sub_ref(&RationalFunction::big_q());
        assert_eq!(x.to_string(), "(-1*Q^2*q^0 + 1*Q^0*q^0)/(1*Q^1*q^0)");
        assert_eq!(rf(&x.to_string()), x);
    }

    #[test]
    fn cancels_common_factors() {
        // (Q^2 - q^2) / (Q - q) = Q + q
        let n = LaurentPoly2::parse("1*Q^2*q^0 + -1*Q^0*q^2").unwrap();
        let d = LaurentPoly2::parse("1*Q^1*q^0 + -1*Q^0*q^1").unwrap();
        let x = RationalFunction::new(&n, &d).unwrap();
        assert!(x.is_laurent());
        assert_eq!(x.to_laurent().unwrap(), LaurentPoly2::parse("1*Q^1*q^0 + 1*Q^0*q^1").unwrap());
    }

    #[test]
    fn denominator_sign_and_content_are_normalized() {
        let a = RationalFunction::new(
            &LaurentPoly2::constant(-2),
            &LaurentPoly2::parse("-4*Q^1*q^0 + 2*Q^0*q^0").unwrap(),
        )
        .unwrap();
        let b = RationalFunction::new(
            &LaurentPoly2::constant(1),
            &LaurentPoly2::parse("2*Q^1*q^0 + -1*Q^0*q^0").unwrap(),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RationalFunction::zero().inverse(), Err(Error::DivisionByZero));
        assert!(RationalFunction::new(&LaurentPoly2::constant(1), &LaurentPoly2::zero()).is_err());
    }

    #[test]
    fn field_identities_hold() {
        let x = rf("(1*Q^1*q^0 + 1*Q^0*q^1)/(1*Q^0*q^2 + -1*Q^0*q^0)");
        let y = rf("(2*Q^0*q^1)/(1*Q^2*q^0 + 1*Q^0*q^0)");
        let s = x.add_ref(&y).sub_ref(&y);
        assert_eq!(s, x);
        assert_eq!(x.mul_ref(&x.inverse().unwrap()), RationalFunction::one());
        assert_eq!(x.mul_ref(&y).mul_ref(&y.inverse().unwrap()), x);
    }
}
