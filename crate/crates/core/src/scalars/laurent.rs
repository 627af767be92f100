use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Ring;
use crate::error::{Error, Result};

/// Exponent pair `(a, b)` of the monomial `Q^a q^b`.
pub type Exp = (i32, i32);

/// Laurent polynomial in `Q` and `q` with integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so derived
/// equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![((a, b), c)] }
        }
    }

    /// The variable `Q`.
    pub fn big_q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The variable `q`.
    pub fn small_q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// `(c, a, b)` if the polynomial is a single term `c Q^a q^b`.
    pub fn as_monomial(&self) -> Option<(BigInt, i32, i32)> {
        match self.terms.as_slice() {
            [((a, b), c)] => Some((c.clone(), *a, *b)),
            _ => None,
        }
    }

    /// Componentwise minimum of the exponents. Zero maps to `(0, 0)`.
    pub fn min_exponents(&self) -> Exp {
        let a = self.terms.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
        let b = self.terms.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
        (a, b)
    }

    pub fn max_exponents(&self) -> Exp {
        let a = self.terms.iter().map(|((a, _), _)| *a).max().unwrap_or(0);
        let b = self.terms.iter().map(|((_, b), _)| *b).max().unwrap_or(0);
        (a, b)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        let (a, b) = self.min_exponents();
        a >= 0 && b >= 0
    }

    /// Multiply by `Q^da q^db`.
    pub fn shifted(&self, da: i32, db: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + da, b + db), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the lexicographically largest exponent.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    pub fn coefficient(&self, a: i32, b: i32) -> BigInt {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(a, b))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Swap the roles of `Q^a q^b` and `Q^-a q^-b`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((-a, -b), c.clone())))
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j >= rhs.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &rhs.terms[j];
                out.push((*e, if negate_rhs { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate_rhs {
                    &self.terms[i].1 - &rhs.terms[j].1
                } else {
                    &self.terms[i].1 + &rhs.terms[j].1
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let [(e, c)] = self.terms.as_slice() {
            return Self {
                terms: rhs
                    .terms
                    .iter()
                    .map(|((a, b), d)| ((a + e.0, b + e.1), c * d))
                    .collect(),
            };
        }
        if let [(e, c)] = rhs.terms.as_slice() {
            return Self {
                terms: self
                    .terms
                    .iter()
                    .map(|((a, b), d)| ((a + e.0, b + e.1), d * c))
                    .collect(),
            };
        }
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                *map.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Canonical string: terms `c*Q^a*q^b` by descending exponent.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|((a, b), c)| format!("{c}*Q^{a}*q^{b}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for raw in s.split('+') {
            terms.push(parse_term(raw.trim())?);
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(t: &str) -> Result<(Exp, BigInt)> {
    let bad = || Error::Parse(format!("bad term {t:?}"));
    let mut coeff = BigInt::one();
    let (mut a, mut b) = (0i32, 0i32);
    for (k, factor) in t.split('*').enumerate() {
        let factor = factor.trim();
        if let Some(e) = factor.strip_prefix("Q^") {
            a += e.parse::<i32>().map_err(|_| bad())?;
        } else if let Some(e) = factor.strip_prefix("q^") {
            b += e.parse::<i32>().map_err(|_| bad())?;
        } else if factor == "Q" {
            a += 1;
        } else if factor == "q" {
            b += 1;
        } else if k == 0 {
            coeff = factor.parse().map_err(|_| bad())?;
        } else {
            return Err(bad());
        }
    }
    Ok(((a, b), coeff))
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl Ring for LaurentPoly2 {
    fn zero() -> Self {
        LaurentPoly2::zero()
    }
    fn one() -> Self {
        LaurentPoly2::constant(1)
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly2::constant(v)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        LaurentPoly2::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s).unwrap()
    }

    #[test]
    fn canonical_string_sorts_descending() {
        let x = LaurentPoly2::from_terms(vec![((0, 0), BigInt::from(1)), ((2, 0), BigInt::from(-1))]);
        assert_eq!(x.to_canonical_string(), "-1*Q^2*q^0 + 1*Q^0*q^0");
    }

    #[test]
    fn parse_round_trip() {
        let x = p("3*Q^-1*q^2 + -2*Q^0*q^0");
        assert_eq!(p(&x.to_string()), x);
        assert_eq!(p("0"), LaurentPoly2::zero());
    }

    #[test]
    fn cancellation_gives_structural_zero() {
        let x = p("1*Q^1*q^0 + 1*Q^0*q^1");
        assert!(x.sub_ref(&x).is_zero());
        assert_eq!(x.sub_ref(&x), LaurentPoly2::zero());
    }

    #[test]
    fn product_of_binomials() {
        // (Q + Q^-1)(Q - Q^-1) = Q^2 - Q^-2
        let a = p("1*Q^1*q^0 + 1*Q^-1*q^0");
        let b = p("1*Q^1*q^0 + -1*Q^-1*q^0");
        assert_eq!(a.mul_ref(&b), p("1*Q^2*q^0 + -1*Q^-2*q^0"));
    }
}
