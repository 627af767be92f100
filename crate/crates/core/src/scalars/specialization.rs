use std::fmt;

use serde::Serialize;

use super::field::{parse_rational, rational, Field, Rational, Ring};
use super::laurent::LaurentPoly2;
use super::ratfun::{poincare_factor, RationalFunction};
use crate::error::{Error, Result};

/// An admissible rational point `(Q, q)` for evaluating rational functions.
///
/// Admissible means `Q^2 != 1`, `q^2 != 1` and `f_i(Q, q) != 0` for all
/// `i <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    big_q: Rational,
    q: Rational,
    max_degree: usize,
}

impl Specialization {
    pub fn new(big_q: Rational, q: Rational, max_degree: usize) -> Result<Self> {
        let one = Rational::one();
        if big_q.is_zero() || q.is_zero() {
            return Err(Error::InvalidSpecialization("parameters must be nonzero".into()));
        }
        if &big_q * &big_q == one {
            return Err(Error::InvalidSpecialization("Q^2 = 1".into()));
        }
        if &q * &q == one {
            return Err(Error::InvalidSpecialization("q^2 = 1".into()));
        }
        let s = Self { big_q, q, max_degree };
        for i in 1..=max_degree {
            if s.eval_laurent(&poincare_factor(i)).is_zero() {
                return Err(Error::InvalidSpecialization(format!("f_{i}(Q, q) = 0")));
            }
        }
        Ok(s)
    }

    /// The default point `Q = 2`, `q = 3`.
    pub fn default_point(max_degree: usize) -> Self {
        Self::new(rational(2, 1), rational(3, 1), max_degree).expect("(2, 3) is admissible")
    }

    /// Parse `Q=<rat>,q=<rat>`.
    pub fn parse(s: &str, max_degree: usize) -> Result<Self> {
        let mut big_q = None;
        let mut q = None;
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad specialization {s:?}")))?;
            match k.trim() {
                "Q" => big_q = Some(parse_rational(v)?),
                "q" => q = Some(parse_rational(v)?),
                other => return Err(Error::Parse(format!("unknown parameter {other:?}"))),
            }
        }
        match (big_q, q) {
            (Some(a), Some(b)) => Self::new(a, b, max_degree),
            _ => Err(Error::Parse(format!("specialization needs Q and q: {s:?}"))),
        }
    }

    pub fn big_q(&self) -> &Rational {
        &self.big_q
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `Q^i q^j` at this point.
    pub fn monomial(&self, i: i32, j: i32) -> Rational {
        self.big_q
            .powi(i)
            .expect("Q is nonzero")
            .times(&self.q.powi(j).expect("q is nonzero"))
    }

    pub fn eval_laurent(&self, p: &LaurentPoly2) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in p.terms() {
            let m = self.monomial(*a, *b);
            acc += m * Rational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluate a rational function, failing at poles.
    pub fn eval(&self, x: &RationalFunction) -> Result<Rational> {
        let (shift, num, den) = x.raw_parts();
        let d = self.eval_laurent(den);
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        let n = self.eval_laurent(num);
        Ok(n * self.monomial(shift.0, shift.1) / d)
    }

    /// Check `Q^i q^j != +-1` for `0 < |i| + |j|`, `|i| <= 2e`, `|j| <= 4e(e-1)`.
    ///
    /// Needed before splitting generalized eigenspaces of block operators.
    pub fn separates(&self, e: usize) -> bool {
        let ib = 2 * e as i32;
        let jb = 4 * (e as i32) * (e as i32 - 1).max(1);
        let one = Rational::one();
        let minus_one = -Rational::one();
        for i in -ib..=ib {
            for j in -jb..=jb {
                if i == 0 && j == 0 {
                    continue;
                }
                let m = self.monomial(i, j);
                if m == one || m == minus_one {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q={},q={}", self.big_q, self.q)
    }
}

/// Which field the computation runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Symbolic,
    Specialized(Specialization),
}

impl Backend {
    pub fn parse(s: &str, max_degree: usize) -> Result<Self> {
        if s.trim() == "symbolic" {
            Ok(Backend::Symbolic)
        } else {
            Ok(Backend::Specialized(Specialization::parse(s, max_degree)?))
        }
    }

    pub fn label(&self) -> String {
        match self {
            Backend::Symbolic => "symbolic".to_string(),
            Backend::Specialized(s) => s.to_string(),
        }
    }
}

impl Serialize for Backend {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// Values of `Q`, `q` and their inverses in a given field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params<F> {
    pub big_q: F,
    pub q: F,
    pub big_q_inv: F,
    pub q_inv: F,
}

impl<F: Field> Params<F> {
    pub fn new(big_q: F, q: F) -> Result<Self> {
        let big_q_inv = big_q.inv()?;
        let q_inv = q.inv()?;
        Ok(Self { big_q, q, big_q_inv, q_inv })
    }
}

impl<F: Ring> Params<F> {
    /// `Q^i q^j`.
    pub fn monomial(&self, i: i32, j: i32) -> F {
        let a = if i >= 0 { self.big_q.pow(i as u32) } else { self.big_q_inv.pow(i.unsigned_abs()) };
        let b = if j >= 0 { self.q.pow(j as u32) } else { self.q_inv.pow(j.unsigned_abs()) };
        a.times(&b)
    }
}

/// Fields that have a natural generic choice of `Q` and `q`.
pub trait GenericParams: Field {
    fn generic_params() -> Params<Self>;
}

impl GenericParams for RationalFunction {
    fn generic_params() -> Params<Self> {
        Params::new(RationalFunction::big_q(), RationalFunction::small_q()).expect("nonzero")
    }
}

impl Params<Rational> {
    pub fn at(s: &Specialization) -> Self {
        Params::new(s.big_q().clone(), s.q().clone()).expect("nonzero")
    }
}
