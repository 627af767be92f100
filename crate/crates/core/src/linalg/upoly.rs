use std::fmt;

use super::matrix::ExactMatrix;
use crate::error::Result;
use crate::scalars::Field;

/// Univariate polynomial over a field, coefficients from degree 0 upward.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> FieldPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![F::one()])
    }

    /// `t - root`.
    pub fn linear(root: &F) -> Self {
        Self::new(vec![root.negate(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead_inv = d.coeffs.last().expect("nonzero divisor").inv()?;
        let mut r = self.coeffs.clone();
        let n = d.coeffs.len();
        if r.len() < n {
            return Ok((Self::new(Vec::new()), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - n + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + n - 1].times(&lead_inv);
            if !c.is_zero() {
                for (i, di) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].minus(&c.times(di));
                }
            }
            q[k] = c;
        }
        r.truncate(n - 1);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Result<Self> {
        match self.coeffs.last() {
            None => Ok(self.clone()),
            Some(l) => {
                let li = l.inv()?;
                Ok(Self::new(self.coeffs.iter().map(|c| c.times(&li)).collect()))
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    /// True when `gcd(p, p') = 1` (characteristic zero).
    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.gcd(&self.derivative())?.degree() == 0)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// `p(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add_scalar(c)?;
        }
        Ok(acc)
    }
}

impl<F: Field> fmt::Display for FieldPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*t^{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for FieldPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPoly({self})")
    }
}
