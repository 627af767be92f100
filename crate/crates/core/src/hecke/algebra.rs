use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Field, GenericParams, LaurentPoly2, Params, Rational, Ring, Specialization};
use crate::weyl::SignedPermutation;

/// Finite linear combination of basis elements `T_w` of `H^B(d)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement<F> {
    degree: usize,
    terms: BTreeMap<SignedPermutation, F>,
}

impl<F: Ring> HeckeElement<F> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: SignedPermutation) -> Self {
        let degree = w.degree();
        Self {
            degree,
            terms: BTreeMap::from([(w, F::one())]),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (SignedPermutation, F)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (w, c) in terms {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch(degree, w.degree()));
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<SignedPermutation, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &SignedPermutation) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, w: SignedPermutation, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.plus(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch(self.degree, rhs.degree));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().negate())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.degree);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &x.times(c));
        }
        out
    }

    /// `self + c T_e`.
    pub fn add_scalar(&self, c: &F) -> Self {
        let mut out = self.clone();
        out.add_term(SignedPermutation::identity(self.degree), c);
        out
    }

    /// Apply `f` to every coefficient.
    pub fn try_map<G: Ring>(&self, f: impl Fn(&F) -> Result<G>) -> Result<HeckeElement<G>> {
        let mut out = HeckeElement::zero(self.degree);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Transport along `W(k) -> W(d)`, the image of each `T_w` given by `embed`.
    pub fn embed(&self, degree: usize, embed: impl Fn(&SignedPermutation) -> Result<SignedPermutation>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (w, c) in &self.terms {
            out.add_term(embed(w)?, c);
        }
        Ok(out)
    }

    /// Embedding via the first `k` points.
    pub fn extend(&self, degree: usize) -> Result<Self> {
        if degree < self.degree {
            return Err(Error::DegreeMismatch(degree, self.degree));
        }
        self.embed(degree, |w| Ok(w.extend(degree - self.degree)))
    }

    /// Lines `"[-1 2] : coeff"` in basis order.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms.iter().map(|(w, c)| format!("{w} : {c}")).collect()
    }

    pub fn parse_lines(degree: usize, lines: &[&str]) -> Result<Self> {
        let mut out = Self::zero(degree);
        for line in lines {
            let (w, c) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'w : c', got {line:?}")))?;
            let w = SignedPermutation::parse(w)?;
            if w.degree() != degree {
                return Err(Error::DegreeMismatch(degree, w.degree()));
            }
            out.add_term(w, &F::parse_scalar(c.trim())?);
        }
        Ok(out)
    }
}

impl<F: Ring> fmt::Display for HeckeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.to_lines().join("\n"))
    }
}

impl<F: Ring> fmt::Debug for HeckeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement[{}]", self.to_lines().join("; "))
    }
}

/// `H^B_{Q,q}(d)` with quadratic relations `(T_0 + Q)(T_0 - Q^-1) = 0` and
/// `(T_i + q)(T_i - q^-1) = 0`.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<F> {
    degree: usize,
    params: Params<F>,
    /// `Q^-1 - Q` and `q^-1 - q`.
    diff: [F; 2],
}

/// `Q`, `q` and inverses as Laurent monomials.
pub fn laurent_params() -> Params<LaurentPoly2> {
    Params {
        big_q: LaurentPoly2::big_q(),
        q: LaurentPoly2::small_q(),
        big_q_inv: LaurentPoly2::monomial(1, -1, 0),
        q_inv: LaurentPoly2::monomial(1, 0, -1),
    }
}

impl HeckeAlgebra<LaurentPoly2> {
    /// Structure constants live in `Z[Q^±1, q^±1]`.
    pub fn laurent(degree: usize) -> Self {
        Self::new(degree, laurent_params())
    }
}

impl HeckeAlgebra<Rational> {
    pub fn at(degree: usize, s: &Specialization) -> Self {
        Self::new(degree, Params::at(s))
    }
}

impl<F: GenericParams> HeckeAlgebra<F> {
    pub fn generic(degree: usize) -> Self {
        Self::new(degree, F::generic_params())
    }
}

impl<F: Ring> HeckeAlgebra<F> {
    pub fn new(degree: usize, params: Params<F>) -> Self {
        let diff = [
            params.big_q_inv.minus(&params.big_q),
            params.q_inv.minus(&params.q),
        ];
        Self { degree, params, diff }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    /// The same parameters in another degree.
    pub fn with_degree(&self, degree: usize) -> Self {
        Self::new(degree, self.params.clone())
    }

    pub fn zero(&self) -> HeckeElement<F> {
        HeckeElement::zero(self.degree)
    }

    pub fn one(&self) -> HeckeElement<F> {
        self.scalar(F::one())
    }

    pub fn scalar(&self, c: F) -> HeckeElement<F> {
        HeckeElement::zero(self.degree).add_scalar(&c)
    }

    pub fn basis(&self, w: &SignedPermutation) -> Result<HeckeElement<F>> {
        if w.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, w.degree()));
        }
        Ok(HeckeElement::basis(w.clone()))
    }

    /// `T_i`, `0 <= i < d`.
    pub fn generator(&self, i: usize) -> Result<HeckeElement<F>> {
        Ok(HeckeElement::basis(SignedPermutation::generator(i, self.degree)?))
    }

    /// `T_{i_1} ... T_{i_l}` for an arbitrary word.
    pub fn word(&self, word: &[usize]) -> Result<HeckeElement<F>> {
        let mut x = self.one();
        for &i in word.iter().rev() {
            if i >= self.degree {
                return Err(Error::OutOfRange(format!("T_{i} in degree {}", self.degree)));
            }
            x = self.left_generator(i, &x);
        }
        Ok(x)
    }

    /// `T_i x`.
    pub fn left_generator(&self, i: usize, x: &HeckeElement<F>) -> HeckeElement<F> {
        let diff = &self.diff[usize::from(i > 0)];
        let mut out = HeckeElement::zero(x.degree);
        for (w, c) in &x.terms {
            let sw = w.mul_generator_left(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), &c.times(diff));
            }
            out.add_term(sw, c);
        }
        out
    }

    /// `x T_i`.
    pub fn right_generator(&self, x: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        let diff = &self.diff[usize::from(i > 0)];
        let mut out = HeckeElement::zero(x.degree);
        for (w, c) in &x.terms {
            let ws = w.mul_generator_right(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &c.times(diff));
            }
            out.add_term(ws, c);
        }
        out
    }

    /// `x y`, computing `T_v y` for each `v` in the support of `x` from a
    /// shorter prefix.
    pub fn mul(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        x.check(y)?;
        if x.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, x.degree));
        }
        let mut memo: HashMap<SignedPermutation, HeckeElement<F>> = HashMap::new();
        let mut out = HeckeElement::zero(self.degree);
        for (v, c) in &x.terms {
            let tv = self.left_basis_times(v, y, &mut memo);
            for (w, a) in &tv.terms {
                out.add_term(w.clone(), &c.times(a));
            }
        }
        Ok(out)
    }

    fn left_basis_times(
        &self,
        v: &SignedPermutation,
        y: &HeckeElement<F>,
        memo: &mut HashMap<SignedPermutation, HeckeElement<F>>,
    ) -> HeckeElement<F> {
        if let Some(r) = memo.get(v) {
            return r.clone();
        }
        let r = if v.is_identity() {
            y.clone()
        } else {
            let i = (0..v.degree()).find(|&i| v.has_left_descent(i)).unwrap();
            let shorter = v.mul_generator_left(i);
            let inner = self.left_basis_times(&shorter, y, memo);
            self.left_generator(i, &inner)
        };
        memo.insert(v.clone(), r.clone());
        r
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a HeckeElement<F>>) -> Result<HeckeElement<F>> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.mul(x, y)?.sub(&self.mul(y, x)?)
    }

    /// `K_i = T_{i-1} ... T_1 T_0 T_1 ... T_{i-1}`, `1 <= i <= d`.
    pub fn jucys_murphy(&self, i: usize) -> Result<HeckeElement<F>> {
        if i == 0 || i > self.degree {
            return Err(Error::OutOfRange(format!("K_{i} in degree {}", self.degree)));
        }
        let mut word: Vec<usize> = (1..i).rev().collect();
        word.push(0);
        word.extend(1..i);
        self.word(&word)
    }

    /// `c_K = K_1 ... K_d`.
    pub fn c_k(&self) -> Result<HeckeElement<F>> {
        let ks = (1..=self.degree)
            .map(|i| self.jucys_murphy(i))
            .collect::<Result<Vec<_>>>()?;
        self.product(&ks)
    }

    /// `u_i^+ = prod (K_j + Q)`.
    pub fn u_plus(&self, i: usize) -> Result<HeckeElement<F>> {
        self.u(i, &self.params.big_q)
    }

    /// `u_i^- = prod (K_j - Q^-1)`.
    pub fn u_minus(&self, i: usize) -> Result<HeckeElement<F>> {
        self.u(i, &self.params.big_q_inv.negate())
    }

    fn u(&self, i: usize, shift: &F) -> Result<HeckeElement<F>> {
        if i > self.degree {
            return Err(Error::OutOfRange(format!("u_{i} in degree {}", self.degree)));
        }
        let mut acc = self.one();
        for j in 1..=i {
            acc = self.mul(&acc, &self.jucys_murphy(j)?.add_scalar(shift))?;
        }
        Ok(acc)
    }

    /// `(T_0 + Q)(T_0 - Q^-1)` or `(T_i + q)(T_i - q^-1)`.
    pub fn quadratic(&self, i: usize) -> Result<HeckeElement<F>> {
        let t = self.generator(i)?;
        let (c, ci) = if i == 0 {
            (&self.params.big_q, &self.params.big_q_inv)
        } else {
            (&self.params.q, &self.params.q_inv)
        };
        self.mul(&t.add_scalar(c), &t.add_scalar(&ci.negate()))
    }

    /// Left sides minus right sides of all defining relations:
    /// two quadratic families, `T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0`,
    /// `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}`, and `T_i T_j = T_j T_i` for
    /// `|i - j| > 1`.
    pub fn relation_defects(&self) -> Result<Vec<(String, HeckeElement<F>)>> {
        let d = self.degree;
        let mut out = Vec::new();
        for i in 0..d {
            let name = if i == 0 { "quadratic T_0".to_string() } else { format!("quadratic T_{i}") };
            out.push((name, self.quadratic(i)?));
        }
        if d >= 2 {
            out.push((
                "braid T_0 T_1".into(),
                self.word(&[0, 1, 0, 1])?.sub(&self.word(&[1, 0, 1, 0])?)?,
            ));
        }
        for i in 1..d.saturating_sub(1) {
            out.push((
                format!("braid T_{i} T_{}", i + 1),
                self.word(&[i, i + 1, i])?.sub(&self.word(&[i + 1, i, i + 1])?)?,
            ));
        }
        for i in 0..d {
            for j in i + 2..d {
                out.push((
                    format!("commute T_{i} T_{j}"),
                    self.word(&[i, j])?.sub(&self.word(&[j, i])?)?,
                ));
            }
        }
        Ok(out)
    }
}

impl<F: Field> HeckeAlgebra<F> {
    /// `c` and `c^-1` for the generator `s_i`.
    pub fn generator_params(&self, i: usize) -> (F, F) {
        if i == 0 {
            (self.params.big_q.clone(), self.params.big_q_inv.clone())
        } else {
            (self.params.q.clone(), self.params.q_inv.clone())
        }
    }
}
