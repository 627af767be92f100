use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::linalg::{sv_axpy, sv_from_pairs, ExactMatrix, SparseVec};
use crate::scalars::{Params, Ring};
use crate::weyl::SignedPermutation;

/// `(V_n^{⊗e})^{⊗d}`; `e = 1` is the plain tensor power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    pub e: usize,
}

impl TensorSpace {
    pub fn new(n: usize, d: usize) -> Self {
        Self { n, d, e: 1 }
    }

    pub fn blocks(n: usize, d: usize, e: usize) -> Self {
        Self { n, d, e }
    }

    /// `n^{de}`.
    pub fn dim(&self) -> usize {
        self.n.pow((self.d * self.e) as u32)
    }

    /// Dimension of one block, `n^e`.
    pub fn block_dim(&self) -> usize {
        self.n.pow(self.e as u32)
    }

    /// The same space viewed as `V_n^{⊗de}`.
    pub fn flattened(&self) -> Self {
        Self::new(self.n, self.d * self.e)
    }
}

/// `R_q` on `V_n ⊗ V_n`:
/// `v_i⊗v_i ↦ q^-1 v_i⊗v_i`, `v_i⊗v_j ↦ v_j⊗v_i` for `i < j`,
/// `v_i⊗v_j ↦ v_j⊗v_i + (q^-1 - q) v_i⊗v_j` for `i > j`.
pub fn r_matrix<F: Ring>(n: usize, params: &Params<F>) -> ExactMatrix<F> {
    TensorRep::new(n, 2, params.clone()).generator(1)
}

/// `K_Q` on `V_n`:
/// `v_0 ↦ Q^-1 v_0`, `v_i ↦ v_-i` for `i > 0`, `v_i ↦ v_-i + (Q^-1 - Q) v_i` for `i < 0`.
pub fn k_matrix<F: Ring>(n: usize, params: &Params<F>) -> ExactMatrix<F> {
    TensorRep::new(n, 1, params.clone()).generator(0)
}

/// The right action of `H^B(d)` on `V_n^{⊗d}`: `T_0` acts by `K_Q` on the
/// first factor and `T_i` by `R_q` on factors `i, i+1`.
///
/// Matrices act on column vectors, so `rho(xy) = rho(y) rho(x)`.
#[derive(Clone, Debug)]
pub struct TensorRep<F> {
    n: usize,
    d: usize,
    params: Params<F>,
    /// `Q^-1 - Q` and `q^-1 - q`.
    diff: [F; 2],
}

impl<F: Ring> TensorRep<F> {
    pub fn new(n: usize, d: usize, params: Params<F>) -> Self {
        let diff = [
            params.big_q_inv.minus(&params.big_q),
            params.q_inv.minus(&params.q),
        ];
        Self { n, d, params, diff }
    }

    pub fn for_algebra(n: usize, h: &HeckeAlgebra<F>) -> Self {
        Self::new(n, h.degree(), h.params().clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    pub fn space(&self) -> TensorSpace {
        TensorSpace::new(self.n, self.d)
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    /// Position (0-based, ascending values) of tensor factor `k` in `flat`.
    fn digit(&self, flat: usize, k: usize) -> usize {
        flat / self.n.pow((self.d - 1 - k) as u32) % self.n
    }

    fn with_digit(&self, flat: usize, k: usize, new: usize) -> usize {
        let w = self.n.pow((self.d - 1 - k) as u32);
        flat - self.digit(flat, k) * w + new * w
    }

    /// `rho(T_i) e_flat` as at most two terms.
    pub fn basis_image(&self, i: usize, flat: usize) -> Vec<(usize, F)> {
        let n = self.n;
        if i == 0 {
            let x = self.digit(flat, 0);
            let mirror = self.with_digit(flat, 0, n - 1 - x);
            if 2 * x + 1 == n {
                vec![(flat, self.params.big_q_inv.clone())]
            } else if 2 * x + 1 > n {
                vec![(mirror, F::one())]
            } else {
                vec![(mirror, F::one()), (flat, self.diff[0].clone())]
            }
        } else {
            let (x, y) = (self.digit(flat, i - 1), self.digit(flat, i));
            let swapped = self.with_digit(self.with_digit(flat, i - 1, y), i, x);
            match x.cmp(&y) {
                std::cmp::Ordering::Equal => vec![(flat, self.params.q_inv.clone())],
                std::cmp::Ordering::Less => vec![(swapped, F::one())],
                std::cmp::Ordering::Greater => vec![(swapped, F::one()), (flat, self.diff[1].clone())],
            }
        }
    }

    /// `rho(T_i) v`.
    pub fn apply_generator(&self, i: usize, v: &SparseVec<F>) -> SparseVec<F> {
        sv_from_pairs(v.iter().flat_map(|(j, c)| {
            self.basis_image(i, *j)
                .into_iter()
                .map(move |(k, a)| (k, a.times(c)))
        }))
    }

    /// `rho(T_i)`, `0 <= i < d`.
    pub fn generator(&self, i: usize) -> ExactMatrix<F> {
        let entries = (0..self.dim())
            .flat_map(|j| self.basis_image(i, j).into_iter().map(move |(k, a)| (k, j, a)));
        ExactMatrix::from_entries(self.dim(), self.dim(), entries).expect("indices in range")
    }

    pub fn generators(&self) -> Vec<ExactMatrix<F>> {
        (0..self.d).map(|i| self.generator(i)).collect()
    }

    /// `rho(h) v`, reusing `rho(T_w) v` along right descents.
    pub fn apply(&self, h: &HeckeElement<F>, v: &SparseVec<F>) -> Result<SparseVec<F>> {
        self.check_degree(h)?;
        let mut memo: HashMap<SignedPermutation, SparseVec<F>> = HashMap::new();
        let mut out = Vec::new();
        for (w, c) in h.terms() {
            let tv = self.apply_basis(w, v, &mut memo);
            out = sv_axpy(&out, c, &tv);
        }
        Ok(out)
    }

    fn apply_basis(
        &self,
        w: &SignedPermutation,
        v: &SparseVec<F>,
        memo: &mut HashMap<SignedPermutation, SparseVec<F>>,
    ) -> SparseVec<F> {
        if w.is_identity() {
            return v.clone();
        }
        if let Some(r) = memo.get(w) {
            return r.clone();
        }
        // T_w = T_{ws} T_s, so rho(T_w) = rho(T_s) rho(T_{ws})
        let s = (0..self.d).find(|&i| w.has_right_descent(i)).unwrap();
        let inner = self.apply_basis(&w.mul_generator_right(s), v, memo);
        let r = self.apply_generator(s, &inner);
        memo.insert(w.clone(), r.clone());
        r
    }

    /// `rho(h)`, column by column.
    pub fn rho(&self, h: &HeckeElement<F>) -> Result<ExactMatrix<F>> {
        self.check_degree(h)?;
        let cols: Vec<SparseVec<F>> = (0..self.dim())
            .into_par_iter()
            .map(|j| self.apply(h, &vec![(j, F::one())]))
            .collect::<Result<_>>()?;
        Ok(ExactMatrix::from_columns(self.dim(), &cols))
    }

    /// `rho(T_w)`.
    pub fn rho_basis(&self, w: &SignedPermutation) -> Result<ExactMatrix<F>> {
        self.rho(&HeckeElement::basis(w.clone()))
    }

    /// `rho(T_{i_1} ... T_{i_l}) = rho(T_{i_l}) ... rho(T_{i_1})`.
    pub fn rho_word(&self, word: &[usize]) -> Result<ExactMatrix<F>> {
        if let Some(&i) = word.iter().find(|&&i| i >= self.d) {
            return Err(Error::OutOfRange(format!("T_{i} in degree {}", self.d)));
        }
        let cols: Vec<SparseVec<F>> = (0..self.dim())
            .map(|j| {
                word.iter()
                    .fold(vec![(j, F::one())], |v, &i| self.apply_generator(i, &v))
            })
            .collect();
        Ok(ExactMatrix::from_columns(self.dim(), &cols))
    }

    /// Each defining relation evaluated on the generator matrices, as
    /// left side minus right side; all must vanish.
    pub fn relation_images(&self) -> Result<Vec<(String, ExactMatrix<F>)>> {
        let d = self.d;
        let mut out = Vec::new();
        for i in 0..d {
            let t = self.generator(i);
            let (c, ci) = if i == 0 {
                (&self.params.big_q, &self.params.big_q_inv)
            } else {
                (&self.params.q, &self.params.q_inv)
            };
            let m = t.add_scalar(c)?.mul(&t.add_scalar(&ci.negate())?)?;
            out.push((format!("quadratic T_{i}"), m));
        }
        let mut pair = |name: String, a: &[usize], b: &[usize]| -> Result<()> {
            out.push((name, self.rho_word(a)?.sub(&self.rho_word(b)?)?));
            Ok(())
        };
        if d >= 2 {
            pair("braid T_0 T_1".into(), &[0, 1, 0, 1], &[1, 0, 1, 0])?;
        }
        for i in 1..d.saturating_sub(1) {
            pair(format!("braid T_{i} T_{}", i + 1), &[i, i + 1, i], &[i + 1, i, i + 1])?;
        }
        for i in 0..d {
            for j in i + 2..d {
                pair(format!("commute T_{i} T_{j}"), &[i, j], &[j, i])?;
            }
        }
        Ok(out)
    }

    fn check_degree(&self, h: &HeckeElement<F>) -> Result<()> {
        if h.degree() != self.d {
            return Err(Error::DegreeMismatch(self.d, h.degree()));
        }
        Ok(())
    }
}
