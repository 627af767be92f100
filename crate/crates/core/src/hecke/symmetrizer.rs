use super::algebra::{HeckeAlgebra, HeckeElement};
use crate::error::{Error, Result};
use crate::scalars::Ring;
use crate::weyl::{c_of_lambda, w_ab, Bipartition, Partition, SignedPermutation};

/// Unsigned permutations of `{1..d}` preserving the consecutive blocks of sizes `parts`.
pub fn young_subgroup(parts: &[usize]) -> Vec<SignedPermutation> {
    let d: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(d);
    for (k, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat(k).take(p));
    }
    SignedPermutation::all_unsigned(d)
        .into_iter()
        .filter(|w| {
            w.images()
                .iter()
                .enumerate()
                .all(|(i, &x)| block[x as usize - 1] == block[i])
        })
        .collect()
}

impl<F: Ring> HeckeAlgebra<F> {
    /// `x = sum q^{-l(w)} T_w` over the Young subgroup of `parts`;
    /// `T_i x = q^{-1} x` inside each block.
    pub fn row_symmetrizer(&self, parts: &[usize]) -> Result<HeckeElement<F>> {
        let qi = self.params().q_inv.clone();
        self.young_sum(parts, |l| qi.pow(l))
    }

    /// `y = sum (-q)^{l(w)} T_w` over the Young subgroup of `parts`;
    /// `T_i y = -q y` inside each block.
    pub fn column_antisymmetrizer(&self, parts: &[usize]) -> Result<HeckeElement<F>> {
        let mq = self.params().q.negate();
        self.young_sum(parts, |l| mq.pow(l))
    }

    fn young_sum(&self, parts: &[usize], coeff: impl Fn(u32) -> F) -> Result<HeckeElement<F>> {
        let k: usize = parts.iter().sum();
        if k > self.degree() {
            return Err(Error::InvalidShape(format!("{parts:?} does not fit in degree {}", self.degree())));
        }
        let terms = young_subgroup(parts)
            .into_iter()
            .map(|w| {
                let c = coeff(w.length() as u32);
                (w.extend(self.degree() - k), c)
            });
        HeckeElement::from_terms(self.degree(), terms)
    }

    /// Type A quantum Young symmetrizer `e_λ = y_{λ'} T_{c(λ)^{-1}} x_λ`
    /// in degree `|λ|`, embedded via the first points.
    ///
    /// On tensor space `ρ(e_λ) = ρ(x_λ) ρ(T_{c(λ)^{-1}}) ρ(y_{λ'})`: antisymmetrize
    /// along columns, move column entries into their rows, symmetrize rows.
    pub fn young_symmetrizer(&self, lambda: &Partition) -> Result<HeckeElement<F>> {
        let a = lambda.size();
        if a > self.degree() {
            return Err(Error::InvalidShape(format!("{lambda:?} does not fit in degree {}", self.degree())));
        }
        let sub = self.with_degree(a);
        let y = sub.column_antisymmetrizer(lambda.conjugate().parts())?;
        let t = HeckeElement::basis(c_of_lambda(lambda).inverse());
        let x = sub.row_symmetrizer(lambda.parts())?;
        sub.product([&y, &t, &x])?.extend(self.degree())
    }

    /// `e'_{λ,μ} = T_{a,b} u_b^- T_{b,a} u_a^+ e^a_λ e^b_μ`, with `e^a_λ` on the
    /// first `a` points and `e^b_μ` on the last `b`.
    pub fn e_prime(&self, shape: &Bipartition) -> Result<HeckeElement<F>> {
        let (a, b) = (shape.lambda.size(), shape.mu.size());
        if a + b != self.degree() {
            return Err(Error::InvalidShape(format!(
                "{shape} has size {} but the degree is {}",
                a + b,
                self.degree()
            )));
        }
        let d = self.degree();
        let e_lambda = self.young_symmetrizer(&shape.lambda)?;
        let e_mu = self
            .with_degree(b)
            .young_symmetrizer(&shape.mu)?
            .embed(d, |w| w.shifted(a, d))?;
        let t_ab = HeckeElement::basis(w_ab(a, b));
        let t_ba = HeckeElement::basis(w_ab(b, a));
        let um = self.u_minus(b)?;
        let up = self.u_plus(a)?;
        self.product([&t_ab, &um, &t_ba, &up, &e_lambda, &e_mu])
    }

    /// Both sides of the cylinder identity in degree `d + e`, where `x ⊗ 1`
    /// embeds via the first points:
    /// `c_K^{d+e} = T_{d,e}(c_K^e ⊗ 1)T_{e,d}(c_K^d ⊗ 1) = (c_K^d ⊗ 1)T_{d,e}(c_K^e ⊗ 1)T_{e,d}`.
    ///
    /// With `T_{a,b} = T_{w_{a,b}}` as in [`w_ab`] the two braid factors must
    /// appear in this order; the other order fails once `d != e`.
    pub fn cylinder_sides(&self, d: usize, e: usize) -> Result<CylinderSides<F>> {
        if d == 0 || e == 0 || d + e != self.degree() {
            return Err(Error::OutOfRange(format!(
                "cylinder identity needs d, e >= 1 with d + e = {}",
                self.degree()
            )));
        }
        let n = self.degree();
        let ck_d = self.with_degree(d).c_k()?.extend(n)?;
        let ck_e = self.with_degree(e).c_k()?.extend(n)?;
        let t_ed = HeckeElement::basis(w_ab(e, d));
        let t_de = HeckeElement::basis(w_ab(d, e));
        Ok(CylinderSides {
            total: self.c_k()?,
            first: self.product([&t_de, &ck_e, &t_ed, &ck_d])?,
            second: self.product([&ck_d, &t_de, &ck_e, &t_ed])?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CylinderSides<F: Ring> {
    pub total: HeckeElement<F>,
    pub first: HeckeElement<F>,
    pub second: HeckeElement<F>,
}

impl<F: Ring> CylinderSides<F> {
    pub fn holds(&self) -> bool {
        self.total == self.first && self.total == self.second
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::LaurentPoly2;

    #[test]
    fn symmetrizers_are_eigenvectors() {
        let h = HeckeAlgebra::laurent(3);
        let x = h.row_symmetrizer(&[3]).unwrap();
        let y = h.column_antisymmetrizer(&[3]).unwrap();
        for i in 1..3 {
            let t = h.generator(i).unwrap();
            assert_eq!(h.mul(&t, &x).unwrap(), x.scale(&LaurentPoly2::monomial(1, 0, -1)));
            assert_eq!(h.mul(&x, &t).unwrap(), x.scale(&LaurentPoly2::monomial(1, 0, -1)));
            assert_eq!(h.mul(&t, &y).unwrap(), y.scale(&LaurentPoly2::monomial(-1, 0, 1)));
        }
        assert_eq!(young_subgroup(&[2, 1]).len(), 2);
        assert_eq!(young_subgroup(&[2, 2]).len(), 4);
    }

    #[test]
    fn cylinder_for_one_one_is_braid_relation() {
        let h = HeckeAlgebra::laurent(2);
        let s = h.cylinder_sides(1, 1).unwrap();
        assert!(s.holds());
        assert_eq!(s.total, h.word(&[0, 1, 0, 1]).unwrap());
    }

    #[test]
    fn cylinder_identity_small_cases() {
        for (d, e) in [(2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
            let h = HeckeAlgebra::laurent(d + e);
            assert!(h.cylinder_sides(d, e).unwrap().holds(), "({d},{e})");
        }
    }

    #[test]
    fn swapped_braid_factors_break_the_identity() {
        let h = HeckeAlgebra::laurent(3);
        let ck2 = h.with_degree(2).c_k().unwrap().extend(3).unwrap();
        let ck1 = h.with_degree(1).c_k().unwrap().extend(3).unwrap();
        let t12 = HeckeElement::basis(w_ab(1, 2));
        let t21 = HeckeElement::basis(w_ab(2, 1));
        let other = h.product([&t12, &ck1, &t21, &ck2]).unwrap();
        assert_ne!(other, h.c_k().unwrap());
    }

    #[test]
    fn e_prime_is_nonzero() {
        let h = HeckeAlgebra::laurent(2);
        for shape in Bipartition::all(2) {
            assert!(!h.e_prime(&shape).unwrap().is_zero(), "{shape}");
        }
        assert!(h.e_prime(&"1|-".parse().unwrap()).is_err());
    }
}
