use std::fmt;

use serde::Serialize;

use super::tensor::TensorRep;
use crate::error::{Error, Result};
use crate::linalg::{commutant_dim, generated_algebra, ExactMatrix};
use crate::scalars::{Field, GenericParams, Params, Rational, RationalFunction, Specialization};
use crate::weyl::{basis_position, fmt_half, index_set};

/// Generators of `U_q(gl_n)`; indices are doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QgGenerator {
    E(i32),
    F(i32),
    D(i32),
    DInv(i32),
    H(i32),
    HInv(i32),
}

/// Generators of the coideal subalgebra; indices are doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoidealGenerator {
    /// `e_i = E_i + F_-i H_i^-1`.
    E(i32),
    /// `f_i = E_-i + H_-i^-1 F_i`.
    F(i32),
    /// `d_i = D_i D_-i`.
    D(i32),
    /// `e_1/2 = E_1/2 + Q^-1 F_-1/2 H_1/2^-1`.
    EHalf,
    /// `f_1/2 = E_-1/2 + Q H_-1/2^-1 F_1/2`.
    FHalf,
    /// `t = E_0 + q F_0 H_0^-1 + (Q - Q^-1)/(q - q^-1) H_0^-1`.
    T,
}

impl fmt::Display for QgGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::E(i) => write!(f, "E_{}", fmt_half(*i)),
            Self::F(i) => write!(f, "F_{}", fmt_half(*i)),
            Self::D(i) => write!(f, "D_{}", fmt_half(*i)),
            Self::DInv(i) => write!(f, "D_{}^-1", fmt_half(*i)),
            Self::H(i) => write!(f, "H_{}", fmt_half(*i)),
            Self::HInv(i) => write!(f, "H_{}^-1", fmt_half(*i)),
        }
    }
}

impl fmt::Display for CoidealGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::E(i) => write!(f, "e_{}", fmt_half(*i)),
            Self::F(i) => write!(f, "f_{}", fmt_half(*i)),
            Self::D(i) => write!(f, "d_{}", fmt_half(*i)),
            Self::EHalf => write!(f, "e_1/2"),
            Self::FHalf => write!(f, "f_1/2"),
            Self::T => write!(f, "t"),
        }
    }
}

/// Order in which `Δ` is iterated to reach `V^{⊗d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `(1 ⊗ Δ^{(d-1)}) Δ`.
    Right,
    /// `(Δ^{(d-1)} ⊗ 1) Δ`.
    Left,
}

/// `U_q(gl_n)` and its coideal subalgebra acting on `V_n^{⊗d}` through
/// `Δ(D_i) = D_i ⊗ D_i`, `Δ(E_i) = 1 ⊗ E_i + E_i ⊗ H_i^-1`,
/// `Δ(F_i) = F_i ⊗ 1 + H_i ⊗ F_i`.
#[derive(Clone, Debug)]
pub struct QuantumAction<F> {
    n: usize,
    d: usize,
    params: Params<F>,
}

impl<F: Field> QuantumAction<F> {
    pub fn new(n: usize, d: usize, params: Params<F>) -> Self {
        Self { n, d, params }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    fn check_e_index(&self, i: i32) -> Result<()> {
        if self.n < 2 || basis_position(self.n - 1, i).is_none() {
            return Err(Error::InvalidIndex(format!("{} is not in I_{}", fmt_half(i), self.n as i64 - 1)));
        }
        Ok(())
    }

    fn check_d_index(&self, i: i32) -> Result<()> {
        if basis_position(self.n, i).is_none() {
            return Err(Error::InvalidIndex(format!("{} is not in I_{}", fmt_half(i), self.n)));
        }
        Ok(())
    }

    /// Exponent of `q` in `D_i` on `v_j`, both doubled.
    fn diag_power(g: QgGenerator, j: i32) -> i32 {
        let delta = |a: i32| i32::from(a == j);
        match g {
            QgGenerator::D(i) => delta(i),
            QgGenerator::DInv(i) => -delta(i),
            QgGenerator::H(i) => delta(i - 1) - delta(i + 1),
            QgGenerator::HInv(i) => delta(i + 1) - delta(i - 1),
            _ => 0,
        }
    }

    /// The generator on `V_n`: `D_i v_j = q^{δ_ij} v_j`,
    /// `E_i v_j = v_{j-1}` if `i = j - 1/2`, `F_i v_j = v_{j+1}` if `i = j + 1/2`.
    pub fn single(&self, g: QgGenerator) -> Result<ExactMatrix<F>> {
        let n = self.n;
        let vals = index_set(n);
        let mut entries = Vec::new();
        match g {
            QgGenerator::E(i) | QgGenerator::F(i) => {
                self.check_e_index(i)?;
                for (p, &j) in vals.iter().enumerate() {
                    match g {
                        QgGenerator::E(_) if j - 1 == i => entries.push((p - 1, p, F::one())),
                        QgGenerator::F(_) if j + 1 == i => entries.push((p + 1, p, F::one())),
                        _ => {}
                    }
                }
            }
            QgGenerator::D(i) | QgGenerator::DInv(i) => {
                self.check_d_index(i)?;
                for (p, &j) in vals.iter().enumerate() {
                    entries.push((p, p, self.q_power(Self::diag_power(g, j))));
                }
            }
            QgGenerator::H(i) | QgGenerator::HInv(i) => {
                self.check_e_index(i)?;
                for (p, &j) in vals.iter().enumerate() {
                    entries.push((p, p, self.q_power(Self::diag_power(g, j))));
                }
            }
        }
        ExactMatrix::from_entries(n, n, entries)
    }

    fn q_power(&self, k: i32) -> F {
        self.params.monomial(0, k)
    }

    fn power(&self, m: &ExactMatrix<F>, k: usize) -> ExactMatrix<F> {
        (0..k).fold(ExactMatrix::identity(1), |acc, _| acc.kron(m))
    }

    /// The generator on `V_n^{⊗d}` with the right-leaning iteration of `Δ`.
    pub fn tensor(&self, g: QgGenerator) -> Result<ExactMatrix<F>> {
        self.tensor_with(g, Bracketing::Right)
    }

    pub fn tensor_with(&self, g: QgGenerator, bracketing: Bracketing) -> Result<ExactMatrix<F>> {
        let x = self.single(g)?;
        match g {
            QgGenerator::E(i) => {
                let hinv = self.single(QgGenerator::HInv(i))?;
                let one = ExactMatrix::identity(self.n);
                // Δ(E) = 1 ⊗ E + E ⊗ H^-1
                self.iterate(&x, &one, &hinv, bracketing)
            }
            QgGenerator::F(i) => {
                let h = self.single(QgGenerator::H(i))?;
                let one = ExactMatrix::identity(self.n);
                // Δ(F) = H ⊗ F + F ⊗ 1
                self.iterate(&x, &h, &one, bracketing)
            }
            _ => Ok(self.power(&x, self.d)),
        }
    }

    /// Iterate `Δ(x) = a ⊗ x + x ⊗ b` for group-like `a`, `b`.
    fn iterate(
        &self,
        x: &ExactMatrix<F>,
        a: &ExactMatrix<F>,
        b: &ExactMatrix<F>,
        bracketing: Bracketing,
    ) -> Result<ExactMatrix<F>> {
        if self.d == 0 {
            return Ok(ExactMatrix::zeros(1, 1));
        }
        let mut acc = x.clone();
        for k in 1..self.d {
            acc = match bracketing {
                Bracketing::Right => a.kron(&acc).add(&x.kron(&self.power(b, k)))?,
                Bracketing::Left => self.power(a, k).kron(x).add(&acc.kron(b))?,
            };
        }
        Ok(acc)
    }

    /// Coideal generators of `U^B` for this `n`: `d_i` (`i > 0` in `I_n`),
    /// `e_i, f_i` (`i > 0` in `I_{n-1}`), with `e_1/2, f_1/2` replacing
    /// `e_{1/2}, f_{1/2}` when `n` is odd, and `t` when `n` is even.
    pub fn coideal_generators(&self) -> Vec<CoidealGenerator> {
        let n = self.n;
        let mut out: Vec<CoidealGenerator> = index_set(n)
            .into_iter()
            .filter(|&i| i > 0)
            .map(CoidealGenerator::D)
            .collect();
        if n >= 2 {
            for i in index_set(n - 1).into_iter().filter(|&i| i > 0) {
                if n % 2 == 1 && i == 1 {
                    out.push(CoidealGenerator::EHalf);
                    out.push(CoidealGenerator::FHalf);
                } else {
                    out.push(CoidealGenerator::E(i));
                    out.push(CoidealGenerator::F(i));
                }
            }
            if n % 2 == 0 {
                out.push(CoidealGenerator::T);
            }
        }
        out
    }

    /// The coideal generator on `V_n^{⊗d}`.
    pub fn coideal(&self, g: CoidealGenerator) -> Result<ExactMatrix<F>> {
        use QgGenerator as G;
        let n = self.n;
        let op = |g: QgGenerator| self.tensor(g);
        let p = &self.params;
        match g {
            CoidealGenerator::D(i) => {
                if i <= 0 {
                    return Err(Error::InvalidIndex(format!("d_{} needs i > 0", fmt_half(i))));
                }
                op(G::D(i))?.mul(&op(G::D(-i))?)
            }
            CoidealGenerator::E(i) | CoidealGenerator::F(i) => {
                self.check_e_index(i)?;
                if i <= 0 {
                    return Err(Error::InvalidIndex(format!("{g} needs i > 0")));
                }
                if n % 2 == 1 && i == 1 {
                    return Err(Error::ParityMismatch(format!("{g} is replaced by the half generators for n = {n}")));
                }
                match g {
                    CoidealGenerator::E(_) => op(G::E(i))?.add(&op(G::F(-i))?.mul(&op(G::HInv(i))?)?),
                    _ => op(G::E(-i))?.add(&op(G::HInv(-i))?.mul(&op(G::F(i))?)?),
                }
            }
            CoidealGenerator::EHalf | CoidealGenerator::FHalf => {
                if n % 2 == 0 || n < 3 {
                    return Err(Error::ParityMismatch(format!("{g} needs n odd and at least 3, got {n}")));
                }
                match g {
                    CoidealGenerator::EHalf => {
                        let tail = op(G::F(-1))?.mul(&op(G::HInv(1))?)?.scale(&p.big_q_inv);
                        op(G::E(1))?.add(&tail)
                    }
                    _ => {
                        let tail = op(G::HInv(-1))?.mul(&op(G::F(1))?)?.scale(&p.big_q);
                        op(G::E(-1))?.add(&tail)
                    }
                }
            }
            CoidealGenerator::T => {
                if n % 2 == 1 {
                    return Err(Error::ParityMismatch(format!("t needs n even, got {n}")));
                }
                let hinv = op(G::HInv(0))?;
                let c = p.big_q.minus(&p.big_q_inv).div(&p.q.minus(&p.q_inv))?;
                op(G::E(0))?
                    .add(&op(G::F(0))?.mul(&hinv)?.scale(&p.q))?
                    .add(&hinv.scale(&c))
            }
        }
    }

    /// All coideal generator matrices, named.
    pub fn coideal_matrices(&self) -> Result<Vec<(String, ExactMatrix<F>)>> {
        self.coideal_generators()
            .into_iter()
            .map(|g| Ok((g.to_string(), self.coideal(g)?)))
            .collect()
    }
}

/// Witness of the double centralizer property at one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCentralizerReport {
    pub n: usize,
    pub d: usize,
    /// Coideal generators that fail to commute with some `rho(T_i)` over `Q(Q, q)`.
    pub noncommuting: Vec<String>,
    pub algebra_dim: usize,
    pub commutant_dim: usize,
}

impl DoubleCentralizerReport {
    pub fn pass(&self) -> bool {
        self.noncommuting.is_empty() && self.algebra_dim == self.commutant_dim
    }
}

/// (i) every coideal generator commutes with every `rho(T_i)` over the
/// function field; (ii) at `s`, the unital algebra generated by the coideal
/// generators has the dimension of the Hecke commutant.
pub fn verify_double_centralizer(n: usize, d: usize, s: &Specialization) -> Result<DoubleCentralizerReport> {
    let generic = RationalFunction::generic_params();
    let qa = QuantumAction::new(n, d, generic.clone());
    let rep = TensorRep::new(n, d, generic);
    let hecke = rep.generators();
    let mut noncommuting = Vec::new();
    for (name, m) in qa.coideal_matrices()? {
        for (i, t) in hecke.iter().enumerate() {
            if !m.commutator(t)?.is_zero() {
                noncommuting.push(format!("{name} with T_{i}"));
            }
        }
    }
    let at: Params<Rational> = Params::at(s);
    let qa = QuantumAction::new(n, d, at.clone());
    let gens: Vec<ExactMatrix<Rational>> = qa.coideal_matrices()?.into_iter().map(|(_, m)| m).collect();
    let dim = n.pow(d as u32);
    let algebra_dim = generated_algebra(dim, &gens)?.len();
    let commutant_dim = commutant_dim(&TensorRep::new(n, d, at).generators())?;
    Ok(DoubleCentralizerReport {
        n,
        d,
        noncommuting,
        algebra_dim,
        commutant_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    type R = RationalFunction;

    fn qa(n: usize, d: usize) -> QuantumAction<R> {
        QuantumAction::new(n, d, R::generic_params())
    }

    #[test]
    fn e0_on_v2() {
        let e = qa(2, 1).single(QgGenerator::E(0)).unwrap();
        // basis v_-1/2, v_1/2
        assert_eq!(e.get(0, 1), R::one());
        assert_eq!(e.nnz(), 1);
        let d = qa(3, 1).single(QgGenerator::D(2)).unwrap();
        assert_eq!(d.get(2, 2), R::small_q());
        assert_eq!(d.get(0, 0), R::one());
        assert!(qa(3, 1).single(QgGenerator::E(0)).is_err());
    }

    #[test]
    fn serre_free_relations_on_tensor_square() {
        // [E_i, F_j] = δ_ij (H_i - H_i^-1) / (q - q^-1) on V_3 ⊗ V_3
        let a = qa(3, 2);
        let p = R::generic_params();
        let denom = p.q.minus(&p.q_inv).inv().unwrap();
        for &i in &[-1, 1] {
            for &j in &[-1, 1] {
                let e = a.tensor(QgGenerator::E(i)).unwrap();
                let f = a.tensor(QgGenerator::F(j)).unwrap();
                let lhs = e.commutator(&f).unwrap();
                let rhs = if i == j {
                    a.tensor(QgGenerator::H(i))
                        .unwrap()
                        .sub(&a.tensor(QgGenerator::HInv(i)).unwrap())
                        .unwrap()
                        .scale(&denom)
                } else {
                    ExactMatrix::zeros(9, 9)
                };
                assert_eq!(lhs, rhs, "E_{i} F_{j}");
            }
        }
    }

    #[test]
    fn coassociativity_at_degree_three() {
        let a = qa(3, 3);
        for g in [QgGenerator::E(1), QgGenerator::F(-1), QgGenerator::E(-1)] {
            assert_eq!(
                a.tensor_with(g, Bracketing::Right).unwrap(),
                a.tensor_with(g, Bracketing::Left).unwrap(),
                "{g}"
            );
        }
    }

    #[test]
    fn quantum_group_commutes_with_type_a_generators() {
        let a = qa(3, 2);
        let rep = TensorRep::new(3, 2, R::generic_params());
        let r = rep.generator(1);
        for g in [QgGenerator::E(1), QgGenerator::F(-1), QgGenerator::D(0)] {
            assert!(a.tensor(g).unwrap().commutator(&r).unwrap().is_zero(), "{g}");
        }
    }

    #[test]
    fn coideal_generators_by_parity() {
        let names = |n| qa(n, 1).coideal_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>();
        assert_eq!(names(1), Vec::<String>::new());
        assert_eq!(names(2), vec!["d_1/2", "t"]);
        assert_eq!(names(3), vec!["d_1", "e_1/2", "f_1/2"]);
        assert_eq!(names(4), vec!["d_1/2", "d_3/2", "e_1", "f_1", "t"]);
        assert!(matches!(qa(3, 1).coideal(CoidealGenerator::T), Err(Error::ParityMismatch(_))));
        assert!(matches!(qa(2, 1).coideal(CoidealGenerator::EHalf), Err(Error::ParityMismatch(_))));
    }

    #[test]
    fn coideal_commutes_with_hecke_action() {
        for (n, d) in [(2, 2), (3, 2), (4, 2), (5, 1), (2, 3)] {
            let a = qa(n, d);
            let rep = TensorRep::new(n, d, R::generic_params());
            for (name, m) in a.coideal_matrices().unwrap() {
                for (i, t) in rep.generators().iter().enumerate() {
                    assert!(m.commutator(t).unwrap().is_zero(), "{name} vs T_{i}, n={n}, d={d}");
                }
            }
        }
    }

    #[test]
    fn double_centralizer_small() {
        let s = Specialization::default_point(2);
        let r1 = verify_double_centralizer(3, 1, &s).unwrap();
        assert!(r1.pass(), "{r1:?}");
        assert_eq!(r1.commutant_dim, 5);
        let r0 = verify_double_centralizer(1, 2, &s).unwrap();
        assert_eq!((r0.algebra_dim, r0.commutant_dim), (1, 1));
    }
}
