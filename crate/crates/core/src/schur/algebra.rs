use serde::Serialize;

use super::pm::sign_classes;
use super::{check_budget, Budget};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::linalg::{
    commutant_basis, factor_over, generated_algebra, intertwiner_basis, minimal_polynomial, row_reduce, ExactMatrix,
    SparseVec,
};
use crate::rep::{BlockBraid, TensorRep};
use crate::scalars::{Field, Params, Rational, Ring, Specialization};
use crate::weyl::{block_swap, block_w0, SignedPermutation};

/// `Hom` between two tensor spaces commuting with the Hecke action.
#[derive(Clone, Debug)]
pub struct SchurAlgebraDesc<F: Ring> {
    /// Target `V_n^{⊗de}`.
    pub n: usize,
    /// Source `V_m^{⊗de}`.
    pub m: usize,
    pub d: usize,
    pub e: usize,
    pub basis: Vec<ExactMatrix<F>>,
    source_gens: Vec<ExactMatrix<F>>,
    target_gens: Vec<ExactMatrix<F>>,
}

impl<F: Field> SchurAlgebraDesc<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Every basis element intertwines the two actions.
    pub fn verify(&self) -> Result<bool> {
        for phi in &self.basis {
            for (a, b) in self.source_gens.iter().zip(&self.target_gens) {
                if phi.mul(a)? != b.mul(phi)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn contains_identity(&self) -> bool {
        if self.n != self.m {
            return false;
        }
        let n = self.basis.first().map_or(0, ExactMatrix::rows);
        let ech = row_reduce(self.basis.iter().map(ExactMatrix::flatten).collect(), n * n);
        ech.reduce(&ExactMatrix::<F>::identity(n).flatten()).is_empty()
    }
}

/// `S^B(m, n; d) = Hom_{H^B(d)}(V_m^{⊗d}, V_n^{⊗d})`.
pub fn schur_algebra<F: Field + Budget>(n: usize, m: usize, d: usize, params: &Params<F>) -> Result<SchurAlgebraDesc<F>> {
    check_budget::<F>(n, d, 1)?;
    check_budget::<F>(m, d, 1)?;
    let source_gens = TensorRep::new(m, d, params.clone()).generators();
    let target_gens = TensorRep::new(n, d, params.clone()).generators();
    let basis = intertwiner_basis(&source_gens, &target_gens)?;
    Ok(SchurAlgebraDesc { n, m, d, e: 1, basis, source_gens, target_gens })
}

/// The commutant of the `e`-Hecke generators on `(V_n^{⊗e})^{⊗d}`.
pub fn generalized_schur_algebra<F: Field + Budget>(
    n: usize,
    d: usize,
    e: usize,
    params: &Params<F>,
) -> Result<SchurAlgebraDesc<F>> {
    let gens = e_hecke_generators(d, e, n, params)?;
    let basis = commutant_basis(&gens)?;
    Ok(SchurAlgebraDesc { n, m: n, d, e, basis, source_gens: gens.clone(), target_gens: gens })
}

/// `T_{w_0}, ..., T_{w_{d-1}}` on `(V_n^{⊗e})^{⊗d}`, each checked against
/// `ρ(T_w)` for its element of `W(de)`.
pub fn e_hecke_generators<F: Field + Budget>(d: usize, e: usize, n: usize, params: &Params<F>) -> Result<Vec<ExactMatrix<F>>> {
    check_budget::<F>(n, d, e)?;
    let gens = BlockBraid::new(n, params.clone()).e_hecke_generators(d, e)?;
    let rep = TensorRep::new(n, d * e, params.clone());
    for (i, g) in gens.iter().enumerate() {
        let w = if i == 0 { block_w0(e, d)? } else { block_swap(i, e, d)? };
        if *g != rep.rho_basis(&w)? {
            return Err(Error::ConsistencyFailure(format!("T_(w_{i}) differs from its reduced word at n={n}, d={d}, e={e}")));
        }
    }
    Ok(gens)
}

/// The type B braid and commutation relations among the block generators.
pub fn e_hecke_braid_check<F: Ring>(gens: &[ExactMatrix<F>]) -> Result<Vec<(String, bool)>> {
    let p = |w: &[usize]| ExactMatrix::product(w.iter().map(|&i| &gens[i]));
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (lhs, rhs, name) = match (i, j) {
                (0, 1) => (p(&[0, 1, 0, 1])?, p(&[1, 0, 1, 0])?, "w0 w1 w0 w1 = w1 w0 w1 w0".to_string()),
                (i, j) if j == i + 1 => (p(&[i, j, i])?, p(&[j, i, j])?, format!("w{i} w{j} w{i} = w{j} w{i} w{j}")),
                (i, j) => (p(&[i, j])?, p(&[j, i])?, format!("w{i} w{j} = w{j} w{i}")),
            };
            out.push((name, lhs == rhs));
        }
    }
    Ok(out)
}

/// Spectrum of the block K-matrix `K_{V_n^{⊗e}}` at a specialization,
/// next to the figures quoted for `e = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankOneReport {
    pub e: usize,
    pub n: usize,
    pub point: String,
    pub eigenvalues: Vec<String>,
    pub eigenvalue_count: usize,
    /// Dimension of the matrix algebra generated by the block K-matrix.
    pub matrix_algebra_dim: usize,
    /// Dimension of the subalgebra of `H^B(e)` generated by `T_{w_0}`.
    pub abstract_algebra_dim: usize,
    pub quoted_dim: Option<usize>,
    pub quoted_eigenvalue_count: Option<usize>,
    pub discrepancy: bool,
}

pub fn e_hecke_rank1(e: usize, n: usize, s: &Specialization) -> Result<RankOneReport> {
    check_budget::<Rational>(n, 1, e)?;
    let params = Params::at(s);
    let k = BlockBraid::new(n, params.clone()).k(e)?;
    let (candidates, _) = sign_classes(s, e)?;
    let roots = factor_over(&minimal_polynomial(&k)?, &candidates)?;
    let mut values: Vec<Rational> = roots.into_iter().map(|(r, _)| r).collect();
    values.sort();
    let matrix_algebra_dim = generated_algebra(k.rows(), &[k])?.len();
    let abstract_algebra_dim = abstract_w0_algebra_dim(e, s)?;
    let quoted_dim = (e == 2).then_some(4);
    let quoted_eigenvalue_count = (e == 2 && n >= 4).then_some(5);
    let count = values.len();
    let discrepancy = quoted_dim.is_some_and(|q| q != count || q != abstract_algebra_dim)
        || quoted_eigenvalue_count.is_some_and(|q| q != count);
    Ok(RankOneReport {
        e,
        n,
        point: s.to_string(),
        eigenvalues: values.iter().map(ToString::to_string).collect(),
        eigenvalue_count: count,
        matrix_algebra_dim,
        abstract_algebra_dim,
        quoted_dim,
        quoted_eigenvalue_count,
        discrepancy,
    })
}

/// `dim span{1, T, T^2, ...}` for `T = T_{w_0}` in `H^B(e)`.
fn abstract_w0_algebra_dim(e: usize, s: &Specialization) -> Result<usize> {
    let h = HeckeAlgebra::at(e, s);
    let t = h.basis(&block_w0(e, 1)?)?;
    let elems = SignedPermutation::all(e);
    let coords = |x: &crate::hecke::HeckeElement<Rational>| -> SparseVec<Rational> {
        elems
            .iter()
            .enumerate()
            .filter_map(|(i, w)| {
                let c = x.coeff(w);
                (!c.is_zero()).then_some((i, c))
            })
            .collect()
    };
    let mut power = h.one();
    let mut rows = vec![coords(&power)];
    loop {
        power = h.mul(&power, &t)?;
        let v = coords(&power);
        let ech = row_reduce(rows.clone(), elems.len());
        if ech.reduce(&v).is_empty() {
            return Ok(ech.rank());
        }
        rows.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::laurent_params;
    use crate::rep::TensorRep;
    use crate::scalars::{GenericParams, RationalFunction};

    fn at() -> Params<Rational> {
        Params::at(&Specialization::default_point(3))
    }

    /// Oracle: brute-force solve of `X ρ(T_i) = ρ(T_i) X` over dense unknowns.
    fn brute_commutant_dim(n: usize, d: usize) -> usize {
        let gens = TensorRep::new(n, d, at()).generators();
        let dim = n.pow(d as u32);
        let mut rows: Vec<SparseVec<Rational>> = Vec::new();
        for g in &gens {
            for i in 0..dim {
                for j in 0..dim {
                    // (X g - g X)_{ij} = sum_k X_{ik} g_{kj} - g_{ik} X_{kj}
                    let mut row = std::collections::BTreeMap::new();
                    for k in 0..dim {
                        let a = g.get(k, j);
                        if !a.is_zero() {
                            *row.entry(i * dim + k).or_insert_with(Rational::zero) += a;
                        }
                        let b = g.get(i, k);
                        if !b.is_zero() {
                            *row.entry(k * dim + j).or_insert_with(Rational::zero) -= b;
                        }
                    }
                    rows.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
                }
            }
        }
        dim * dim - row_reduce(rows, dim * dim).rank()
    }

    #[test]
    fn small_schur_algebras() {
        let p = at();
        assert_eq!(schur_algebra(3, 3, 1, &p).unwrap().dim(), 5);
        assert_eq!(schur_algebra(3, 3, 2, &p).unwrap().dim(), brute_commutant_dim(3, 2));
        assert_eq!(schur_algebra(3, 3, 2, &p).unwrap().dim(), 15);
        for d in 1..=3 {
            let s = schur_algebra(1, 1, d, &p).unwrap();
            assert_eq!(s.dim(), 1);
            assert!(s.contains_identity());
        }
    }

    #[test]
    fn rectangular_schur_algebra_intertwines() {
        let s = schur_algebra(3, 2, 2, &at()).unwrap();
        assert!(s.verify().unwrap());
        assert!(s.dim() > 0);
        assert!(!s.contains_identity());
        let g = schur_algebra(2, 2, 2, &RationalFunction::generic_params()).unwrap();
        assert!(g.verify().unwrap());
        assert!(g.contains_identity());
    }

    #[test]
    fn budget_is_enforced() {
        let err = schur_algebra(6, 6, 3, &RationalFunction::generic_params()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    #[test]
    fn e1_generators_are_ordinary() {
        let p = at();
        let gens = e_hecke_generators(3, 1, 2, &p).unwrap();
        assert_eq!(gens, TensorRep::new(2, 3, p).generators());
    }

    #[test]
    fn block_generators_satisfy_braid_relations() {
        let p = at();
        for (d, e, n) in [(2, 2, 2), (3, 1, 3), (2, 2, 3)] {
            let gens = e_hecke_generators(d, e, n, &p).unwrap();
            for (name, ok) in e_hecke_braid_check(&gens).unwrap() {
                assert!(ok, "{name} at d={d} e={e} n={n}");
            }
        }
        let lp = laurent_params();
        let gens = BlockBraid::new(2, lp).e_hecke_generators(3, 1).unwrap();
        assert!(e_hecke_braid_check(&gens).unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn generalized_schur_algebra_at_e1_is_ordinary() {
        let p = at();
        assert_eq!(generalized_schur_algebra(3, 2, 1, &p).unwrap().dim(), 15);
        let g = generalized_schur_algebra(2, 1, 2, &p).unwrap();
        assert!(g.verify().unwrap());
    }

    #[test]
    fn rank_one_counts() {
        let s = Specialization::default_point(4);
        let r = e_hecke_rank1(1, 2, &s).unwrap();
        assert_eq!(r.eigenvalue_count, 2);
        assert_eq!(r.abstract_algebra_dim, 2);
        let r2 = e_hecke_rank1(2, 2, &s).unwrap();
        assert_eq!(r2.eigenvalue_count, r2.matrix_algebra_dim);
        let r4 = e_hecke_rank1(2, 4, &s).unwrap();
        assert_eq!(r4.eigenvalue_count, r4.matrix_algebra_dim);
        assert!(r4.eigenvalue_count <= r4.abstract_algebra_dim);
    }
}
