use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::value::{FunctorKind, FunctorValue, Presentation};
use super::{check_budget, Budget};
use crate::error::{Error, Result};
use crate::linalg::{
    generalized_eigensplit, joint_image, joint_kernel, sv_from_pairs, ExactMatrix, SparseVec, Subspace,
};
use crate::rep::{BlockBraid, TensorRep};
use crate::scalars::{Field, Params, Rational, Ring, Specialization};
use crate::weyl::{binomial, index_set, TensorIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+" } else { "-" })
    }
}

/// The four ±-powers. `S` means `T_i` acts by `q^-1`, `∧` by `-q`; the sign
/// is that of the `T_0` eigenvalue (`Q^-1` or `-Q`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PmKind {
    SymPlus,
    SymMinus,
    ExtPlus,
    ExtMinus,
}

impl PmKind {
    pub const ALL: [PmKind; 4] = [PmKind::SymPlus, PmKind::SymMinus, PmKind::ExtPlus, PmKind::ExtMinus];

    pub fn new(sym: bool, sign: Sign) -> Self {
        match (sym, sign) {
            (true, Sign::Plus) => PmKind::SymPlus,
            (true, Sign::Minus) => PmKind::SymMinus,
            (false, Sign::Plus) => PmKind::ExtPlus,
            (false, Sign::Minus) => PmKind::ExtMinus,
        }
    }

    pub fn is_sym(self) -> bool {
        matches!(self, PmKind::SymPlus | PmKind::SymMinus)
    }

    /// Sign of the `T_0` eigenvalue.
    pub fn big_q_sign(self) -> Sign {
        match self {
            PmKind::SymPlus | PmKind::ExtPlus => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    /// Sign of the `T_i` eigenvalue, `i > 0`.
    pub fn q_sign(self) -> Sign {
        if self.is_sym() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Labels `(α, β)` of the basis vectors `v(a)_{αβ}`: `(++)` is `S+`,
    /// `(+-)` is `S-`, `(-+)` is `∧+`, `(--)` is `∧-`.
    pub fn labels(self) -> (Sign, Sign) {
        (self.q_sign(), self.big_q_sign())
    }

    pub fn from_labels(alpha: Sign, beta: Sign) -> Self {
        Self::new(alpha.is_plus(), beta)
    }

    /// Eigenvalues `(T_0, T_i)` kept by the power.
    pub fn eigenvalues<F: Ring>(self, p: &Params<F>) -> (F, F) {
        let t0 = if self.big_q_sign().is_plus() { p.big_q_inv.clone() } else { p.big_q.negate() };
        let ti = if self.q_sign().is_plus() { p.q_inv.clone() } else { p.q.negate() };
        (t0, ti)
    }

    /// Closed-form dimension at `V_n`.
    pub fn expected_dim(self, n: usize, d: usize) -> u64 {
        if d == 0 {
            return 1;
        }
        let (r, d64) = ((n / 2) as u64, d as u64);
        match (n % 2 == 0, self) {
            (true, PmKind::SymPlus | PmKind::SymMinus) => binomial(r + d64 - 1, d64),
            (true, _) => binomial(r, d64),
            (false, PmKind::SymPlus) => binomial(r + d64, d64),
            (false, PmKind::SymMinus) => binomial(r + d64 - 1, d64),
            (false, PmKind::ExtPlus) => binomial(r + 1, d64),
            (false, PmKind::ExtMinus) => binomial(r, d64),
        }
    }

    /// `0 <= a_1`, or `0 < a_1` for the minus sign; weakly increasing for
    /// `S`, strictly for `∧`.
    pub fn admits(self, a: &TensorIndex) -> bool {
        let v = a.doubled();
        let first_ok = match v.first() {
            None => true,
            Some(&t) if self.big_q_sign().is_plus() => t >= 0,
            Some(&t) => t > 0,
        };
        let order_ok = if self.is_sym() {
            v.windows(2).all(|w| w[0] <= w[1])
        } else {
            v.windows(2).all(|w| w[0] < w[1])
        };
        first_ok && order_ok
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, sign) = match (s.strip_suffix('+'), s.strip_suffix('-')) {
            (Some(h), _) => (h, Sign::Plus),
            (_, Some(h)) => (h, Sign::Minus),
            _ => return Err(Error::Parse(format!("power kind {s:?} needs a trailing sign"))),
        };
        match head {
            "S" | "sym" => Ok(Self::new(true, sign)),
            "∧" | "wedge" | "ext" | "L" => Ok(Self::new(false, sign)),
            _ => Err(Error::Parse(format!("bad power kind {s:?}"))),
        }
    }
}

impl fmt::Display for PmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.is_sym() { "S" } else { "∧" };
        write!(f, "{head}{}", self.big_q_sign())
    }
}

/// `ρ(T_s) - λ_s` for every generator, with the eigenvalues kept by `kind`.
fn shifted_generators<F: Ring>(rep: &TensorRep<F>, kind: PmKind) -> Result<Vec<ExactMatrix<F>>> {
    let (t0, ti) = kind.eigenvalues(rep.params());
    (0..rep.degree())
        .map(|i| {
            let lambda = if i == 0 { &t0 } else { &ti };
            rep.generator(i).add_scalar(&lambda.negate())
        })
        .collect()
}

/// A ±-power of `V_n` of degree `d`, as the quotient of `V_n^{⊗d}` by the
/// images of `T_s - λ_s` or as the common kernel of the same operators.
pub fn pm_power<F: Field + Budget>(
    n: usize,
    d: usize,
    kind: PmKind,
    presentation: Presentation,
    params: &Params<F>,
) -> Result<FunctorValue<F>> {
    check_budget::<F>(n, d, 1)?;
    let rep = TensorRep::new(n, d, params.clone());
    let ops = shifted_generators(&rep, kind)?;
    let dim = rep.dim();
    Ok(match presentation {
        Presentation::Quotient => FunctorValue::quotient(FunctorKind::Pm(kind), n, d, joint_image(dim, &ops)?),
        Presentation::Sub => {
            let label = if kind.is_sym() { FunctorKind::Gamma(kind.big_q_sign()) } else { FunctorKind::Pm(kind) };
            FunctorValue::sub(label, n, d, joint_kernel(dim, &ops)?)
        }
    })
}

/// One line of the ±-power dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmDimRow {
    pub kind: String,
    pub presentation: &'static str,
    pub dim: usize,
    pub expected: u64,
}

impl PmDimRow {
    pub fn pass(&self) -> bool {
        self.dim as u64 == self.expected
    }
}

/// The four ±-powers in both presentations, next to their binomial
/// formulas.
pub fn pm_dim_rows<F: Field + Budget>(n: usize, d: usize, params: &Params<F>) -> Result<Vec<PmDimRow>> {
    check_budget::<F>(n, d, 1)?;
    let cells: Vec<(PmKind, Presentation)> = PmKind::ALL
        .into_iter()
        .flat_map(|k| [(k, Presentation::Quotient), (k, Presentation::Sub)])
        .collect();
    cells
        .into_par_iter()
        .map(|(kind, pres)| {
            let v = pm_power(n, d, kind, pres, params)?;
            Ok(PmDimRow {
                kind: v.kind.to_string(),
                presentation: pres.label(),
                dim: v.dim(),
                expected: kind.expected_dim(n, d),
            })
        })
        .collect()
}

/// `v(a)_{αβ} = Σ (±Q)^{∓l_0(w)} (±q)^{∓l_1(w)} v(w a)` over minimal coset
/// representatives; the `Q` factor follows the `T_0` sign of `kind`, the
/// `q` factor its `T_i` sign.
pub fn pm_basis_vector<F: Ring>(a: &TensorIndex, kind: PmKind, params: &Params<F>) -> Result<SparseVec<F>> {
    if !kind.admits(a) {
        return Err(Error::InadmissibleIndex(format!("{a} for {kind}")));
    }
    let big = if kind.big_q_sign().is_plus() { params.big_q_inv.clone() } else { params.big_q.negate() };
    let small = if kind.q_sign().is_plus() { params.q_inv.clone() } else { params.q.negate() };
    Ok(sv_from_pairs(
        a.orbit_lengths()
            .into_iter()
            .map(|(b, l0, l1)| (b.flat(), big.pow(l0 as u32).times(&small.pow(l1 as u32)))),
    ))
}

/// Every admissible `a` for `kind` with its basis vector.
pub fn pm_power_basis<F: Ring>(
    n: usize,
    d: usize,
    kind: PmKind,
    params: &Params<F>,
) -> Result<Vec<(TensorIndex, SparseVec<F>)>> {
    let values: Vec<i32> = index_set(n).into_iter().filter(|&t| t >= 0).collect();
    let mut tuples: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for t in &tuples {
            for &v in &values {
                if t.last().map_or(true, |&l| l <= v) {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|t| TensorIndex::from_doubled(n, t))
        .filter(|a| a.as_ref().map_or(true, |a| kind.admits(a)))
        .map(|a| {
            let a = a?;
            let v = pm_basis_vector(&a, kind, params)?;
            Ok((a, v))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmBasisCheck {
    pub kind: String,
    pub n: usize,
    pub d: usize,
    pub count: usize,
    pub quotient_dim: usize,
    /// Every vector lies in the common eigenspace.
    pub eigenvectors: bool,
    /// The images in the quotient are linearly independent and span it.
    pub basis_of_quotient: bool,
}

impl PmBasisCheck {
    pub fn pass(&self) -> bool {
        self.eigenvectors && self.basis_of_quotient
    }
}

pub fn check_pm_basis<F: Field + Budget>(n: usize, d: usize, kind: PmKind, params: &Params<F>) -> Result<PmBasisCheck> {
    let basis = pm_power_basis(n, d, kind, params)?;
    let quotient = pm_power(n, d, kind, Presentation::Quotient, params)?;
    let kernel = pm_power(n, d, kind, Presentation::Sub, params)?;
    let rel = &quotient.space;
    let vectors: Vec<SparseVec<F>> = basis.iter().map(|(_, v)| v.clone()).collect();
    let with_rel = rel.sum(&Subspace::span(rel.ambient(), vectors.clone()))?;
    Ok(PmBasisCheck {
        kind: kind.to_string(),
        n,
        d,
        count: basis.len(),
        quotient_dim: quotient.dim(),
        eigenvectors: vectors.iter().all(|v| kernel.space.contains(v)),
        basis_of_quotient: with_rel.dim() - rel.dim() == basis.len() && basis.len() == quotient.dim(),
    })
}

/// Positive values `Q^i q^j` and negative values `-Q^i q^j` with `|i| <= e`,
/// `|j| <= e^2`; errors if the two sets meet at `s`.
pub fn sign_classes(s: &Specialization, e: usize) -> Result<(Vec<Rational>, HashSet<Rational>)> {
    let (ib, jb) = (e as i32, (e * e) as i32);
    let mut pos = HashSet::new();
    for i in -ib..=ib {
        for j in -jb..=jb {
            pos.insert(s.monomial(i, j));
        }
    }
    let neg: HashSet<Rational> = pos.iter().map(|x| -x.clone()).collect();
    if pos.iter().any(|x| neg.contains(x)) {
        return Err(Error::InvalidSpecialization(format!(
            "{s}: positive and negative eigenvalue classes overlap for e = {e}"
        )));
    }
    let mut candidates: Vec<Rational> = pos.iter().chain(neg.iter()).cloned().collect();
    candidates.sort();
    Ok((candidates, pos))
}

/// The largest quotient of `(V_n^{⊗e})^{⊗d}` on which `T_{w_0}` (the block
/// `c_K`) has generalized eigenvalues of the `T_0` sign of `kind` and every
/// `T_{w_i}` those of its `T_i` sign.
///
/// The relations are the generalized eigenspaces of the wrong sign, closed
/// under the generators.
pub fn higher_pm_power(d: usize, e: usize, n: usize, kind: PmKind, s: &Specialization) -> Result<FunctorValue<Rational>> {
    check_budget::<Rational>(n, d, e)?;
    let gens = BlockBraid::new(n, Params::at(s)).e_hecke_generators(d, e)?;
    let (candidates, pos) = sign_classes(s, e)?;
    let dim = n.pow((d * e) as u32);
    let mut rel = Subspace::zero(dim);
    for (i, g) in gens.iter().enumerate() {
        let split = generalized_eigensplit(g, &candidates, |x| pos.contains(x))?;
        let want = if i == 0 { kind.big_q_sign() } else { kind.q_sign() };
        let bad = if want.is_plus() { split.negative } else { split.positive };
        rel = rel.sum(&bad)?;
    }
    loop {
        let mut next = rel.clone();
        for g in &gens {
            next = next.sum(&rel.apply(g)?)?;
        }
        if next.dim() == rel.dim() {
            break;
        }
        rel = next;
    }
    Ok(FunctorValue::quotient(FunctorKind::HigherPm { kind, d, e }, n, d * e, rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, GenericParams, RationalFunction};

    fn at() -> Params<Rational> {
        Params::at(&Specialization::default_point(3))
    }

    fn idx(n: usize, v: &[i32]) -> TensorIndex {
        TensorIndex::from_doubled(n, v.to_vec()).unwrap()
    }

    #[test]
    fn closed_form_dimensions_small() {
        let p = at();
        let dim = |n, d, k| pm_power(n, d, k, Presentation::Quotient, &p).unwrap().dim();
        assert_eq!(dim(3, 2, PmKind::SymPlus), 3);
        assert_eq!(dim(3, 2, PmKind::ExtMinus), 0);
        assert_eq!(dim(4, 2, PmKind::ExtPlus), 1);
        assert_eq!(dim(4, 2, PmKind::ExtMinus), 1);
    }

    #[test]
    fn both_presentations_agree_symbolically() {
        let p = RationalFunction::generic_params();
        for n in 1..=4 {
            for d in 1..=2 {
                for k in PmKind::ALL {
                    let q = pm_power(n, d, k, Presentation::Quotient, &p).unwrap();
                    let s = pm_power(n, d, k, Presentation::Sub, &p).unwrap();
                    assert_eq!(q.dim(), s.dim(), "n={n} d={d} {k}");
                    assert_eq!(q.dim() as u64, k.expected_dim(n, d), "n={n} d={d} {k}");
                }
            }
        }
    }

    #[test]
    fn gamma_label_only_for_symmetric_kinds() {
        let p = at();
        let g = pm_power(3, 1, PmKind::SymMinus, Presentation::Sub, &p).unwrap();
        assert_eq!(g.kind, FunctorKind::Gamma(Sign::Minus));
        let w = pm_power(3, 1, PmKind::ExtMinus, Presentation::Sub, &p).unwrap();
        assert_eq!(w.kind, FunctorKind::Pm(PmKind::ExtMinus));
    }

    #[test]
    fn singleton_orbit_vector() {
        let v = pm_basis_vector(&idx(3, &[0]), PmKind::SymPlus, &at()).unwrap();
        assert_eq!(v, vec![(1, rational(1, 1))]);
    }

    #[test]
    fn two_term_vector_is_k_eigenvector() {
        let p = at();
        let v = pm_basis_vector(&idx(2, &[1]), PmKind::SymPlus, &p).unwrap();
        // v_{1/2} + Q^-1 v_{-1/2}
        assert_eq!(v, vec![(0, rational(1, 2)), (1, rational(1, 1))]);
        let k = crate::rep::k_matrix(2, &p);
        assert_eq!(k.apply(&v), crate::linalg::sv_scale(&v, &rational(1, 2)));
    }

    #[test]
    fn admissible_counts() {
        let p = at();
        assert_eq!(pm_power_basis(5, 2, PmKind::ExtPlus, &p).unwrap().len(), 3);
        for n in 1..=6 {
            for d in 0..=3 {
                for k in PmKind::ALL {
                    let c = pm_power_basis(n, d, k, &p).unwrap().len() as u64;
                    assert_eq!(c, k.expected_dim(n, d), "n={n} d={d} {k}");
                }
            }
        }
    }

    #[test]
    fn inadmissible_index_is_rejected() {
        let p = at();
        let err = pm_basis_vector(&idx(3, &[2, 2]), PmKind::ExtPlus, &p).unwrap_err();
        assert!(matches!(err, Error::InadmissibleIndex(_)));
        let err = pm_basis_vector(&idx(3, &[0, 2]), PmKind::SymMinus, &p).unwrap_err();
        assert!(matches!(err, Error::InadmissibleIndex(_)));
        let err = pm_basis_vector(&idx(3, &[2, 0]), PmKind::SymPlus, &p).unwrap_err();
        assert!(matches!(err, Error::InadmissibleIndex(_)));
    }

    #[test]
    fn basis_vectors_are_eigenvectors_and_span() {
        let p = at();
        for (n, d) in [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3)] {
            for k in PmKind::ALL {
                let c = check_pm_basis(n, d, k, &p).unwrap();
                assert!(c.pass(), "{c:?}");
            }
        }
    }

    #[test]
    fn kind_parsing_and_labels() {
        for k in PmKind::ALL {
            assert_eq!(PmKind::parse(&k.to_string()).unwrap(), k);
            let (a, b) = k.labels();
            assert_eq!(PmKind::from_labels(a, b), k);
        }
        assert_eq!(PmKind::parse("wedge-").unwrap(), PmKind::ExtMinus);
        assert!(PmKind::parse("T+").is_err());
        assert_eq!(PmKind::SymMinus.labels(), (Sign::Plus, Sign::Minus));
    }

    #[test]
    fn higher_powers_reduce_at_e1() {
        let s = Specialization::default_point(3);
        let p = Params::at(&s);
        for (n, d) in [(3, 2), (2, 2), (4, 2), (3, 1)] {
            for k in PmKind::ALL {
                let h = higher_pm_power(d, 1, n, k, &s).unwrap();
                let q = pm_power(n, d, k, Presentation::Quotient, &p).unwrap();
                assert_eq!(h.space, q.space, "n={n} d={d} {k}");
            }
        }
        let h = higher_pm_power(1, 1, 2, PmKind::ExtMinus, &s).unwrap();
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn higher_powers_at_e2_split_by_ck_sign() {
        let s = Specialization::default_point(4);
        let plus = higher_pm_power(1, 2, 2, PmKind::SymPlus, &s).unwrap();
        let minus = higher_pm_power(1, 2, 2, PmKind::SymMinus, &s).unwrap();
        assert_eq!(plus.dim() + minus.dim(), 4);
        // d = 1 has no T_{w_i}: the ∧ kinds coincide with the S kinds.
        let ext = higher_pm_power(1, 2, 2, PmKind::ExtPlus, &s).unwrap();
        assert_eq!(ext.space, plus.space);
    }
}
