use super::pm::Sign;
use super::value::{FunctorKind, FunctorValue};
use super::{check_budget, Budget};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::linalg::{generalized_eigensplit, image, joint_image, joint_kernel, ExactMatrix, SparseVec, Subspace};
use crate::rep::TensorRep;
use crate::scalars::{Field, Params, Ring};
use crate::weyl::{c_of_lambda, w_ab, Bipartition, Partition, SignedPermutation};

/// `f_d(Q, q) = prod_{|i| < d} (Q^-2 + q^{2i})`.
pub fn f_d<F: Ring>(d: usize, params: &Params<F>) -> F {
    let d = d as i32;
    (1 - d..d).fold(F::one(), |acc, i| acc.times(&params.monomial(-2, 0).plus(&params.monomial(0, 2 * i))))
}

fn require_fd<F: Ring>(d: usize, params: &Params<F>) -> Result<()> {
    if f_d(d, params).is_zero() {
        return Err(Error::FdVanishes(format!("f_{d} = 0")));
    }
    Ok(())
}

/// `⊗^d_±(V_n)` as the image of `ρ(u_d^±)`.
pub fn tensor_pm<F: Field + Budget>(n: usize, d: usize, sign: Sign, params: &Params<F>) -> Result<FunctorValue<F>> {
    check_budget::<F>(n, d, 1)?;
    require_fd(d, params)?;
    let h = HeckeAlgebra::new(d, params.clone());
    let u = if sign.is_plus() { h.u_plus(d)? } else { h.u_minus(d)? };
    let rep = TensorRep::new(n, d, params.clone());
    Ok(FunctorValue::sub(FunctorKind::TensorPm(sign), n, d, image(&rep.rho(&u)?)))
}

/// The joint generalized eigenspaces of `ρ(K_1), ..., ρ(K_d)` on which every
/// eigenvalue is positive (`Q^-1 q^{2j}`), respectively negative (`-Q q^{2j}`).
pub fn tensor_pm_eigensplit<F: Field + Budget>(n: usize, d: usize, params: &Params<F>) -> Result<(Subspace<F>, Subspace<F>)> {
    check_budget::<F>(n, d, 1)?;
    require_fd(d, params)?;
    let h = HeckeAlgebra::new(d, params.clone());
    let rep = TensorRep::new(n, d, params.clone());
    let dim = rep.dim();
    let (mut pos, mut neg) = (Subspace::full(dim), Subspace::full(dim));
    for i in 1..=d {
        let k = rep.rho(&h.jucys_murphy(i)?)?;
        let span = i as i32;
        let positive: Vec<F> = (1 - span..span).map(|j| params.monomial(-1, 2 * j)).collect();
        let mut candidates = positive.clone();
        candidates.extend((1 - span..span).map(|j| params.monomial(1, 2 * j).negate()));
        let split = generalized_eigensplit(&k, &candidates, |x| positive.contains(x))?;
        pos = pos.intersect(&split.positive)?;
        neg = neg.intersect(&split.negative)?;
    }
    Ok((pos, neg))
}

/// `u_b^- T_{b,a} u_a^+` in `H^B(a + b)`.
fn signed_element<F: Ring>(a: usize, b: usize, params: &Params<F>) -> Result<HeckeElement<F>> {
    let h = HeckeAlgebra::new(a + b, params.clone());
    h.product([&h.u_minus(b)?, &HeckeElement::basis(w_ab(b, a)), &h.u_plus(a)?])
}

/// `^a_+⊗^b_-(V_n)`, the image of `ρ(u_b^- T_{b,a} u_a^+)`.
pub fn signed_tensor<F: Field + Budget>(a: usize, b: usize, n: usize, params: &Params<F>) -> Result<FunctorValue<F>> {
    check_budget::<F>(n, a + b, 1)?;
    require_fd(a.max(b), params)?;
    let rep = TensorRep::new(n, a + b, params.clone());
    let m = rep.rho(&signed_element(a, b, params)?)?;
    Ok(FunctorValue::sub(FunctorKind::SignedTensor(a, b), n, a + b, image(&m)))
}

/// Generators `T_i` of the Young subgroup of consecutive blocks `parts`,
/// starting after `offset` points.
fn young_generators(parts: &[usize], offset: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = offset;
    for &p in parts {
        out.extend(start + 1..start + p);
        start += p;
    }
    out
}

/// Common kernel and sum of images of `ρ(T_i) - λ` over the given generators.
fn eigen_pair<F: Field>(rep: &TensorRep<F>, gens: &[usize], lambda: &F) -> Result<(Subspace<F>, Subspace<F>)> {
    let ops = gens
        .iter()
        .map(|&i| rep.generator(i).add_scalar(&lambda.negate()))
        .collect::<Result<Vec<_>>>()?;
    Ok((joint_kernel(rep.dim(), &ops)?, joint_image(rep.dim(), &ops)?))
}

fn kron_vec<F: Ring>(x: &SparseVec<F>, y: &SparseVec<F>, dim_y: usize) -> SparseVec<F> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for (i, a) in x {
        for (j, b) in y {
            out.push((i * dim_y + j, a.times(b)));
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// `ι(v_{a_1} ∧ ... ∧ v_{a_c}) = Σ_w (-q)^{l(w)} v_{w a}` on one block.
fn wedge_block<F: Ring>(n: usize, c: usize, params: &Params<F>) -> Vec<SparseVec<F>> {
    let mq = params.q.negate();
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..c {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                let lo = t.last().map_or(0, |&l| l + 1);
                (lo..n).map(move |v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect();
    }
    let perms = permutations(c);
    tuples
        .into_iter()
        .map(|a| {
            let mut v: SparseVec<F> = perms
                .iter()
                .map(|p| {
                    let word: Vec<usize> = p.iter().map(|&k| a[k]).collect();
                    let inversions = (0..c).flat_map(|i| (i + 1..c).map(move |j| (i, j))).filter(|&(i, j)| word[i] > word[j]).count();
                    let flat = word.iter().fold(0, |acc, &x| acc * n + x);
                    (flat, mq.pow(inversions as u32))
                })
                .collect();
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect()
}

/// The image of `ι_{c_1} ⊗ ... ⊗ ι_{c_k}`: the tensor product of the
/// quantum exterior powers of the consecutive blocks `columns`.
pub fn iota_subspace<F: Field>(n: usize, columns: &[usize], params: &Params<F>) -> Subspace<F> {
    let mut vecs: Vec<SparseVec<F>> = vec![vec![(0, F::one())]];
    for &c in columns {
        let block = wedge_block(n, c, params);
        let dim_y = n.pow(c as u32);
        vecs = vecs
            .iter()
            .flat_map(|x| block.iter().map(move |y| kron_vec(x, y, dim_y)))
            .collect();
    }
    let d: usize = columns.iter().sum();
    Subspace::span(n.pow(d as u32), vecs)
}

/// `ρ` of the conjugation `T_{c(λ)^-1} ⊗ T_{c(μ)^-1}`, taking column
/// reading order to row order on the first `|λ|` and the last `|μ|` points.
fn conjugation<F: Ring>(rep: &TensorRep<F>, shape: &Bipartition) -> Result<ExactMatrix<F>> {
    let (a, b) = (shape.lambda.size(), shape.mu.size());
    let d = a + b;
    let left = c_of_lambda(&shape.lambda).inverse().extend(b);
    let right = if b == 0 { SignedPermutation::identity(d) } else { c_of_lambda(&shape.mu).inverse().shifted(a, d)? };
    rep.rho_basis(&left.compose(&right)?)
}

/// The subspace of `V_n^{⊗d}` on which the type A generators of the row
/// blocks `λ` (first points) and `μ` (last points) act by `eigen`, together
/// with the sum of the complementary eigenspaces.
fn row_pair<F: Field>(rep: &TensorRep<F>, first: &Partition, second: &Partition, eigen: &F) -> Result<(Subspace<F>, Subspace<F>)> {
    let mut gens = young_generators(first.parts(), 0);
    gens.extend(young_generators(second.parts(), first.size()));
    eigen_pair(rep, &gens, eigen)
}

fn check_shape<F: Ring>(shape: &Bipartition, n: usize, params: &Params<F>) -> Result<usize> {
    let d = shape.size();
    if n == 0 {
        return Err(Error::InvalidShape("n must be positive".into()));
    }
    require_fd(shape.lambda.size().max(shape.mu.size()), params)?;
    Ok(d)
}

/// `S^{(λ,μ)}`: the image of `S^μ_- ⊗ S^λ` in `S^λ_+ ⊗ S^μ` under
/// `u_b^- T_{b,a} u_a^+`, with `S^μ ⊗ S^λ` realized by its `q^-1`
/// eigenvectors.
pub fn sym_bi<F: Field + Budget>(shape: &Bipartition, n: usize, params: &Params<F>) -> Result<FunctorValue<F>> {
    bi_power(shape, n, params, true)
}

/// `∧^{(λ,μ)}`, as [`sym_bi`] with `-q` eigenvectors.
pub fn ext_bi<F: Field + Budget>(shape: &Bipartition, n: usize, params: &Params<F>) -> Result<FunctorValue<F>> {
    bi_power(shape, n, params, false)
}

fn bi_power<F: Field + Budget>(shape: &Bipartition, n: usize, params: &Params<F>, sym: bool) -> Result<FunctorValue<F>> {
    let d = check_shape(shape, n, params)?;
    check_budget::<F>(n, d, 1)?;
    let rep = TensorRep::new(n, d, params.clone());
    let eigen = if sym { params.q_inv.clone() } else { params.q.negate() };
    let (source, _) = row_pair(&rep, &shape.mu, &shape.lambda, &eigen)?;
    let p = rep.rho(&signed_element(shape.lambda.size(), shape.mu.size(), params)?)?;
    let kind = if sym { FunctorKind::SymBi(shape.clone()) } else { FunctorKind::ExtBi(shape.clone()) };
    Ok(FunctorValue::sub(kind, n, d, source.apply(&p)?))
}

/// `S_{(λ,μ)}(V_n)` computed along the defining diagram:
/// `∧^{μ'}_- ⊗ ∧^{λ'}` (the image of the explicit `ι` inclusions) is carried
/// by `u_b^- T_{b,a} u_a^+` onto `∧^{(λ',μ')}`, conjugated by
/// `T_{c(λ)^-1} ⊗ T_{c(μ)^-1}`, and projected to `S^λ ⊗ S^μ` along the
/// `-q` eigenspaces of the row generators.
pub fn schur_functor<F: Field + Budget>(shape: &Bipartition, n: usize, params: &Params<F>) -> Result<FunctorValue<F>> {
    let d = check_shape(shape, n, params)?;
    check_budget::<F>(n, d, 1)?;
    let (a, b) = (shape.lambda.size(), shape.mu.size());
    let rep = TensorRep::new(n, d, params.clone());
    let mut columns = shape.mu.conjugate().parts().to_vec();
    columns.extend_from_slice(shape.lambda.conjugate().parts());
    let wedge_in = iota_subspace(n, &columns, params);
    let p = rep.rho(&signed_element(a, b, params)?)?;
    let wedge = wedge_in.apply(&p)?;
    let conjugated = wedge.apply(&conjugation(&rep, shape)?)?;
    let (gamma, rel) = row_pair(&rep, &shape.lambda, &shape.mu, &params.q_inv)?;
    let projected = conjugated.sum(&rel)?.intersect(&gamma)?;
    Ok(FunctorValue::sub(FunctorKind::Schur(shape.clone()), n, d, projected))
}

/// The image of `ρ(e'_{λ,μ})`.
pub fn e_prime_image<F: Field + Budget>(shape: &Bipartition, n: usize, params: &Params<F>) -> Result<Subspace<F>> {
    let d = check_shape(shape, n, params)?;
    check_budget::<F>(n, d, 1)?;
    let h = HeckeAlgebra::new(d, params.clone());
    let rep = TensorRep::new(n, d, params.clone());
    Ok(image(&rep.rho(&h.e_prime(shape)?)?))
}

/// Checks that `ρ(e_λ)` on `V_n^{⊗|λ|}` has rank equal to the number of
/// semistandard tableaux of shape `λ` with entries at most `n`, for every
/// partition `λ` of size `1..=d`.
pub fn symmetrizer_self_test<F: Field + Budget>(n: usize, d: usize, params: &Params<F>) -> Result<()> {
    for k in 1..=d {
        check_budget::<F>(n, k, 1)?;
        let h = HeckeAlgebra::new(k, params.clone());
        let rep = TensorRep::new(n, k, params.clone());
        for lambda in Partition::all(k) {
            let rank = image(&rep.rho(&h.young_symmetrizer(&lambda)?)?).dim() as u64;
            let want = lambda.ssyt_count(n);
            if rank != want {
                return Err(Error::SymmetrizerValidationFailed(format!(
                    "rank of e_{lambda} on V_{n}^(⊗{k}) is {rank}, expected {want}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::pm::{pm_power, PmKind};
    use crate::schur::value::Presentation;
    use crate::scalars::{rational, GenericParams, Rational, RationalFunction, Specialization};

    fn at() -> Params<Rational> {
        Params::at(&Specialization::default_point(3))
    }

    fn bip(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::new(Partition::new(l.to_vec()).unwrap(), Partition::new(m.to_vec()).unwrap())
    }

    #[test]
    fn f_d_values() {
        let p = at();
        // (1/4 + 1/9)(1/4 + 1)(1/4 + 9)
        assert_eq!(f_d(2, &p), rational(2405, 576));
        assert_eq!(f_d(1, &p), rational(5, 4));
        assert_eq!(f_d(0, &p), rational(1, 1));
    }

    #[test]
    fn tensor_pm_degree_one() {
        let p = at();
        let dims = |n| {
            (
                tensor_pm(n, 1, Sign::Plus, &p).unwrap().dim(),
                tensor_pm(n, 1, Sign::Minus, &p).unwrap().dim(),
            )
        };
        assert_eq!(dims(2), (1, 1));
        assert_eq!(dims(3), (2, 1));
    }

    #[test]
    fn tensor_pm_matches_eigensplit() {
        let p = at();
        for (n, d) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
            let (pos, neg) = tensor_pm_eigensplit(n, d, &p).unwrap();
            let up = tensor_pm(n, d, Sign::Plus, &p).unwrap();
            let um = tensor_pm(n, d, Sign::Minus, &p).unwrap();
            assert_eq!(up.space, pos, "n={n} d={d}");
            assert_eq!(um.space, neg, "n={n} d={d}");
            assert!(up.dim() + um.dim() <= n.pow(d as u32));
        }
    }

    #[test]
    fn signed_tensor_extremes() {
        let p = at();
        for n in [2, 3] {
            let plus = tensor_pm(n, 2, Sign::Plus, &p).unwrap();
            assert_eq!(signed_tensor(2, 0, n, &p).unwrap().space, plus.space);
            let minus = tensor_pm(n, 2, Sign::Minus, &p).unwrap();
            assert_eq!(signed_tensor(0, 2, n, &p).unwrap().space, minus.space);
        }
        let st = signed_tensor(1, 1, 3, &p).unwrap();
        assert_eq!(st.dim(), 2);
        let sf = schur_functor(&bip(&[1], &[1]), 3, &p).unwrap();
        assert_eq!(st.space, sf.space);
    }

    #[test]
    fn iota_is_the_minus_q_eigenspace() {
        let p = at();
        for (n, cols) in [(3, vec![2]), (3, vec![2, 1]), (4, vec![1, 2]), (3, vec![3])] {
            let d: usize = cols.iter().sum();
            let rep = TensorRep::new(n, d, p.clone());
            let (gamma, _) = eigen_pair(&rep, &young_generators(&cols, 0), &p.q.negate()).unwrap();
            assert_eq!(iota_subspace(n, &cols, &p), gamma, "n={n} {cols:?}");
        }
    }

    #[test]
    fn extreme_schur_functors_are_pm_powers() {
        let p = at();
        for n in [2usize, 3, 4, 5] {
            for d in 1..=3 {
                if n.pow(d as u32) > 125 {
                    continue;
                }
                let row = Partition::new(vec![d]).unwrap();
                let col = row.conjugate();
                let e = Partition::empty();
                let cases = [
                    (Bipartition::new(row.clone(), e.clone()), PmKind::SymPlus),
                    (Bipartition::new(col.clone(), e.clone()), PmKind::ExtPlus),
                    (Bipartition::new(e.clone(), row.clone()), PmKind::SymMinus),
                    (Bipartition::new(e.clone(), col.clone()), PmKind::ExtMinus),
                ];
                for (shape, kind) in cases {
                    let sf = schur_functor(&shape, n, &p).unwrap();
                    let pm = pm_power(n, d, kind, Presentation::Sub, &p).unwrap();
                    assert_eq!(sf.space, pm.space, "n={n} {shape} vs {kind}");
                }
            }
        }
    }

    #[test]
    fn mixed_shape_dimensions() {
        let p = at();
        assert_eq!(schur_functor(&bip(&[1], &[1]), 5, &p).unwrap().dim(), 6);
        assert_eq!(schur_functor(&bip(&[1], &[1]), 3, &p).unwrap().dim(), 2);
    }

    #[test]
    fn schur_functor_sits_in_sym_bi() {
        let p = at();
        for shape in Bipartition::all(3) {
            let sf = schur_functor(&shape, 3, &p).unwrap();
            let sb = sym_bi(&shape, 3, &p).unwrap();
            assert!(sb.space.contains_subspace(&sf.space), "{shape}");
        }
    }

    #[test]
    fn ext_and_sym_bi_agree_for_single_boxes() {
        let p = at();
        let shape = bip(&[1], &[1]);
        let st = signed_tensor(1, 1, 5, &p).unwrap();
        assert_eq!(sym_bi(&shape, 5, &p).unwrap().space, st.space);
        assert_eq!(ext_bi(&shape, 5, &p).unwrap().space, st.space);
    }

    #[test]
    fn symmetrizer_self_test_passes() {
        symmetrizer_self_test(3, 3, &at()).unwrap();
        symmetrizer_self_test(2, 2, &RationalFunction::generic_params()).unwrap();
    }

    #[test]
    fn diagram_route_equals_young_symmetrizer_image() {
        let p = at();
        for (n, d) in [(5, 2), (3, 2), (2, 2), (3, 3)] {
            for shape in Bipartition::all(d) {
                let sf = schur_functor(&shape, n, &p).unwrap();
                let ep = e_prime_image(&shape, n, &p).unwrap();
                assert_eq!(sf.space, ep, "n={n} {shape}");
            }
        }
    }

    #[test]
    fn symbolic_schur_functor_dimension() {
        let g = RationalFunction::generic_params();
        let sf = schur_functor(&bip(&[1], &[1]), 3, &g).unwrap();
        assert_eq!(sf.dim(), 2);
    }
}
