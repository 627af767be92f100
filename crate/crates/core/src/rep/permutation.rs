use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::tensor::TensorRep;
use crate::error::{Error, Result};
use crate::linalg::{rank, sv_from_pairs, ExactMatrix, SparseVec, Subspace};
use crate::scalars::{Field, Params, Ring};
use crate::weyl::{shift_center, shift_pair, Composition, TensorIndex};

/// `V(a)`: the span of the `v_{wa}` in `V_n^{⊗d}`, with the generators
/// restricted to the orbit basis (dominant representative first).
#[derive(Clone, Debug)]
pub struct PermutationModule<F: Ring> {
    pub index: TensorIndex,
    pub orbit: Vec<TensorIndex>,
    pub gens: Vec<ExactMatrix<F>>,
}

impl<F: Ring> PermutationModule<F> {
    pub fn new(a: &TensorIndex, params: &Params<F>) -> Result<Self> {
        let (n, d) = (a.n(), a.degree());
        let rep = TensorRep::new(n, d, params.clone());
        let orbit = a.orbit();
        let pos: HashMap<usize, usize> = orbit.iter().enumerate().map(|(k, b)| (b.flat(), k)).collect();
        let m = orbit.len();
        let mut gens = Vec::with_capacity(d);
        for i in 0..d {
            let mut entries = Vec::new();
            for (k, b) in orbit.iter().enumerate() {
                for (flat, c) in rep.basis_image(i, b.flat()) {
                    let row = *pos.get(&flat).ok_or_else(|| {
                        Error::ConsistencyFailure(format!("T_{i} leaves the orbit of {a}"))
                    })?;
                    entries.push((row, k, c));
                }
            }
            gens.push(ExactMatrix::from_entries(m, m, entries)?);
        }
        Ok(Self {
            index: a.clone(),
            orbit,
            gens,
        })
    }

    pub fn dim(&self) -> usize {
        self.orbit.len()
    }

    /// Flat positions of the orbit basis in `V_n^{⊗d}`.
    pub fn flats(&self) -> Vec<usize> {
        self.orbit.iter().map(TensorIndex::flat).collect()
    }
}

impl<F: Field> PermutationModule<F> {
    /// The coordinate subspace of `V_n^{⊗d}`.
    pub fn subspace(&self) -> Subspace<F> {
        let n = self.index.n().pow(self.index.degree() as u32);
        Subspace::coordinate(n, &self.flats())
    }
}

/// How zero parts are inserted into a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AddZeros {
    /// Zeros at `±j` (doubled `j`), `n -> n + 2`.
    Pair(i32),
    /// One zero at the centre, `n -> n + 1` for `n` even.
    Center,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddZerosReport {
    pub source: String,
    pub target: String,
    pub dim: usize,
    /// The index-shift bijection matches the orbits and commutes with every generator.
    pub intertwines: bool,
}

/// Check that the index shift `a(θ) -> a(θ')` is an isomorphism of
/// `H^B(d)`-modules `V(a(θ), n) -> V(a(θ'), n')`, as a permutation matrix
/// intertwining the restricted generators.
pub fn add_zeros_check<F: Ring>(theta: &Composition, how: AddZeros, params: &Params<F>) -> Result<AddZerosReport> {
    let (target, shift): (Composition, Box<dyn Fn(i32) -> i32>) = match how {
        AddZeros::Pair(j) => (theta.add_zero_pair(j)?, Box::new(move |t| shift_pair(t, j))),
        AddZeros::Center => (theta.add_zero_center()?, Box::new(shift_center)),
    };
    let a = theta.to_index()?;
    let b = target.to_index()?;
    let src = PermutationModule::new(&a, params)?;
    let dst = PermutationModule::new(&b, params)?;
    let report = |intertwines| AddZerosReport {
        source: format!("{theta}@{}", theta.n()),
        target: format!("{target}@{}", target.n()),
        dim: src.dim(),
        intertwines,
    };
    if a.map_values(target.n(), &shift)? != b || src.dim() != dst.dim() {
        return Ok(report(false));
    }
    let pos: HashMap<TensorIndex, usize> = dst.orbit.iter().cloned().zip(0..).collect();
    let mut entries = Vec::with_capacity(src.dim());
    for (k, x) in src.orbit.iter().enumerate() {
        match pos.get(&x.map_values(target.n(), &shift)?) {
            Some(&r) => entries.push((r, k, F::one())),
            None => return Ok(report(false)),
        }
    }
    let p = ExactMatrix::from_entries(dst.dim(), src.dim(), entries)?;
    for (g, h) in src.gens.iter().zip(&dst.gens) {
        if p.mul(g)? != h.mul(&p)? {
            return Ok(report(false));
        }
    }
    Ok(report(true))
}

/// The map `V(a) -> V_N^{⊗d}` sending `v_a` to
/// `v̄_a = Σ_w Q^{-l_0(w)} q^{-l_1(w)} v_{w(1/2,...,1/2)} ⊗ v_{a_{i+1}+1/2} ⊗ ... ⊗ v_{a_d+1/2}`,
/// `w` over minimal coset representatives of `W^B(i) / Stab(1/2,...,1/2)`
/// where `i` is the number of zeros in `a`.
#[derive(Clone, Debug)]
pub struct BarvEmbedding<F: Ring> {
    pub source: PermutationModule<F>,
    pub target_n: usize,
    pub barv: SparseVec<F>,
    /// Column `k` is the image of the `k`-th orbit basis vector.
    pub matrix: ExactMatrix<F>,
    target: TensorRep<F>,
}

impl<F: Ring> BarvEmbedding<F> {
    pub fn new(a: &TensorIndex, target_n: usize, params: &Params<F>) -> Result<Self> {
        let d = a.degree();
        if a.n() % 2 == 0 || !a.is_dominant() {
            return Err(Error::InvalidIndex(format!(
                "{a} must be a dominant index with integer entries"
            )));
        }
        if target_n % 2 != 0 {
            return Err(Error::InvalidIndex(format!("target n = {target_n} must be even")));
        }
        let zeros = a.doubled().iter().take_while(|&&t| t == 0).count();
        let tail: Vec<i32> = a.doubled()[zeros..].iter().map(|t| t + 1).collect();
        if tail.iter().any(|&t| t > target_n as i32 - 1) {
            return Err(Error::InvalidIndex(format!("{a} does not fit in I_{target_n}")));
        }
        let target = TensorRep::new(target_n, d, params.clone());
        let mut terms = Vec::new();
        if zeros == 0 {
            terms.push((TensorIndex::from_doubled(target_n, tail.clone())?.flat(), F::one()));
        } else {
            let half = TensorIndex::from_doubled(target_n, vec![1; zeros])?;
            for (b, l0, l1) in half.orbit_lengths() {
                let mut v = b.doubled().to_vec();
                v.extend_from_slice(&tail);
                let c = params.big_q_inv.pow(l0 as u32).times(&params.q_inv.pow(l1 as u32));
                terms.push((TensorIndex::from_doubled(target_n, v)?.flat(), c));
            }
        }
        let barv = sv_from_pairs(terms);
        let source = PermutationModule::new(a, params)?;
        // Extend along generators acting as pure relabelings v_b -> v_{sb}.
        let pos: HashMap<usize, usize> = source.flats().into_iter().zip(0..).collect();
        let src_rep = TensorRep::new(a.n(), d, params.clone());
        let mut images: Vec<Option<SparseVec<F>>> = vec![None; source.dim()];
        images[0] = Some(barv.clone());
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let flat = source.orbit[k].flat();
            for s in 0..d {
                let img = src_rep.basis_image(s, flat);
                if img.len() != 1 || img[0].0 == flat || !img[0].1.is_one() {
                    continue;
                }
                let t = pos[&img[0].0];
                if images[t].is_none() {
                    images[t] = Some(target.apply_generator(s, images[k].as_ref().unwrap()));
                    queue.push_back(t);
                }
            }
        }
        let cols = images
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::ConsistencyFailure(format!("orbit of {a} not reached by relabelings"))))
            .collect::<Result<Vec<_>>>()?;
        let matrix = ExactMatrix::from_columns(target.dim(), &cols);
        Ok(Self {
            source,
            target_n,
            barv,
            matrix,
            target,
        })
    }

    /// `rho_N(T_s) Φ = Φ rho_a(T_s)` for every generator.
    pub fn is_equivariant(&self) -> Result<bool> {
        for (s, g) in self.source.gens.iter().enumerate() {
            if self.target.generator(s).mul(&self.matrix)? != self.matrix.mul(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<F: Field> BarvEmbedding<F> {
    pub fn is_injective(&self) -> bool {
        rank(&self.matrix) == self.source.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::laurent_params;
    use crate::scalars::{GenericParams, LaurentPoly2, RationalFunction};

    type L = LaurentPoly2;

    fn idx(n: usize, v: &[i32]) -> TensorIndex {
        TensorIndex::from_doubled(n, v.iter().map(|x| 2 * x).collect()).unwrap()
    }

    #[test]
    fn permutation_module_examples() {
        let p = laurent_params();
        assert_eq!(PermutationModule::new(&idx(3, &[0, 1]), &p).unwrap().dim(), 4);
        let fixed = PermutationModule::new(&idx(3, &[0, 0]), &p).unwrap();
        assert_eq!(fixed.dim(), 1);
        assert_eq!(fixed.gens[0], ExactMatrix::scalar(1, L::monomial(1, -1, 0)));
        assert_eq!(fixed.gens[1], ExactMatrix::scalar(1, L::monomial(1, 0, -1)));
    }

    #[test]
    fn add_zeros_fixtures() {
        let p = laurent_params();
        let cases = [
            (vec![2, 1, 2], AddZeros::Pair(2), "(2,0,1,0,2)@5"),
            (vec![1, 1, 0, 1], AddZeros::Center, "(1,1,0,0,1)@5"),
            (vec![2, 1, 3], AddZeros::Pair(2), "(2,0,1,0,3)@5"),
        ];
        for (parts, how, target) in cases {
            let r = add_zeros_check(&Composition::new(parts), how, &p).unwrap();
            assert!(r.intertwines, "{r:?}");
            assert_eq!(r.target, target);
        }
    }

    #[test]
    fn barv_degree_one() {
        let p = laurent_params();
        let e = BarvEmbedding::new(&idx(3, &[0]), 2, &p).unwrap();
        // v_{1/2} + Q^-1 v_{-1/2}; basis of V_2 is v_-1/2, v_1/2
        assert_eq!(e.barv, vec![(0, L::monomial(1, -1, 0)), (1, L::one())]);
        assert!(e.is_equivariant().unwrap());
    }

    #[test]
    fn barv_degree_two_zeros() {
        let p = laurent_params();
        let e = BarvEmbedding::new(&idx(3, &[0, 0]), 2, &p).unwrap();
        assert_eq!(e.barv.len(), 4);
        let rep = TensorRep::new(2, 2, p.clone());
        assert_eq!(rep.apply_generator(0, &e.barv), crate::linalg::sv_scale(&e.barv, &L::monomial(1, -1, 0)));
        assert_eq!(rep.apply_generator(1, &e.barv), crate::linalg::sv_scale(&e.barv, &L::monomial(1, 0, -1)));
    }

    #[test]
    fn barv_without_zeros_is_a_shift() {
        let p = laurent_params();
        let e = BarvEmbedding::new(&idx(3, &[1, 1]), 4, &p).unwrap();
        assert_eq!(e.barv, vec![(TensorIndex::from_doubled(4, vec![3, 3]).unwrap().flat(), L::one())]);
        assert!(e.matrix.entries().all(|(_, _, c)| c.is_one()));
    }

    #[test]
    fn barv_is_injective_and_equivariant_up_to_degree_two() {
        let p = RationalFunction::generic_params();
        for a in [idx(3, &[0]), idx(3, &[1]), idx(3, &[0, 0]), idx(3, &[0, 1]), idx(3, &[1, 1]), idx(5, &[0, 2])] {
            let e = BarvEmbedding::new(&a, 6, &p).unwrap();
            assert!(e.is_equivariant().unwrap(), "{a}");
            assert!(e.is_injective(), "{a}");
        }
        assert!(BarvEmbedding::new(&idx(3, &[1, 0]), 4, &p).is_err());
        assert!(BarvEmbedding::new(&idx(3, &[1]), 3, &p).is_err());
    }
}
