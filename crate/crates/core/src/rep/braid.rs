use rayon::prelude::*;
use serde::Serialize;

use super::tensor::{k_matrix, r_matrix, TensorSpace};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalars::{Params, Ring};

/// R- and K-matrices of the tensor powers `V_n^{⊗a}`, built from `R_q` and
/// `K_Q` by
/// `R_{X⊗Y,Z} = (R_{X,Z} ⊗ Id_Y)(Id_X ⊗ R_{Y,Z})`,
/// `R_{X,Y⊗Z} = (Id_Y ⊗ R_{X,Z})(R_{X,Y} ⊗ Id_Z)` and
/// `K_{X⊗Y} = (K_X ⊗ Id_Y) R_{Y,X} (K_Y ⊗ Id_X) R_{X,Y}`.
#[derive(Clone, Debug)]
pub struct BlockBraid<F> {
    n: usize,
    params: Params<F>,
}

impl<F: Ring> BlockBraid<F> {
    pub fn new(n: usize, params: Params<F>) -> Self {
        Self { n, params }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn id(&self, a: usize) -> ExactMatrix<F> {
        ExactMatrix::identity(self.n.pow(a as u32))
    }

    /// `R_{V^{⊗a}, V^{⊗b}} : V^{⊗a} ⊗ V^{⊗b} -> V^{⊗b} ⊗ V^{⊗a}`.
    pub fn r(&self, a: usize, b: usize) -> Result<ExactMatrix<F>> {
        if a == 0 || b == 0 {
            return Ok(self.id(a + b));
        }
        if a == 1 && b == 1 {
            return Ok(r_matrix(self.n, &self.params));
        }
        if a > 1 {
            // X = V, Y = V^{⊗(a-1)}, Z = V^{⊗b}
            let outer = self.r(1, b)?.kron(&self.id(a - 1));
            let inner = self.id(1).kron(&self.r(a - 1, b)?);
            outer.mul(&inner)
        } else {
            // X = V, Y = V, Z = V^{⊗(b-1)}
            let outer = self.id(1).kron(&self.r(1, b - 1)?);
            let inner = self.r(1, 1)?.kron(&self.id(b - 1));
            outer.mul(&inner)
        }
    }

    /// `K_{V^{⊗a}}`, splitting off the last factor at each step.
    pub fn k(&self, a: usize) -> Result<ExactMatrix<F>> {
        match a {
            0 => Ok(self.id(0)),
            1 => Ok(k_matrix(self.n, &self.params)),
            _ => self.k_split(a - 1, 1),
        }
    }

    /// `K_{V^{⊗a} ⊗ V^{⊗b}}` from `K_{V^{⊗a}}` and `K_{V^{⊗b}}`.
    pub fn k_split(&self, a: usize, b: usize) -> Result<ExactMatrix<F>> {
        let kx = self.k(a)?.kron(&self.id(b));
        let ky = self.k(b)?.kron(&self.id(a));
        ExactMatrix::product([&kx, &self.r(b, a)?, &ky, &self.r(a, b)?])
    }

    /// `(R_{V,W}, R_{W,V}, K_{V⊗W})` for `V = V^{⊗a}`, `W = V^{⊗b}`.
    pub fn inductive(&self, v: TensorSpace, w: TensorSpace) -> Result<RkTriple<F>> {
        if v.n != self.n || w.n != self.n {
            return Err(Error::IncompatibleSpaces(format!(
                "spaces over V_{} and V_{} with R-matrix of V_{}",
                v.n, w.n, self.n
            )));
        }
        let (a, b) = (v.d * v.e, w.d * w.e);
        Ok(RkTriple {
            r_vw: self.r(a, b)?,
            r_wv: self.r(b, a)?,
            k_vw: self.k_split(a, b)?,
        })
    }

    /// Both sides of the Yang-Baxter equation on `U ⊗ V ⊗ W`, with
    /// `U, V, W = V^{⊗a}, V^{⊗b}, V^{⊗c}`:
    /// `(R_{V,W} ⊗ 1)(1 ⊗ R_{U,W})(R_{U,V} ⊗ 1) = (1 ⊗ R_{U,V})(R_{U,W} ⊗ 1)(1 ⊗ R_{V,W})`.
    pub fn ybe_sides(&self, a: usize, b: usize, c: usize) -> Result<(ExactMatrix<F>, ExactMatrix<F>)> {
        let lhs = ExactMatrix::product([
            &self.r(b, c)?.kron(&self.id(a)),
            &self.id(b).kron(&self.r(a, c)?),
            &self.r(a, b)?.kron(&self.id(c)),
        ])?;
        let rhs = ExactMatrix::product([
            &self.id(c).kron(&self.r(a, b)?),
            &self.r(a, c)?.kron(&self.id(b)),
            &self.id(a).kron(&self.r(b, c)?),
        ])?;
        Ok((lhs, rhs))
    }

    /// Both sides of the reflection equation on `V ⊗ W`:
    /// `(K_V ⊗ 1) R_{W,V} (K_W ⊗ 1) R_{V,W} = R_{W,V} (K_W ⊗ 1) R_{V,W} (K_V ⊗ 1)`.
    /// With `replace_kw`, `K_W` is replaced by the identity.
    pub fn reflection_sides(
        &self,
        a: usize,
        b: usize,
        replace_kw: bool,
    ) -> Result<(ExactMatrix<F>, ExactMatrix<F>)> {
        let kv = self.k(a)?.kron(&self.id(b));
        let kw = if replace_kw { self.id(a + b) } else { self.k(b)?.kron(&self.id(a)) };
        let (r_vw, r_wv) = (self.r(a, b)?, self.r(b, a)?);
        let lhs = ExactMatrix::product([&kv, &r_wv, &kw, &r_vw])?;
        let rhs = ExactMatrix::product([&r_wv, &kw, &r_vw, &kv])?;
        Ok((lhs, rhs))
    }

    /// Matrices of `T_{w_0}, ..., T_{w_{d-1}}` on `(V_n^{⊗e})^{⊗d}`:
    /// `T_{w_0}` acts by `K_{V^{⊗e}}` on the first block and `T_{w_i}` by
    /// `R_{V^{⊗e}, V^{⊗e}}` on blocks `i, i+1`.
    pub fn e_hecke_generators(&self, d: usize, e: usize) -> Result<Vec<ExactMatrix<F>>> {
        if e == 0 {
            return Err(Error::OutOfRange("block size must be positive".into()));
        }
        let mut out = Vec::with_capacity(d);
        if d == 0 {
            return Ok(out);
        }
        out.push(self.k(e)?.kron(&self.id(e * (d - 1))));
        let rb = self.r(e, e)?;
        for i in 1..d {
            let left = self.id(e * (i - 1));
            let right = self.id(e * (d - i - 1));
            out.push(left.kron(&rb).kron(&right));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct RkTriple<F: Ring> {
    pub r_vw: ExactMatrix<F>,
    pub r_wv: ExactMatrix<F>,
    pub k_vw: ExactMatrix<F>,
}

/// One cell of the equation sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RkCheck {
    pub equation: String,
    pub n: usize,
    pub blocks: Vec<usize>,
    /// Whether the two sides should agree; false for the negative control.
    pub expected: bool,
    pub holds: bool,
}

impl RkCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.holds
    }
}

/// YBE on all block triples, the reflection equation on all block pairs with
/// block sizes up to `max_blocks`, and the reflection equation with
/// `K_W = Id` as a negative control.
pub fn verify_rk_equations<F: Ring>(n: usize, max_blocks: usize, params: &Params<F>) -> Result<Vec<RkCheck>> {
    let bb = BlockBraid::new(n, params.clone());
    let mut cells = Vec::new();
    for a in 1..=max_blocks {
        for b in 1..=max_blocks {
            for c in 1..=max_blocks {
                cells.push(("ybe", vec![a, b, c], true));
            }
        }
    }
    for a in 1..=max_blocks {
        for b in 1..=max_blocks {
            cells.push(("reflection", vec![a, b], true));
        }
    }
    if n >= 2 {
        cells.push(("reflection with K_W = Id", vec![1, 1], false));
    }
    cells
        .into_par_iter()
        .map(|(eq, blocks, expected)| {
            let (lhs, rhs) = match eq {
                "ybe" => bb.ybe_sides(blocks[0], blocks[1], blocks[2])?,
                "reflection" => bb.reflection_sides(blocks[0], blocks[1], false)?,
                _ => bb.reflection_sides(blocks[0], blocks[1], true)?,
            };
            Ok(RkCheck {
                equation: eq.to_string(),
                n,
                blocks,
                expected,
                holds: lhs == rhs,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{laurent_params, HeckeAlgebra};
    use crate::rep::TensorRep;
    use crate::scalars::LaurentPoly2;
    use crate::weyl::{block_swap, block_w0, w_ab};

    fn bb(n: usize) -> BlockBraid<LaurentPoly2> {
        BlockBraid::new(n, laurent_params())
    }

    #[test]
    fn trivial_blocks_give_identity() {
        let b = bb(3);
        assert_eq!(b.r(0, 2).unwrap(), ExactMatrix::identity(9));
        assert_eq!(b.r(2, 0).unwrap(), ExactMatrix::identity(9));
    }

    #[test]
    fn block_k_is_rho_of_c_k() {
        for n in 1..=4 {
            for d in 1..=3 {
                let h = HeckeAlgebra::laurent(d);
                let rep = TensorRep::for_algebra(n, &h);
                let ck = rep.rho(&h.c_k().unwrap()).unwrap();
                let b = bb(n);
                assert_eq!(b.k(d).unwrap(), ck, "n={n} d={d}");
                for p in 1..d {
                    assert_eq!(b.k_split(p, d - p).unwrap(), ck, "n={n} split {p}+{}", d - p);
                }
            }
        }
    }

    #[test]
    fn block_r_is_rho_of_w_ab() {
        for (a, b) in [(1, 2), (2, 1), (2, 2)] {
            let rep = TensorRep::new(2, a + b, laurent_params());
            assert_eq!(bb(2).r(a, b).unwrap(), rep.rho_basis(&w_ab(a, b)).unwrap(), "({a},{b})");
        }
    }

    #[test]
    fn equations_hold_and_control_fails() {
        for n in 1..=3 {
            for c in verify_rk_equations(n, 1, &laurent_params()).unwrap() {
                assert!(c.pass(), "{c:?}");
            }
        }
        let cells = verify_rk_equations(2, 2, &laurent_params()).unwrap();
        assert!(cells.iter().all(RkCheck::pass));
        assert!(cells.iter().any(|c| !c.expected));
    }

    #[test]
    fn inductive_rejects_other_spaces() {
        let err = bb(2).inductive(TensorSpace::new(3, 1), TensorSpace::new(2, 1)).unwrap_err();
        assert!(matches!(err, Error::IncompatibleSpaces(_)));
        let t = bb(2).inductive(TensorSpace::new(2, 1), TensorSpace::new(2, 1)).unwrap();
        assert_eq!(t.r_vw, r_matrix(2, &laurent_params()));
    }

    #[test]
    fn e_hecke_generators_match_block_words() {
        for (n, d, e) in [(2, 2, 2), (3, 1, 2), (2, 3, 1)] {
            let gens = bb(n).e_hecke_generators(d, e).unwrap();
            let rep = TensorRep::new(n, d * e, laurent_params());
            assert_eq!(gens[0], rep.rho_basis(&block_w0(e, d).unwrap()).unwrap());
            for i in 1..d {
                assert_eq!(gens[i], rep.rho_basis(&block_swap(i, e, d).unwrap()).unwrap());
            }
        }
    }
}
