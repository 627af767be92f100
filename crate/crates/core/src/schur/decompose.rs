use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::algebra::schur_algebra;
use super::functor::schur_functor;
use super::{check_budget, Budget};
use crate::error::{Error, Result};
use crate::linalg::{intertwiner_dim, ExactMatrix, Subspace};
use crate::scalars::{Field, Params, Rational, Specialization};
use crate::weyl::Bipartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SWRow {
    pub shape: Bipartition,
    #[serde(rename = "dimL")]
    pub dim_l: usize,
    #[serde(rename = "dimM")]
    pub dim_m: usize,
}

/// The decomposition `V_n^{⊗d} = ⊕ L_{λ,μ}(n) ⊗ M_{λ,μ}` as dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SWReport {
    pub n: usize,
    pub d: usize,
    pub backend: String,
    pub rows: Vec<SWRow>,
    pub sum_ld: usize,
    pub sum_l2: usize,
    pub schur_algebra_dim: usize,
}

impl SWReport {
    /// `Σ dimL dimM = n^d`.
    pub fn sum_ld_ok(&self) -> bool {
        self.sum_ld == self.n.pow(self.d as u32)
    }

    /// `Σ dimL^2 = dim S^B(n; d)`.
    pub fn sum_l2_ok(&self) -> bool {
        self.sum_l2 == self.schur_algebra_dim
    }

    pub fn pass(&self) -> bool {
        self.sum_ld_ok() && self.sum_l2_ok()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "lambda": r.shape.lambda.to_string(),
                    "mu": r.shape.mu.to_string(),
                    "dimL": r.dim_l,
                    "dimM": r.dim_m,
                })
            })
            .collect();
        json!({
            "n": self.n,
            "d": self.d,
            "backend": self.backend,
            "rows": rows,
            "checks": { "sumLd": self.sum_ld_ok(), "sumL2": self.sum_l2_ok() },
        })
    }
}

/// Schur functor dimensions, standard bitableaux counts and the Schur
/// algebra dimension, without asserting the identities between them.
pub fn schur_weyl_table<F: Field + Budget>(n: usize, d: usize, params: &Params<F>, backend: &str) -> Result<SWReport> {
    check_budget::<F>(n, d, 1)?;
    let shapes = Bipartition::all(d);
    let dims = shapes
        .par_iter()
        .map(|s| schur_functor(s, n, params).map(|v| v.dim()))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<SWRow> = shapes
        .into_iter()
        .zip(dims)
        .map(|(shape, dim_l)| {
            let dim_m = shape.standard_count() as usize;
            SWRow { shape, dim_l, dim_m }
        })
        .collect();
    let schur_algebra_dim = schur_algebra(n, n, d, params)?.dim();
    Ok(SWReport {
        n,
        d,
        backend: backend.to_string(),
        sum_ld: rows.iter().map(|r| r.dim_l * r.dim_m).sum(),
        sum_l2: rows.iter().map(|r| r.dim_l * r.dim_l).sum(),
        rows,
        schur_algebra_dim,
    })
}

/// [`schur_weyl_table`] at a specialization; fails if either identity breaks.
pub fn schur_weyl_decompose(n: usize, d: usize, s: &Specialization) -> Result<SWReport> {
    let report = schur_weyl_table(n, d, &Params::at(s), &s.to_string())?;
    if !report.pass() {
        return Err(Error::ConsistencyFailure(format!(
            "n={n}, d={d} at {s}: Σ dimL·dimM = {} (n^d = {}), Σ dimL² = {} (dim S = {})",
            report.sum_ld,
            n.pow(d as u32),
            report.sum_l2,
            report.schur_algebra_dim
        )));
    }
    Ok(report)
}

/// `dim Hom_S(L_i, L_j)` for the Schur functor subspaces under the Schur
/// algebra, at a specialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub n: usize,
    pub d: usize,
    pub point: String,
    pub shapes: Vec<String>,
    pub dims: Vec<usize>,
    /// `hom[i][j] = dim Hom(L_i, L_j)`.
    pub hom: Vec<Vec<usize>>,
}

impl IrreducibilityReport {
    pub fn pass(&self) -> bool {
        self.hom.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &h)| h == usize::from(i == j) || (self.dims[i] == 0 && self.dims[j] == 0 && h == 0))
        })
    }
}

pub fn irreducibility_report(n: usize, d: usize, s: &Specialization) -> Result<IrreducibilityReport> {
    let params = Params::at(s);
    let algebra = schur_algebra(n, n, d, &params)?;
    let shapes = Bipartition::all(d);
    let spaces: Vec<Subspace<Rational>> = shapes
        .par_iter()
        .map(|sh| schur_functor(sh, n, &params).map(|v| v.space))
        .collect::<Result<_>>()?;
    let restricted: Vec<Vec<ExactMatrix<Rational>>> = spaces
        .par_iter()
        .map(|sp| algebra.basis.iter().map(|m| sp.restrict(m)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let hom = (0..shapes.len())
        .into_par_iter()
        .map(|i| {
            (0..shapes.len())
                .map(|j| intertwiner_dim(&restricted[i], &restricted[j]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IrreducibilityReport {
        n,
        d,
        point: s.to_string(),
        shapes: shapes.iter().map(ToString::to_string).collect(),
        dims: spaces.iter().map(Subspace::dim).collect(),
        hom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Specialization {
        Specialization::default_point(3)
    }

    #[test]
    fn n5_d2_table() {
        let r = schur_weyl_decompose(5, 2, &s()).unwrap();
        let l: Vec<usize> = r.rows.iter().map(|r| r.dim_l).collect();
        let m: Vec<usize> = r.rows.iter().map(|r| r.dim_m).collect();
        assert_eq!(l, vec![6, 3, 3, 1, 6]);
        assert_eq!(m, vec![1, 1, 1, 1, 2]);
        assert_eq!(r.sum_ld, 25);
        let j = r.to_json();
        assert_eq!(j["checks"]["sumLd"], true);
        assert_eq!(j["rows"][4]["lambda"], "1");
    }

    #[test]
    fn degree_one_and_trivial() {
        let r = schur_weyl_decompose(5, 1, &s()).unwrap();
        let l: Vec<usize> = r.rows.iter().map(|r| r.dim_l).collect();
        assert_eq!(l, vec![3, 2]);
        let t = schur_weyl_decompose(1, 1, &s()).unwrap();
        assert_eq!(t.rows.iter().filter(|r| r.dim_l > 0).count(), 1);
    }

    #[test]
    fn dim_l_matches_semistandard_counts() {
        for (n, d) in [(3, 2), (4, 2), (5, 2), (3, 3)] {
            let r = schur_weyl_table(n, d, &Params::at(&s()), "t").unwrap();
            for row in &r.rows {
                assert_eq!(row.dim_l as u64, row.shape.semistandard_count(n).unwrap(), "n={n} {}", row.shape);
            }
        }
    }

    #[test]
    fn irreducible_at_n5_d2_and_n3_d1() {
        let r = irreducibility_report(5, 2, &s()).unwrap();
        assert!(r.pass(), "{r:?}");
        let r1 = irreducibility_report(3, 1, &s()).unwrap();
        assert_eq!(r1.dims, vec![2, 1]);
        assert!(r1.pass());
    }
}
