use std::collections::HashMap;

use super::matrix::{sv_axpy, sv_scale, ExactMatrix, SparseVec};
use super::subspace::{kernel, Subspace};
use super::upoly::FieldPoly;
use crate::error::{Error, Result};
use crate::scalars::Field;

/// Minimal polynomial by searching for the first linear dependency among
/// `I, m, m^2, ...` (flattened).
pub fn minimal_polynomial<F: Field>(m: &ExactMatrix<F>) -> Result<FieldPoly<F>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("minimal polynomial needs a square matrix".into()));
    }
    let n = m.rows();
    // pivot -> (row with leading 1 at pivot, combination of powers)
    let mut rows: HashMap<usize, (SparseVec<F>, Vec<F>)> = HashMap::new();
    let mut power: ExactMatrix<F> = ExactMatrix::identity(n);
    for k in 0..=n {
        let mut v = power.flatten();
        let mut comb = vec![F::zero(); k + 1];
        comb[k] = F::one();
        loop {
            let Some((c, a)) = v.first().cloned() else {
                break;
            };
            match rows.get(&c) {
                Some((row, rc)) => {
                    let na = a.negate();
                    v = sv_axpy(&v, &na, row);
                    for (i, x) in rc.iter().enumerate() {
                        comb[i] = comb[i].plus(&na.times(x));
                    }
                }
                None => {
                    let ai = a.inv()?;
                    let row = sv_scale(&v, &ai);
                    let rc = comb.iter().map(|x| x.times(&ai)).collect();
                    rows.insert(c, (row, rc));
                    break;
                }
            }
        }
        if v.is_empty() {
            return Ok(FieldPoly::new(comb));
        }
        power = power.mul(m)?;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Multiplicity of each candidate as a root of `p`.
///
/// Fails with `UnclassifiedEigenvalue` if a factor of positive degree is left
/// over after dividing out all candidate roots.
pub fn factor_over<F: Field>(p: &FieldPoly<F>, candidates: &[F]) -> Result<Vec<(F, usize)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    for c in candidates {
        let mut mult = 0;
        while rest.degree() > 0 && rest.eval(c).is_zero() {
            let (quo, rem) = rest.div_rem(&FieldPoly::linear(c))?;
            debug_assert!(rem.is_zero());
            rest = quo;
            mult += 1;
        }
        if mult > 0 {
            out.push((c.clone(), mult));
        }
    }
    if rest.degree() > 0 {
        return Err(Error::UnclassifiedEigenvalue {
            residual_degree: rest.degree(),
        });
    }
    Ok(out)
}

/// Generalized eigenspaces grouped into a positive and a negative class.
#[derive(Clone, Debug)]
pub struct EigenSplit<F> {
    pub positive: Subspace<F>,
    pub negative: Subspace<F>,
    /// `(eigenvalue, multiplicity in the minimal polynomial, is_positive)`.
    pub eigenvalues: Vec<(F, usize, bool)>,
}

/// Split `F^n` into the sums of generalized eigenspaces of `m` whose
/// eigenvalues satisfy, respectively fail, `is_positive`.
pub fn generalized_eigensplit<F: Field>(
    m: &ExactMatrix<F>,
    candidates: &[F],
    is_positive: impl Fn(&F) -> bool,
) -> Result<EigenSplit<F>> {
    let p = minimal_polynomial(m)?;
    let roots = factor_over(&p, candidates)?;
    let mut pos = FieldPoly::one();
    let mut neg = FieldPoly::one();
    let mut eigenvalues = Vec::new();
    for (r, k) in roots {
        let positive = is_positive(&r);
        let f = FieldPoly::linear(&r).pow(k);
        if positive {
            pos = pos.mul(&f);
        } else {
            neg = neg.mul(&f);
        }
        eigenvalues.push((r, k, positive));
    }
    let positive = kernel(&pos.eval_matrix(m)?);
    let negative = kernel(&neg.eval_matrix(m)?);
    Ok(EigenSplit {
        positive,
        negative,
        eigenvalues,
    })
}
