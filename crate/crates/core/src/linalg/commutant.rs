use super::matrix::{sv_from_pairs, ExactMatrix, SparseVec};
use super::rref::{row_reduce, Echelon};
use crate::error::{Error, Result};
use crate::scalars::Field;

/// Linear system for `phi a_k = b_k phi` with unknown `phi` of shape
/// `dim_b x dim_a`; unknown `(i, j)` has index `i * dim_a + j`.
fn sylvester_system<F: Field>(
    gens_a: &[ExactMatrix<F>],
    gens_b: &[ExactMatrix<F>],
) -> Result<(usize, usize, Echelon<F>)> {
    if gens_a.len() != gens_b.len() {
        return Err(Error::ShapeMismatch("generator lists differ in length".into()));
    }
    let da = gens_a.first().map_or(0, |g| g.rows());
    let db = gens_b.first().map_or(0, |g| g.rows());
    for (a, b) in gens_a.iter().zip(gens_b) {
        if !a.is_square() || !b.is_square() || a.rows() != da || b.rows() != db {
            return Err(Error::ShapeMismatch("inconsistent generator shapes".into()));
        }
    }
    let mut rows: Vec<SparseVec<F>> = Vec::new();
    for (a, b) in gens_a.iter().zip(gens_b) {
        let a_cols = a.columns();
        for i in 0..db {
            let b_row = b.row(i);
            for (j, a_col) in a_cols.iter().enumerate() {
                // (phi a)_{ij} = sum_l phi_{il} a_{lj};  (b phi)_{ij} = sum_l b_{il} phi_{lj}
                let mut terms: Vec<(usize, F)> = Vec::with_capacity(a_col.len() + b_row.len());
                for (l, x) in a_col {
                    terms.push((i * da + l, x.clone()));
                }
                for (l, x) in b_row {
                    terms.push((l * da + j, x.negate()));
                }
                let row = sv_from_pairs(terms);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    Ok((da, db, row_reduce(rows, da * db)))
}

/// Basis of `{phi : phi a_k = b_k phi for all k}`.
pub fn intertwiner_basis<F: Field>(
    gens_a: &[ExactMatrix<F>],
    gens_b: &[ExactMatrix<F>],
) -> Result<Vec<ExactMatrix<F>>> {
    let (da, db, ech) = sylvester_system(gens_a, gens_b)?;
    Ok(ech
        .null_space()
        .iter()
        .map(|v| ExactMatrix::unflatten(db, da, v))
        .collect())
}

pub fn intertwiner_dim<F: Field>(
    gens_a: &[ExactMatrix<F>],
    gens_b: &[ExactMatrix<F>],
) -> Result<usize> {
    let (da, db, ech) = sylvester_system(gens_a, gens_b)?;
    Ok(da * db - ech.rank())
}

/// Basis of the matrices commuting with every generator.
pub fn commutant_basis<F: Field>(gens: &[ExactMatrix<F>]) -> Result<Vec<ExactMatrix<F>>> {
    intertwiner_basis(gens, gens)
}

pub fn commutant_dim<F: Field>(gens: &[ExactMatrix<F>]) -> Result<usize> {
    intertwiner_dim(gens, gens)
}

/// Basis of the unital algebra generated by `gens`, as flattened matrices.
pub fn generated_algebra<F: Field>(n: usize, gens: &[ExactMatrix<F>]) -> Result<Vec<ExactMatrix<F>>> {
    let mut basis: Vec<ExactMatrix<F>> = vec![ExactMatrix::identity(n)];
    let mut span = row_reduce(vec![basis[0].flatten()], n * n);
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = g.mul(x)?;
                if !span.reduce(&y.flatten()).is_empty() {
                    let mut rows = span.rows.clone();
                    rows.push(y.flatten());
                    span = row_reduce(rows, n * n);
                    basis.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, Rational};

    fn diag(d: &[i64]) -> ExactMatrix<Rational> {
        ExactMatrix::from_entries(
            d.len(),
            d.len(),
            d.iter().enumerate().map(|(i, x)| (i, i, rational(*x, 1))),
        )
        .unwrap()
    }

    #[test]
    fn commutant_of_diagonal_matrix() {
        // eigenvalue multiplicities 2 and 1 give 2^2 + 1^2 = 5
        let g = diag(&[1, 1, 2]);
        assert_eq!(commutant_dim(&[g.clone()]).unwrap(), 5);
        let basis = commutant_basis(&[g.clone()]).unwrap();
        assert_eq!(basis.len(), 5);
        for x in &basis {
            assert!(x.commutator(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn intertwiners_between_different_modules() {
        let a = diag(&[1, 2]);
        let b = diag(&[2, 3, 2]);
        assert_eq!(intertwiner_dim(&[a.clone()], &[b.clone()]).unwrap(), 2);
        for phi in intertwiner_basis(&[a.clone()], &[b.clone()]).unwrap() {
            assert_eq!(phi.mul(&a).unwrap(), b.mul(&phi).unwrap());
        }
    }

    #[test]
    fn algebra_generated_by_diagonal_matrix() {
        let g = diag(&[1, 2, 2, 3]);
        assert_eq!(generated_algebra(4, &[g]).unwrap().len(), 3);
    }
}
