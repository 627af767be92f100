use serde_json::{json, Value};

use super::matrix::{sv_get, ExactMatrix, SparseVec};
use super::rref::{row_reduce, Echelon};
use crate::error::{Error, Result};
use crate::scalars::Field;

/// Subspace of `F^ambient`, stored by its reduced echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    echelon: Echelon<F>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: Vec<SparseVec<F>>) -> Self {
        Self {
            ambient,
            echelon: row_reduce(vectors, ambient),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| vec![(i, F::one())]).collect())
    }

    /// Span of the listed coordinate vectors.
    pub fn coordinate(ambient: usize, coords: &[usize]) -> Self {
        Self::span(ambient, coords.iter().map(|&i| vec![(i, F::one())]).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.echelon.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots()
                .iter()
                .map(|&p| sv_get(v, p).cloned().unwrap_or_else(F::zero))
                .collect(),
        )
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut vs = self.basis().to_vec();
        vs.extend(other.basis().iter().cloned());
        Ok(Self::span(self.ambient, vs))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let k = self.dim();
        // Columns: basis of self, then minus basis of other.
        let mut cols: Vec<SparseVec<F>> = self.basis().to_vec();
        cols.extend(other.basis().iter().map(|v| v.iter().map(|(i, x)| (*i, x.negate())).collect()));
        let m = ExactMatrix::from_columns(self.ambient, &cols);
        let ker = row_reduce(m.row_data().to_vec(), cols.len()).null_space();
        let vectors = ker
            .into_iter()
            .map(|c| combine(self.basis(), c.iter().filter(|(i, _)| *i < k)))
            .collect();
        Ok(Self::span(self.ambient, vectors))
    }

    /// `{x in self : a x = 0}`.
    pub fn intersect_kernel(&self, a: &ExactMatrix<F>) -> Result<Self> {
        if a.cols() != self.ambient {
            return Err(Error::ShapeMismatch("operator does not act on the ambient space".into()));
        }
        let images: Vec<SparseVec<F>> = self.basis().iter().map(|v| a.apply(v)).collect();
        let m = ExactMatrix::from_columns(a.rows(), &images);
        let ker = row_reduce(m.row_data().to_vec(), images.len()).null_space();
        let vectors = ker.into_iter().map(|c| combine(self.basis(), c.iter())).collect();
        Ok(Self::span(self.ambient, vectors))
    }

    /// Image of the subspace under `a`.
    pub fn apply(&self, a: &ExactMatrix<F>) -> Result<Self> {
        if a.cols() != self.ambient {
            return Err(Error::ShapeMismatch("operator does not act on the ambient space".into()));
        }
        Ok(Self::span(a.rows(), self.basis().iter().map(|v| a.apply(v)).collect()))
    }

    pub fn is_invariant(&self, a: &ExactMatrix<F>) -> bool {
        a.is_square()
            && a.cols() == self.ambient
            && self.basis().iter().all(|v| self.contains(&a.apply(v)))
    }

    /// Matrix of `a` restricted to this invariant subspace, in the stored basis.
    pub fn restrict(&self, a: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        let d = self.dim();
        let mut entries = Vec::new();
        for (j, v) in self.basis().iter().enumerate() {
            let w = a.apply(v);
            let c = self
                .coordinates(&w)
                .ok_or_else(|| Error::ShapeMismatch("subspace is not invariant".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((i, j, x));
                }
            }
        }
        ExactMatrix::from_entries(d, d, entries)
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> ExactMatrix<F> {
        ExactMatrix::from_columns(self.ambient, self.basis())
    }

    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis()
            .iter()
            .map(|v| Value::Array(v.iter().map(|(i, x)| json!([i, x.to_string()])).collect()))
            .collect();
        json!({"ambient": self.ambient, "dim": self.dim(), "basis": basis})
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::ShapeMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

fn combine<'a, F: Field>(
    basis: &[SparseVec<F>],
    coeffs: impl Iterator<Item = &'a (usize, F)>,
) -> SparseVec<F> {
    let mut acc: SparseVec<F> = Vec::new();
    for (i, c) in coeffs {
        acc = super::matrix::sv_axpy(&acc, c, &basis[*i]);
    }
    acc
}

/// Rank of a matrix.
pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    row_reduce(m.row_data().to_vec(), m.cols()).rank()
}

/// Null space `{x : m x = 0}`.
pub fn kernel<F: Field>(m: &ExactMatrix<F>) -> Subspace<F> {
    let ns = row_reduce(m.row_data().to_vec(), m.cols()).null_space();
    Subspace::span(m.cols(), ns)
}

/// Column space of a matrix.
pub fn image<F: Field>(m: &ExactMatrix<F>) -> Subspace<F> {
    Subspace::span(m.rows(), m.columns())
}

/// Common kernel of several operators on the same space.
pub fn joint_kernel<F: Field>(ambient: usize, ops: &[ExactMatrix<F>]) -> Result<Subspace<F>> {
    let mut rows = Vec::new();
    for op in ops {
        if op.cols() != ambient {
            return Err(Error::ShapeMismatch("operator does not act on the ambient space".into()));
        }
        rows.extend(op.row_data().iter().cloned());
    }
    Ok(Subspace::span(ambient, row_reduce(rows, ambient).null_space()))
}

/// Sum of the images of several operators.
pub fn joint_image<F: Field>(ambient: usize, ops: &[ExactMatrix<F>]) -> Result<Subspace<F>> {
    let mut cols = Vec::new();
    for op in ops {
        if op.rows() != ambient {
            return Err(Error::ShapeMismatch("operator does not land in the ambient space".into()));
        }
        cols.extend(op.columns());
    }
    Ok(Subspace::span(ambient, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, Rational};

    fn sv(v: &[i64]) -> SparseVec<Rational> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i, rational(*x, 1)))
            .collect()
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::span(3, vec![sv(&[1, 0, 0]), sv(&[0, 1, 0])]);
        let w = Subspace::span(3, vec![sv(&[0, 1, 0]), sv(&[0, 0, 1])]);
        let i = u.intersect(&w).unwrap();
        assert_eq!(i, Subspace::span(3, vec![sv(&[0, 5, 0])]));
        assert_eq!(u.sum(&w).unwrap(), Subspace::full(3));
    }

    #[test]
    fn kernel_and_image_dimensions_add_up() {
        let m = ExactMatrix::from_dense(vec![
            vec![rational(1, 1), rational(2, 1), rational(3, 1)],
            vec![rational(2, 1), rational(4, 1), rational(6, 1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(kernel(&m).dim(), 2);
        assert_eq!(image(&m).dim(), 1);
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        // swap of the first two coordinates preserves span(e0 + e1, e2)
        let p = ExactMatrix::from_dense(vec![
            vec![rational(0, 1), rational(1, 1), rational(0, 1)],
            vec![rational(1, 1), rational(0, 1), rational(0, 1)],
            vec![rational(0, 1), rational(0, 1), rational(2, 1)],
        ])
        .unwrap();
        let u = Subspace::span(3, vec![sv(&[1, 1, 0]), sv(&[0, 0, 1])]);
        assert!(u.is_invariant(&p));
        let r = u.restrict(&p).unwrap();
        assert_eq!(r.get(0, 0), rational(1, 1));
        assert_eq!(r.get(1, 1), rational(2, 1));
        let bad = Subspace::span(3, vec![sv(&[1, 0, 0])]);
        assert!(!bad.is_invariant(&p));
    }
}
