//! Sparse Gauss-Jordan elimination.
//!
//! Rows are split into independent blocks by the connected components of
//! their column supports before elimination, so block-diagonal systems
//! (which is what permutation-module structure produces) stay cheap.

use super::matrix::{sv_axpy, sv_get, sv_scale, SparseVec};
use crate::scalars::Field;

/// Reduced row echelon form: each row has a 1 in its pivot column, zeros in
/// every other pivot column, and its pivot is its first nonzero entry.
/// Rows are sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<F> {
    pub ncols: usize,
    pub rows: Vec<SparseVec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the pivots; returns the residual.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(a) = sv_get(&r, p).cloned() {
                r = sv_axpy(&r, &a.negate(), row);
            }
        }
        r
    }

    /// Basis of the null space `{x : row . x = 0 for every row}`.
    pub fn null_space(&self) -> Vec<SparseVec<F>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // For each free column, the pivot rows that mention it.
        let mut by_col: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.ncols];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (j, v) in row {
                if !is_pivot[*j] {
                    by_col[*j].push((p, v.negate()));
                }
            }
        }
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if is_pivot[f] {
                continue;
            }
            let mut v: SparseVec<F> = std::mem::take(&mut by_col[f]);
            v.push((f, F::one()));
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Row-reduce a single connected block.
fn eliminate<F: Field>(mut rows: Vec<SparseVec<F>>) -> Vec<(usize, SparseVec<F>)> {
    rows.sort_by_key(|r| (r.len(), r.iter().map(|(_, v)| v.weight()).sum::<usize>()));
    let mut basis: Vec<(usize, SparseVec<F>)> = Vec::new();
    let mut pivot_index: std::collections::HashMap<usize, usize> = Default::default();
    for row in rows {
        let mut r = row;
        // Pivot rows vanish on other pivot columns, so one pass suffices.
        let hits: Vec<(usize, F)> = r
            .iter()
            .filter(|(j, _)| pivot_index.contains_key(j))
            .map(|(j, v)| (*j, v.clone()))
            .collect();
        for (j, a) in hits {
            let k = pivot_index[&j];
            r = sv_axpy(&r, &a.negate(), &basis[k].1);
        }
        let Some((p, lead)) = r.first().cloned() else {
            continue;
        };
        let r = sv_scale(&r, &lead.inv().expect("nonzero pivot"));
        for (_, other) in basis.iter_mut() {
            if let Some(a) = sv_get(other, p).cloned() {
                *other = sv_axpy(other, &a.negate(), &r);
            }
        }
        pivot_index.insert(p, basis.len());
        basis.push((p, r));
    }
    basis
}

/// Reduced row echelon form of the span of `rows` in `F^ncols`.
pub fn row_reduce<F: Field>(rows: Vec<SparseVec<F>>, ncols: usize) -> Echelon<F> {
    let rows: Vec<SparseVec<F>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut uf = UnionFind::new(ncols);
    for r in &rows {
        let first = r[0].0;
        for (j, _) in r.iter().skip(1) {
            uf.union(first, *j);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<SparseVec<F>>> = Default::default();
    for r in rows {
        let root = uf.find(r[0].0);
        groups.entry(root).or_default().push(r);
    }
    let groups: Vec<Vec<SparseVec<F>>> = groups.into_values().collect();
    let reduced: Vec<Vec<(usize, SparseVec<F>)>> = if groups.len() > 8 {
        use rayon::prelude::*;
        groups.into_par_iter().map(eliminate).collect()
    } else {
        groups.into_iter().map(eliminate).collect()
    };
    let mut all: Vec<(usize, SparseVec<F>)> = reduced.into_iter().flatten().collect();
    all.sort_by_key(|(p, _)| *p);
    let (pivots, rows) = all.into_iter().unzip();
    Echelon { ncols, rows, pivots }
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
    fn rref_is_canonical() {
        let a = row_reduce(vec![sv(&[0, 1, 1]), sv(&[1, 1, 0])], 3);
        let b = row_reduce(vec![sv(&[1, 2, 1]), sv(&[2, 2, 0]), sv(&[1, 0, -1])], 3);
        assert_eq!(a, b);
        assert_eq!(a.pivots, vec![0, 1]);
        assert_eq!(a.rows[0], sv(&[1, 0, -1]));
    }

    #[test]
    fn null_space_is_annihilated() {
        let rows = vec![sv(&[1, 2, 0, 1]), sv(&[0, 0, 1, 1])];
        let e = row_reduce(rows.clone(), 4);
        let ns = e.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot: Rational = r
                    .iter()
                    .filter_map(|(j, a)| sv_get(v, *j).map(|b| a * b))
                    .sum();
                assert_eq!(dot, rational(0, 1));
            }
        }
    }

    #[test]
    fn independent_blocks_are_separated() {
        let rows = vec![sv(&[1, 1, 0, 0]), sv(&[0, 0, 2, 0]), sv(&[3, 3, 0, 0])];
        let e = row_reduce(rows, 4);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots, vec![0, 2]);
    }
}
