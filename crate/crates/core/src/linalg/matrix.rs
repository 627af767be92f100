use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `y + a x` for sparse vectors.
pub fn sv_axpy<F: Ring>(y: &SparseVec<F>, a: &F, x: &SparseVec<F>) -> SparseVec<F> {
    if a.is_zero() {
        return y.clone();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j >= x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i >= y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, a.times(&x[j].1)));
            j += 1;
        } else {
            let v = y[i].1.plus(&a.times(&x[j].1));
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_scale<F: Ring>(x: &SparseVec<F>, a: &F) -> SparseVec<F> {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v.times(a))).collect()
}

pub fn sv_get<F: Ring>(x: &SparseVec<F>, i: usize) -> Option<&F> {
    x.binary_search_by_key(&i, |(k, _)| *k).ok().map(|k| &x[k].1)
}

/// Build a sparse vector from unsorted pairs, summing duplicates.
pub fn sv_from_pairs<F: Ring>(pairs: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut v: Vec<(usize, F)> = pairs.into_iter().collect();
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.plus(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Dense accumulator used by the sparse products.
struct Accumulator<F> {
    slots: Vec<Option<F>>,
    touched: Vec<usize>,
}

impl<F: Ring> Accumulator<F> {
    fn new(n: usize) -> Self {
        Self {
            slots: vec![None; n],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, i: usize, v: F) {
        match &mut self.slots[i] {
            Some(x) => *x = x.plus(&v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    fn drain(&mut self) -> SparseVec<F> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.slots[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

/// Sparse matrix with exact entries, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<F>>,
}

impl<F: Ring> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, c.clone())]).collect(),
        }
    }

    /// Build from `(row, col, value)` triples; duplicates are summed.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            if i >= rows || j >= cols {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({i}, {j}) outside {rows}x{cols}"
                )));
            }
            buckets[i].push((j, v));
        }
        Ok(Self {
            rows,
            cols,
            data: buckets.into_iter().map(sv_from_pairs).collect(),
        })
    }

    pub fn from_dense(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, v));
                }
            }
        }
        Self::from_entries(r, c, entries)
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec<F>]) -> Self {
        let mut data: Vec<SparseVec<F>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                data[*i].push((j, v.clone()));
            }
        }
        Self {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<F>>) -> Self {
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<F> {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[SparseVec<F>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        sv_get(&self.data[i], j).cloned().unwrap_or_else(F::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<F>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec<F>> {
        self.transpose().data
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let one = F::one();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| sv_axpy(a, &one, b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let m1 = F::one().negate();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| sv_axpy(a, &m1, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| sv_scale(r, c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().negate())
    }

    /// `self + c * Id`.
    pub fn add_scalar(&self, c: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("add_scalar needs a square matrix".into()));
        }
        self.add(&Self::scalar(self.rows, c.clone()))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut acc = Accumulator::new(rhs.cols);
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    acc.add(*j, a.times(b));
                }
            }
            data.push(acc.drain());
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Product of a list of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        F: 'a,
    {
        let mut it = factors.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::ShapeMismatch("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("pow needs a square matrix".into()));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut dense: Vec<Option<&F>> = vec![None; self.cols];
        for (i, x) in v {
            dense[*i] = Some(x);
        }
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut s = F::zero();
            let mut hit = false;
            for (j, a) in row {
                if let Some(x) = dense[*j] {
                    s = s.plus(&a.times(x));
                    hit = true;
                }
            }
            if hit && !s.is_zero() {
                out.push((i, s));
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`; the left factor is most significant.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for ra in &self.data {
            for rb in &rhs.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * rhs.cols + jb, a.times(b)));
                    }
                }
                data.push(row);
            }
        }
        Self {
            rows: self.rows * rhs.rows,
            cols: self.cols * rhs.cols,
            data,
        }
    }

    /// Apply a conversion to every entry.
    pub fn try_map<G: Ring>(&self, f: impl Fn(&F) -> Result<G>) -> Result<ExactMatrix<G>> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (j, v) in row {
                let w = f(v)?;
                if !w.is_zero() {
                    out.push((*j, w));
                }
            }
            data.push(out);
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Commutator `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// Row-major flattening as a sparse vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec<F> {
        self.entries()
            .map(|(i, j, v)| (i * self.cols + j, v.clone()))
            .collect()
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SparseVec<F>) -> Self {
        let mut data: Vec<SparseVec<F>> = vec![Vec::new(); rows];
        for (k, x) in v {
            data[k / cols].push((k % cols, x.clone()));
        }
        Self { rows, cols, data }
    }

    /// JSON form `{rows, cols, entries: [[r, c, "scalar"], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, j, v)| json!([i, j, v.to_string()]))
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("matrix json: {m}"));
        let rows = v["rows"].as_u64().ok_or_else(|| bad("rows"))? as usize;
        let cols = v["cols"].as_u64().ok_or_else(|| bad("cols"))? as usize;
        let mut entries = Vec::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let i = e[0].as_u64().ok_or_else(|| bad("row index"))? as usize;
            let j = e[1].as_u64().ok_or_else(|| bad("col index"))? as usize;
            let s = e[2].as_str().ok_or_else(|| bad("scalar"))?;
            entries.push((i, j, F::parse_scalar(s)?));
        }
        Self::from_entries(rows, cols, entries)
    }
}

impl<F: Ring> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  ({i}, {j}) = {v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, Rational};

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix<Rational> {
        ExactMatrix::from_dense(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rational(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiplication_matches_hand_computation() {
        let a = m(vec![vec![1, 2], vec![0, 1]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(vec![vec![2, 1], vec![1, 0]]));
        assert!(a.mul(&m(vec![vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn kron_orders_left_factor_first() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let i = ExactMatrix::<Rational>::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.get(0, 2), rational(1, 1));
        assert_eq!(k.get(1, 3), rational(1, 1));
        assert_eq!(k.get(0, 1), rational(0, 1));
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = m(vec![vec![1, -1], vec![2, 0]]);
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.sub(&a).unwrap().nnz(), 0);
    }

    #[test]
    fn json_round_trip() {
        let a = m(vec![vec![1, 0, -3], vec![0, 5, 0]]);
        let back = ExactMatrix::<Rational>::from_json(&a.to_json()).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn apply_and_flatten() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let v = vec![(1, rational(1, 1))];
        assert_eq!(a.apply(&v), vec![(0, rational(2, 1)), (1, rational(4, 1))]);
        assert_eq!(ExactMatrix::unflatten(2, 2, &a.flatten()), a);
    }
}
