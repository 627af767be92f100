use std::fmt;

use serde::{Serialize, Serializer};

use super::tensor_index::TensorIndex;
use crate::error::{Error, Result};

/// Element of the hyperoctahedral group `W^B(d)` in one-line notation:
/// `images[i - 1] = w(i)`, a signed value in `{±1, ..., ±d}`.
///
/// Generators: `s_0` negates 1, `s_i` swaps `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > d || seen[a - 1] {
                return Err(Error::InvalidShape(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            images: (1..=d as i32).collect(),
        }
    }

    /// `s_i` in `W^B(d)`, `0 <= i < d`.
    pub fn generator(i: usize, d: usize) -> Result<Self> {
        if i >= d {
            return Err(Error::OutOfRange(format!("s_{i} does not exist in W(B_{d})")));
        }
        let mut w = Self::identity(d);
        if i == 0 {
            w.images[0] = -1;
        } else {
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Signed image of a signed point.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            let s = if x < 0 { -1 } else { 1 };
            inv[x.unsigned_abs() as usize - 1] = s * (i as i32 + 1);
        }
        Self { images: inv }
    }

    /// Number of negative images.
    pub fn neg_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Ordinary inversions `i < j`, `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Pairs `i < j` with `w(i) + w(j) < 0`.
    pub fn negative_sum_pairs(&self) -> usize {
        let w = &self.images;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] + w[j] < 0 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Coxeter length `inv + neg + nsp`.
    pub fn length(&self) -> usize {
        self.inversions() + self.neg_count() + self.negative_sum_pairs()
    }

    /// Number of `s_0` in any reduced word.
    pub fn l0(&self) -> usize {
        self.neg_count()
    }

    /// Number of `s_i`, `i > 0`, in any reduced word.
    pub fn l1(&self) -> usize {
        self.length() - self.l0()
    }

    /// `self * s_i`: acts on positions.
    pub fn mul_generator_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        if i == 0 {
            w.images[0] = -w.images[0];
        } else {
            w.images.swap(i - 1, i);
        }
        w
    }

    /// `s_i * self`: acts on values.
    pub fn mul_generator_left(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                let (s, a) = (x.signum(), x.abs());
                if i == 0 {
                    if a == 1 {
                        -x
                    } else {
                        x
                    }
                } else if a == i as i32 {
                    s * (a + 1)
                } else if a == i as i32 + 1 {
                    s * (a - 1)
                } else {
                    x
                }
            })
            .collect();
        Self { images }
    }

    /// True if `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.images[0] < 0
        } else {
            self.images[i - 1] > self.images[i]
        }
    }

    /// True if `l(s_i * self) < l(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for i in 0..w.degree() {
                if w.has_right_descent(i) {
                    rev.push(i);
                    w = w.mul_generator_right(i);
                    continue 'outer;
                }
            }
            unreachable!("a non-identity element has a descent");
        }
        rev.reverse();
        rev
    }

    /// Product of generators `s_{i_1} ... s_{i_l}`.
    pub fn from_word(word: &[usize], d: usize) -> Result<Self> {
        let mut w = Self::identity(d);
        for &i in word {
            if i >= d {
                return Err(Error::OutOfRange(format!("s_{i} does not exist in W(B_{d})")));
            }
            w = w.mul_generator_right(i);
        }
        Ok(w)
    }

    /// All elements of `W^B(d)`, sorted.
    pub fn all(d: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=d as i32).collect();
        permutations(&mut perm, 0, &mut |p| {
            for signs in 0..(1u32 << d) {
                let images = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if signs >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.push(Self { images });
            }
        });
        out.sort();
        out
    }

    /// Unsigned permutations of `{1..d}`, i.e. the type A subgroup.
    pub fn all_unsigned(d: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=d as i32).collect();
        permutations(&mut perm, 0, &mut |p| out.push(Self { images: p.to_vec() }));
        out.sort();
        out
    }

    /// Embed into `W^B(d + extra)` fixing the new points.
    pub fn extend(&self, extra: usize) -> Self {
        let d = self.degree() as i32;
        let mut images = self.images.clone();
        images.extend(d + 1..=d + extra as i32);
        Self { images }
    }

    /// Embed an unsigned permutation of `{1..k}` acting on `{offset+1..offset+k}`
    /// into `W^B(d)`.
    pub fn shifted(&self, offset: usize, d: usize) -> Result<Self> {
        if self.images.iter().any(|&x| x < 0) {
            return Err(Error::InvalidShape("only unsigned permutations can be shifted".into()));
        }
        if offset + self.degree() > d {
            return Err(Error::OutOfRange("shifted permutation does not fit".into()));
        }
        let mut w = Self::identity(d);
        for (i, &x) in self.images.iter().enumerate() {
            w.images[offset + i] = x + offset as i32;
        }
        Ok(w)
    }

    /// `(w·a)_{|w(i)|} = sign(w(i)) a_i`.
    pub fn act(&self, a: &TensorIndex) -> Result<TensorIndex> {
        if a.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), a.degree()));
        }
        let mut out = vec![0; a.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = a.doubled()[i];
            out[x.unsigned_abs() as usize - 1] = if x < 0 { -v } else { v };
        }
        TensorIndex::from_doubled(a.n(), out)
    }

    /// Parse `[-1 2 3]` or `-1,2,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

fn permutations(p: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    /// Lengths by breadth-first search on the Cayley graph.
    fn bfs_lengths(d: usize) -> HashMap<SignedPermutation, usize> {
        let mut dist = HashMap::new();
        let id = SignedPermutation::identity(d);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let k = dist[&w];
            for i in 0..d {
                let v = w.mul_generator_right(i);
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), k + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn length_formula_matches_bfs() {
        for d in 1..=4 {
            let dist = bfs_lengths(d);
            assert_eq!(dist.len(), (1..=d).product::<usize>() << d);
            for (w, l) in &dist {
                assert_eq!(w.length(), *l, "{w}");
            }
        }
    }

    #[test]
    fn l0_counts_s0_in_reduced_words() {
        for w in SignedPermutation::all(3) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(word.iter().filter(|&&i| i == 0).count(), w.l0());
            assert_eq!(SignedPermutation::from_word(&word, 3).unwrap(), w);
        }
    }

    #[test]
    fn examples_from_one_line_notation() {
        let w = SignedPermutation::new(vec![1, -2]).unwrap();
        assert_eq!((w.length(), w.l0(), w.l1()), (3, 1, 2));
        let longest = SignedPermutation::new(vec![-1, -2]).unwrap();
        assert_eq!(longest.length(), 4);
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn left_and_right_generators() {
        let w = SignedPermutation::new(vec![2, -3, 1]).unwrap();
        for i in 0..3 {
            let s = SignedPermutation::generator(i, 3).unwrap();
            assert_eq!(w.mul_generator_right(i), w.compose(&s).unwrap());
            assert_eq!(w.mul_generator_left(i), s.compose(&w).unwrap());
            assert_eq!(
                w.has_left_descent(i),
                w.mul_generator_left(i).length() < w.length()
            );
        }
        assert_eq!(w.compose(&w.inverse()).unwrap(), SignedPermutation::identity(3));
    }

    #[test]
    fn action_is_a_left_action() {
        let a = TensorIndex::from_doubled(5, vec![2, 0, -4]).unwrap();
        let all = SignedPermutation::all(3);
        for v in all.iter().step_by(7) {
            for w in all.iter().step_by(5) {
                let lhs = v.compose(w).unwrap().act(&a).unwrap();
                let rhs = v.act(&w.act(&a).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = SignedPermutation::parse("[-1 2]").unwrap();
        assert_eq!(w.to_string(), "[-1 2]");
        assert_eq!(SignedPermutation::parse(&w.to_string()).unwrap(), w);
    }
}
