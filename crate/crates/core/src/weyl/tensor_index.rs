use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Doubled values of the index set `I_n`, ascending:
/// `-(n-1), -(n-3), ..., n-1`.
pub fn index_set(n: usize) -> Vec<i32> {
    let top = n as i32 - 1;
    (0..n as i32).map(|k| 2 * k - top).collect()
}

/// Position of a doubled index value in the ascending basis of `V_n`.
pub fn basis_position(n: usize, doubled: i32) -> Option<usize> {
    let k = doubled + n as i32 - 1;
    (k >= 0 && k % 2 == 0 && k / 2 < n as i32).then_some((k / 2) as usize)
}

/// Doubled index value at a basis position of `V_n`.
pub fn basis_value(n: usize, pos: usize) -> i32 {
    2 * pos as i32 - (n as i32 - 1)
}

/// A tuple `a = (a_1, ..., a_d)` of elements of `I_n`, stored doubled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorIndex {
    n: usize,
    doubled: Vec<i32>,
}

impl TensorIndex {
    pub fn from_doubled(n: usize, doubled: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex("n must be positive".into()));
        }
        if let Some(t) = doubled.iter().find(|&&t| basis_position(n, t).is_none()) {
            return Err(Error::InvalidIndex(format!(
                "{} is not in I_{n}",
                fmt_half(*t)
            )));
        }
        Ok(Self { n, doubled })
    }

    /// From basis positions (0-based, ascending order of values).
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self> {
        if let Some(p) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::InvalidIndex(format!("position {p} out of range for n = {n}")));
        }
        Self::from_doubled(n, positions.iter().map(|&p| basis_value(n, p)).collect())
    }

    /// Index of the basis tensor `v_{a_1} ⊗ ... ⊗ v_{a_d}`, left factor most significant.
    pub fn flat(&self) -> usize {
        self.doubled
            .iter()
            .fold(0, |acc, &t| acc * self.n + basis_position(self.n, t).unwrap())
    }

    pub fn from_flat(n: usize, d: usize, mut flat: usize) -> Self {
        let mut doubled = vec![0; d];
        for slot in doubled.iter_mut().rev() {
            *slot = basis_value(n, flat % n);
            flat /= n;
        }
        Self { n, doubled }
    }

    /// All `n^d` indices in flat order.
    pub fn all(n: usize, d: usize) -> Vec<Self> {
        (0..n.pow(d as u32)).map(|f| Self::from_flat(n, d, f)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    /// `0 <= a_1 <= ... <= a_d`.
    pub fn is_dominant(&self) -> bool {
        self.doubled.first().map_or(true, |&t| t >= 0)
            && self.doubled.windows(2).all(|w| w[0] <= w[1])
    }

    /// The unique dominant element of the orbit.
    pub fn dominant(&self) -> Self {
        let mut v: Vec<i32> = self.doubled.iter().map(|t| t.abs()).collect();
        v.sort_unstable();
        Self { n: self.n, doubled: v }
    }

    /// The `W^B(d)`-orbit, dominant representative first, the rest in flat order.
    pub fn orbit(&self) -> Vec<Self> {
        let dom = self.dominant();
        let mut perms = Vec::new();
        distinct_permutations(&dom.doubled, &mut perms);
        let mut out = Vec::new();
        for p in perms {
            let nz: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
            for signs in 0..(1u64 << nz.len()) {
                let mut v = p.clone();
                for (k, &i) in nz.iter().enumerate() {
                    if signs >> k & 1 == 1 {
                        v[i] = -v[i];
                    }
                }
                out.push(Self { n: self.n, doubled: v });
            }
        }
        out.sort_by_key(|a| (a != &dom, a.flat()));
        out
    }

    /// `(w a, l_0(w), l_1(w))` for every orbit element, `w` the minimal
    /// length representative of its coset `w Stab(a)`; in order of
    /// increasing length, `a` first.
    pub fn orbit_lengths(&self) -> Vec<(Self, usize, usize)> {
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        seen.insert(self.doubled.clone(), ());
        let mut out = vec![(self.clone(), 0, 0)];
        let mut head = 0;
        while head < out.len() {
            let (b, l0, l1) = out[head].clone();
            head += 1;
            for s in 0..self.degree() {
                let mut v = b.doubled.clone();
                if s == 0 {
                    v[0] = -v[0];
                } else {
                    v.swap(s - 1, s);
                }
                if seen.contains_key(&v) {
                    continue;
                }
                seen.insert(v.clone(), ());
                let (m0, m1) = if s == 0 { (l0 + 1, l1) } else { (l0, l1 + 1) };
                out.push((Self { n: self.n, doubled: v }, m0, m1));
            }
        }
        out
    }

    /// Order of the stabilizer, `2^d d! / |orbit|`.
    pub fn stabilizer_order(&self) -> u128 {
        let d = self.degree() as u32;
        let group = (1..=d as u128).product::<u128>() << d;
        group / self.orbit().len() as u128
    }

    /// Replace every entry with `f(entry)` in a new index set.
    pub fn map_values(&self, n: usize, f: impl Fn(i32) -> i32) -> Result<Self> {
        Self::from_doubled(n, self.doubled.iter().map(|&t| f(t)).collect())
    }

    /// Concatenation `(a, b)`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidIndex("indices live in different index sets".into()));
        }
        let mut v = self.doubled.clone();
        v.extend_from_slice(&other.doubled);
        Ok(Self { n: self.n, doubled: v })
    }

    /// Parse a comma-separated list of values such as `1/2,-1/2` or `0,1`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let doubled = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t.strip_suffix("/2") {
                Some(num) => num.parse::<i32>().ok().filter(|x| x % 2 != 0),
                None => t.parse::<i32>().ok().map(|x| 2 * x),
            })
            .map(|t| t.ok_or_else(|| Error::Parse(format!("bad index list {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_doubled(n, doubled)
    }
}

/// Print a doubled value as an integer or half-integer.
pub fn fmt_half(t: i32) -> String {
    if t % 2 == 0 {
        (t / 2).to_string()
    } else {
        format!("{t}/2")
    }
}

fn distinct_permutations(sorted: &[i32], out: &mut Vec<Vec<i32>>) {
    let mut cur = sorted.to_vec();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.doubled.iter().map(|&t| fmt_half(t)).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.n)
    }
}

impl Serialize for TensorIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::SignedPermutation;
    use std::collections::BTreeSet;

    fn idx(n: usize, v: &[i32]) -> TensorIndex {
        TensorIndex::from_doubled(n, v.iter().map(|x| 2 * x).collect()).unwrap()
    }

    fn brute_orbit(a: &TensorIndex) -> BTreeSet<TensorIndex> {
        SignedPermutation::all(a.degree())
            .iter()
            .map(|w| w.act(a).unwrap())
            .collect()
    }

    #[test]
    fn generators_act_as_documented() {
        let a = idx(3, &[1, 0]);
        let s0 = SignedPermutation::generator(0, 2).unwrap();
        let s1 = SignedPermutation::generator(1, 2).unwrap();
        assert_eq!(s0.act(&a).unwrap(), idx(3, &[-1, 0]));
        assert_eq!(s1.act(&a).unwrap(), idx(3, &[0, 1]));
        assert_eq!(SignedPermutation::identity(2).act(&a).unwrap(), a);
    }

    #[test]
    fn orbit_examples() {
        let a = idx(3, &[0, 1]);
        let orb = a.orbit();
        assert_eq!(orb.len(), 4);
        assert_eq!(orb[0], a);
        assert_eq!(a.stabilizer_order(), 2);
        assert_eq!(idx(3, &[0, 0]).orbit().len(), 1);
        assert_eq!(idx(5, &[1, 2]).orbit().len(), 8);
    }

    #[test]
    fn orbits_match_brute_force_and_partition_the_basis() {
        for n in 1..=5 {
            for d in 1..=3 {
                let mut seen = BTreeSet::new();
                let mut total = 0;
                for a in TensorIndex::all(n, d) {
                    if !a.is_dominant() {
                        continue;
                    }
                    let orb = a.orbit();
                    let brute = brute_orbit(&a);
                    assert_eq!(orb.iter().cloned().collect::<BTreeSet<_>>(), brute);
                    let stab = SignedPermutation::all(d)
                        .iter()
                        .filter(|w| w.act(&a).unwrap() == a)
                        .count();
                    assert_eq!(a.stabilizer_order(), stab as u128);
                    total += orb.len();
                    seen.extend(orb);
                }
                assert_eq!(total, n.pow(d as u32));
                assert_eq!(seen.len(), total);
            }
        }
    }

    #[test]
    fn orbit_lengths_are_minimal_coset_lengths() {
        for a in [idx(5, &[0, 1, 1]), idx(5, &[1, 2, 0]), TensorIndex::from_doubled(4, vec![1, 1, -3]).unwrap()] {
            let all = SignedPermutation::all(a.degree());
            let got = a.orbit_lengths();
            assert_eq!(got.len(), a.orbit().len());
            for (b, l0, l1) in got {
                let best = all
                    .iter()
                    .filter(|w| w.act(&a).unwrap() == b)
                    .min_by_key(|w| w.length())
                    .unwrap();
                assert_eq!((l0, l1), (best.l0(), best.l1()), "{b}");
            }
        }
    }

    #[test]
    fn flat_round_trip() {
        for a in TensorIndex::all(4, 3) {
            assert_eq!(TensorIndex::from_flat(4, 3, a.flat()), a);
        }
        assert_eq!(index_set(4), vec![-3, -1, 1, 3]);
    }

    #[test]
    fn parse_and_display() {
        let a = TensorIndex::parse(2, "1/2,-1/2").unwrap();
        assert_eq!(a.doubled(), &[1, -1]);
        assert_eq!(a.to_string(), "(1/2,-1/2)");
        assert!(TensorIndex::parse(3, "1/2").is_err());
        assert!(TensorIndex::from_doubled(3, vec![4]).is_err());
    }
}
