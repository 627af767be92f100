use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        Self {
            parts: (0..cols)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                out.push((p - c - 1) + (conj.parts[c] - r - 1) + 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn syt_count(&self) -> u64 {
        let num: BigUint = (1..=self.size() as u64).product();
        let den: BigUint = self.hooks().iter().map(|&h| BigUint::from(h)).product();
        (num / den).to_u64().expect("count fits in u64")
    }

    /// Number of semistandard tableaux with entries in `1..=m` (hook content formula).
    pub fn ssyt_count(&self, m: usize) -> u64 {
        if self.len() > m {
            return 0;
        }
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        let hooks = self.hooks();
        let mut k = 0;
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                num *= BigUint::from(m + c - r);
                den *= BigUint::from(hooks[k]);
                k += 1;
            }
        }
        (num / den).to_u64().expect("count fits in u64")
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{s:?} has a zero part")));
        }
        Self::new(parts)
    }
}

/// Ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Self { lambda, mu }
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    /// `(λ', μ')`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.lambda.conjugate(), self.mu.conjugate())
    }

    /// Number of standard bitableaux: `C(d, |λ|) SYT(λ) SYT(μ)`.
    pub fn standard_count(&self) -> u64 {
        binomial(self.size() as u64, self.lambda.size() as u64)
            * self.lambda.syt_count()
            * self.mu.syt_count()
    }

    /// Semistandard bitableaux for `V_n`: entries of `λ` bounded by `r + 1`
    /// and of `μ` by `r` when `n = 2r + 1`; both bounded by `r` when `n = 2r`.
    pub fn semistandard_count(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::InvalidShape("n must be positive".into()));
        }
        let (plus, minus) = ssyt_bounds(n);
        Ok(self.lambda.ssyt_count(plus) * self.mu.ssyt_count(minus))
    }

    /// All bipartitions of `d`: `(λ, ∅)` first, then `(∅, μ)`, then mixed
    /// ones by decreasing `|λ|`; partitions in decreasing lexicographic order.
    pub fn all(d: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Partition::all(d)
            .into_iter()
            .map(|l| Self::new(l, Partition::empty()))
            .collect();
        if d > 0 {
            out.extend(Partition::all(d).into_iter().map(|m| Self::new(Partition::empty(), m)));
        }
        for a in (1..d).rev() {
            for l in Partition::all(a) {
                for m in Partition::all(d - a) {
                    out.push(Self::new(l.clone(), m));
                }
            }
        }
        out
    }
}

/// Entry bounds `(λ side, μ side)` for semistandard bitableaux of `V_n`.
pub fn ssyt_bounds(n: usize) -> (usize, usize) {
    (n.div_ceil(2), n / 2)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, m) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition {s:?} needs a '|'")))?;
        Ok(Self::new(l.parse()?, m.parse()?))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Standard tableaux by removing a corner cell in every possible way.
    fn syt_brute(parts: &[usize]) -> u64 {
        if parts.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for r in 0..parts.len() {
            let is_corner = parts[r] > 0 && parts.get(r + 1).map_or(true, |&nx| nx < parts[r]);
            if is_corner {
                let mut q = parts.to_vec();
                q[r] -= 1;
                total += syt_brute(&q);
            }
        }
        total
    }

    /// Semistandard tableaux by filling cells row by row.
    fn ssyt_brute(parts: &[usize], m: usize) -> u64 {
        let cells: Vec<(usize, usize)> = parts
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
            .collect();
        fn go(cells: &[(usize, usize)], k: usize, t: &mut Vec<Vec<usize>>, m: usize) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (r, c) = cells[k];
            let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
            let mut total = 0;
            for x in lo_row.max(lo_col)..=m {
                t[r][c] = x;
                total += go(cells, k + 1, t, m);
            }
            total
        }
        let mut t: Vec<Vec<usize>> = parts.iter().map(|&l| vec![0; l]).collect();
        go(&cells, 0, &mut t, m)
    }

    #[test]
    fn hook_formulas_match_brute_force() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                assert_eq!(lam.syt_count(), syt_brute(lam.parts()), "{lam:?}");
                for m in 0..=4 {
                    assert_eq!(lam.ssyt_count(m), ssyt_brute(lam.parts(), m), "{lam:?} {m}");
                }
            }
        }
    }

    #[test]
    fn bipartitions_of_two() {
        let all = Bipartition::all(2);
        let names: Vec<String> = all.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, vec!["2|-", "1,1|-", "-|2", "-|1,1", "1|1"]);
        let counts: Vec<u64> = all.iter().map(|b| b.standard_count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn standard_counts_square_to_group_order() {
        for d in 0..=4u64 {
            let total: u64 = Bipartition::all(d as usize)
                .iter()
                .map(|b| b.standard_count().pow(2))
                .sum();
            let fact: u64 = (1..=d).product();
            assert_eq!(total, (1 << d) * fact);
        }
    }

    #[test]
    fn semistandard_examples() {
        let b: Bipartition = "1|1".parse().unwrap();
        assert_eq!(b.semistandard_count(5).unwrap(), 6);
        assert_eq!(Bipartition::default().semistandard_count(3).unwrap(), 1);
        assert_eq!(ssyt_bounds(7), (4, 3));
        assert_eq!(ssyt_bounds(4), (2, 2));
    }

    #[test]
    fn parse_and_print() {
        let b: Bipartition = "2,1|1".parse().unwrap();
        assert_eq!(b.lambda, p(&[2, 1]));
        assert_eq!(b.mu, p(&[1]));
        assert_eq!(b.to_string(), "2,1|1");
        let e: Bipartition = "-|1,1".parse().unwrap();
        assert_eq!(e.to_string(), "-|1,1");
        assert!("1,2|".parse::<Bipartition>().is_err());
        assert!("21".parse::<Bipartition>().is_err());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
