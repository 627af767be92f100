use std::fmt;

use super::tensor_index::TensorIndex;
use crate::error::{Error, Result};

/// Composition `θ` indexed by `I_n`.
///
/// `parts[k]` is the multiplicity of the doubled value `(n - 1) - 2k`, so the
/// parts are listed from the largest index down, and [`Composition::to_index`]
/// lays the factors out in that order: `(2,1,3)` at `n = 3` gives
/// `v_1 ⊗ v_1 ⊗ v_0 ⊗ v_-1 ⊗ v_-1 ⊗ v_-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Doubled index value of slot `k`.
    fn value(&self, k: usize) -> i32 {
        self.n() as i32 - 1 - 2 * k as i32
    }

    /// Slot of doubled value `t`.
    fn slot(&self, t: i32) -> usize {
        ((self.n() as i32 - 1 - t) / 2) as usize
    }

    /// `θ'`: insert zero parts at `±j`, shifting the entries at `|l| >= j`
    /// outwards. `j` is doubled and must be positive with the parity of `n - 1`.
    pub fn add_zero_pair(&self, j: i32) -> Result<Self> {
        let n = self.n() as i32;
        if j <= 0 || (j - (n - 1)).rem_euclid(2) != 0 || j > n + 1 {
            return Err(Error::InvalidPosition(format!(
                "cannot add zeros at j = {}",
                super::tensor_index::fmt_half(j)
            )));
        }
        let out = Self::new(vec![0; self.parts.len() + 2]);
        let mut parts = out.parts.clone();
        for (k, &p) in self.parts.iter().enumerate() {
            let t = self.value(k);
            parts[out.slot(shift_pair(t, j))] = p;
        }
        Ok(Self::new(parts))
    }

    /// Inverse of [`Composition::add_zero_pair`]; requires `θ_{±j} = 0`.
    pub fn remove_zero_pair(&self, j: i32) -> Result<Self> {
        let n = self.n() as i32;
        if n < 3 || j <= 0 || j > n - 1 || (j - (n - 1)).rem_euclid(2) != 0 {
            return Err(Error::InvalidPosition(format!("cannot remove zeros at doubled j = {j}")));
        }
        if self.parts[self.slot(j)] != 0 || self.parts[self.slot(-j)] != 0 {
            return Err(Error::InvalidPosition("parts at ±j are not zero".into()));
        }
        let out = Self::new(vec![0; self.parts.len() - 2]);
        let mut parts = out.parts.clone();
        for (k, &p) in self.parts.iter().enumerate() {
            let t = self.value(k);
            if t.abs() != j {
                parts[out.slot(unshift_pair(t, j))] = p;
            }
        }
        Ok(Self::new(parts))
    }

    /// `θ''`: for even `n`, insert a zero part at the centre.
    pub fn add_zero_center(&self) -> Result<Self> {
        if self.n() % 2 != 0 {
            return Err(Error::InvalidPosition("a centre zero needs n even".into()));
        }
        let mut parts = self.parts.clone();
        parts.insert(self.n() / 2, 0);
        Ok(Self::new(parts))
    }

    /// Inverse of [`Composition::add_zero_center`]; requires `θ_0 = 0`.
    pub fn remove_zero_center(&self) -> Result<Self> {
        if self.n() % 2 == 0 || self.parts[self.n() / 2] != 0 {
            return Err(Error::InvalidPosition("no zero part at the centre".into()));
        }
        let mut parts = self.parts.clone();
        parts.remove(self.n() / 2);
        Ok(Self::new(parts))
    }

    /// `a(θ)`.
    pub fn to_index(&self) -> Result<TensorIndex> {
        let mut doubled = Vec::with_capacity(self.degree());
        for (k, &p) in self.parts.iter().enumerate() {
            doubled.extend(std::iter::repeat(self.value(k)).take(p));
        }
        TensorIndex::from_doubled(self.n(), doubled)
    }

    /// The composition counting the entries of `a`.
    pub fn of_index(a: &TensorIndex) -> Self {
        let mut out = Self::new(vec![0; a.n()]);
        for &t in a.doubled() {
            let s = out.slot(t);
            out.parts[s] += 1;
        }
        out
    }
}

/// Value map behind [`Composition::add_zero_pair`] (doubled).
pub fn shift_pair(t: i32, j: i32) -> i32 {
    if t >= j {
        t + 2
    } else if t <= -j {
        t - 2
    } else {
        t
    }
}

fn unshift_pair(t: i32, j: i32) -> i32 {
    if t > j {
        t - 2
    } else if t < -j {
        t + 2
    } else {
        t
    }
}

/// Value map behind [`Composition::add_zero_center`] (doubled).
pub fn shift_center(t: i32) -> i32 {
    t + t.signum()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
