use super::partitions::Partition;
use super::signed_perm::SignedPermutation;
use crate::error::{Error, Result};

/// `w_{a,b}` in `W(a+b)`: `i -> a + i` for `i <= b`, `b + j -> j` for `j <= a`.
pub fn w_ab(a: usize, b: usize) -> SignedPermutation {
    let images = (1..=b as i32)
        .map(|i| a as i32 + i)
        .chain(1..=a as i32)
        .collect();
    SignedPermutation::new(images).expect("w_ab is a permutation")
}

/// The column reading `c(λ)`: fill `λ` row by row with `1..d` and read the
/// columns top to bottom, left to right.
pub fn c_of_lambda(lambda: &Partition) -> SignedPermutation {
    let parts = lambda.parts();
    let mut starts = Vec::with_capacity(parts.len());
    let mut s = 0;
    for &p in parts {
        starts.push(s);
        s += p;
    }
    let mut images = Vec::with_capacity(s);
    for c in 0..parts.first().copied().unwrap_or(0) {
        for (r, &p) in parts.iter().enumerate() {
            if c < p {
                images.push((starts[r] + c + 1) as i32);
            }
        }
    }
    SignedPermutation::new(images).expect("column reading is a permutation")
}

/// `w_i` in `W(de)`, `1 <= i < d`: swaps the blocks `i` and `i + 1` of size `e`.
pub fn block_swap(i: usize, e: usize, d: usize) -> Result<SignedPermutation> {
    if i == 0 || i >= d || e == 0 {
        return Err(Error::OutOfRange(format!("w_{i} needs 1 <= i < d = {d} and e >= 1")));
    }
    let mut images: Vec<i32> = (1..=(d * e) as i32).collect();
    let start = e * (i - 1);
    for k in 0..e {
        images[start + k] = (start + e + k + 1) as i32;
        images[start + e + k] = (start + k + 1) as i32;
    }
    SignedPermutation::new(images)
}

/// `w_0 = s_0 (s_1 s_0 s_1) ... (s_{e-1} ... s_0 ... s_{e-1})` in `W(de)`.
pub fn block_w0(e: usize, d: usize) -> Result<SignedPermutation> {
    if e == 0 || d == 0 {
        return Err(Error::OutOfRange("w_0 needs d, e >= 1".into()));
    }
    SignedPermutation::from_word(&w0_word(e), d * e)
}

/// The displayed word of `w_0`.
pub fn w0_word(e: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for k in 0..e {
        word.extend((1..=k).rev());
        word.push(0);
        word.extend(1..=k);
    }
    word
}

/// A special word: the element and a reduced word for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialWord {
    pub element: SignedPermutation,
    pub word: Vec<usize>,
}

impl SpecialWord {
    pub fn of(element: SignedPermutation) -> Self {
        let word = element.reduced_word();
        Self { element, word }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_reading_example() {
        let c = c_of_lambda(&Partition::new(vec![4, 2]).unwrap());
        assert_eq!(c.images(), &[1, 5, 2, 6, 3, 4]);
        assert!(c_of_lambda(&Partition::new(vec![3]).unwrap()).is_identity());
    }

    #[test]
    fn w_ab_examples() {
        assert_eq!(w_ab(1, 1), SignedPermutation::generator(1, 2).unwrap());
        let w = w_ab(2, 1);
        assert_eq!(w.images(), &[3, 1, 2]);
        assert_eq!(w_ab(1, 2), w.inverse());
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn w0_is_longest_of_the_first_block() {
        let w = block_w0(2, 1).unwrap();
        assert_eq!(w0_word(2), vec![0, 1, 0, 1]);
        assert_eq!(w.length(), 4);
        assert_eq!(w.images(), &[-1, -2]);
        let w = block_w0(3, 2).unwrap();
        assert_eq!(w.images(), &[-1, -2, -3, 4, 5, 6]);
        assert_eq!(w.length(), 9);
    }

    #[test]
    fn block_swap_has_length_e_squared() {
        let w = block_swap(1, 2, 2).unwrap();
        assert_eq!(w.images(), &[3, 4, 1, 2]);
        assert_eq!(w.length(), 4);
        assert_eq!(block_swap(1, 1, 3).unwrap(), SignedPermutation::generator(1, 3).unwrap());
        assert!(block_swap(2, 1, 2).is_err());
    }
}
