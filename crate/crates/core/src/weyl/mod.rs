//! Combinatorics of `W^B(d)`: signed permutations, tensor indices and their
//! orbits, partitions and tableaux counts, compositions, special words.

mod composition;
mod partitions;
mod signed_perm;
mod tensor_index;
mod words;

pub use composition::{shift_center, shift_pair, Composition};
pub use partitions::{binomial, ssyt_bounds, Bipartition, Partition};
pub use signed_perm::SignedPermutation;
pub use tensor_index::{basis_position, basis_value, fmt_half, index_set, TensorIndex};
pub use words::{block_swap, block_w0, c_of_lambda, w0_word, w_ab, SpecialWord};
