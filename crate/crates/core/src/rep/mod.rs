//! Tensor-space representations: `R_q`, `K_Q`, the Hecke action on
//! `V_n^{⊗d}`, block R/K matrices, the quantum group and coideal actions,
//! and permutation modules.

mod braid;
mod permutation;
mod quantum;
mod tensor;

pub use braid::{verify_rk_equations, BlockBraid, RkCheck, RkTriple};
pub use permutation::{add_zeros_check, AddZeros, AddZerosReport, BarvEmbedding, PermutationModule};
pub use quantum::{verify_double_centralizer, Bracketing, CoidealGenerator, DoubleCentralizerReport, QgGenerator, QuantumAction};
pub use tensor::{k_matrix, r_matrix, TensorRep, TensorSpace};
