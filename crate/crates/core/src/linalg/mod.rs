//! Sparse exact linear algebra over any [`Field`](crate::scalars::Field).

mod commutant;
mod matrix;
mod rref;
mod spectral;
mod subspace;
mod upoly;

pub use commutant::{commutant_basis, commutant_dim, generated_algebra, intertwiner_basis, intertwiner_dim};
pub use matrix::{sv_axpy, sv_from_pairs, sv_get, sv_scale, ExactMatrix, SparseVec};
pub use rref::{row_reduce, Echelon};
pub use spectral::{factor_over, generalized_eigensplit, minimal_polynomial, EigenSplit};
pub use subspace::{image, joint_image, joint_kernel, kernel, rank, Subspace};
pub use upoly::FieldPoly;
