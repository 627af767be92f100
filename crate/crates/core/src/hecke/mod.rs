//! The two-parameter Hecke algebra `H^B_{Q,q}(d)` on the basis `{T_w}`.

mod algebra;
mod symmetrizer;

pub use algebra::{laurent_params, HeckeAlgebra, HeckeElement};
pub use symmetrizer::{young_subgroup, CylinderSides};
