//! Exact computations for the two-parameter Hecke algebra of type B, its
//! action on tensor powers of `V_n`, and the associated Schur functors.
//!
//! Two scalar backends are supported: rational functions in `Q` and `q`
//! ([`scalars::RationalFunction`]) and rationals at a fixed point
//! ([`scalars::Rational`] with a [`scalars::Specialization`]).

pub mod checks;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod rep;
pub mod schur;
pub mod scalars;
pub mod weyl;

pub use error::{Error, Result};
