//! Exact scalars: Laurent polynomials, rational functions in `Q` and `q`,
//! and rational specializations.

mod field;
mod laurent;
mod poly;
mod ratfun;
mod specialization;

pub use field::{parse_rational, rational, rational_sign, Field, Rational, Ring};
pub use laurent::{Exp, LaurentPoly2};
pub use ratfun::{poincare_factor, RationalFunction};
pub use specialization::{Backend, GenericParams, Params, Specialization};
