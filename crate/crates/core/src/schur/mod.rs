//! Schur algebras as centralizers, ±-powers, signed tensor powers, Schur
//! functors and the Schur-Weyl decomposition of `V_n^{⊗d}`.

mod algebra;
mod decompose;
mod functor;
mod pm;
mod value;

pub use algebra::{
    e_hecke_braid_check, e_hecke_generators, e_hecke_rank1, generalized_schur_algebra, schur_algebra, RankOneReport,
    SchurAlgebraDesc,
};
pub use decompose::{
    irreducibility_report, schur_weyl_decompose, schur_weyl_table, IrreducibilityReport, SWReport, SWRow,
};
pub use functor::{
    e_prime_image, ext_bi, iota_subspace, schur_functor, signed_tensor, sym_bi, symmetrizer_self_test,
    tensor_pm, tensor_pm_eigensplit, f_d,
};
pub use pm::{
    check_pm_basis, higher_pm_power, pm_basis_vector, pm_dim_rows, pm_power, pm_power_basis, sign_classes, PmBasisCheck,
    PmDimRow, PmKind,
    Sign,
};
pub use value::{FunctorKind, FunctorValue, Presentation};

use crate::error::{Error, Result};
use crate::scalars::{Rational, RationalFunction};

/// Size caps per backend: `TENSOR_CAP` bounds `n^d` for plain tensor powers,
/// `BLOCK_CAP` bounds `n^{de}` when `e > 1`.
pub trait Budget {
    const TENSOR_CAP: usize;
    const BLOCK_CAP: usize;
}

impl Budget for Rational {
    const TENSOR_CAP: usize = 343;
    const BLOCK_CAP: usize = 256;
}

impl Budget for RationalFunction {
    const TENSOR_CAP: usize = 125;
    const BLOCK_CAP: usize = 125;
}

pub fn check_budget<F: Budget>(n: usize, d: usize, e: usize) -> Result<()> {
    let cap = if e > 1 { F::BLOCK_CAP } else { F::TENSOR_CAP };
    let size = (n as u128).checked_pow((d * e) as u32).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::BudgetExceeded(format!(
            "dimension {n}^{} exceeds the cap {cap} for this backend",
            d * e
        )));
    }
    Ok(())
}
