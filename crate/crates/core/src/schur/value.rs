use std::fmt;

use serde_json::{json, Value};

use super::pm::{PmKind, Sign};
use crate::linalg::Subspace;
use crate::scalars::Field;
use crate::weyl::Bipartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `space` is the functor value itself.
    Sub,
    /// `space` is the subspace of relations; the value is the cokernel.
    Quotient,
}

impl Presentation {
    pub fn label(self) -> &'static str {
        match self {
            Presentation::Sub => "sub",
            Presentation::Quotient => "quotient",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FunctorKind {
    Tensor,
    Pm(PmKind),
    /// `Γ^d_±`: the kernel presentation of `S^d_±`.
    Gamma(Sign),
    TensorPm(Sign),
    SignedTensor(usize, usize),
    SymBi(Bipartition),
    ExtBi(Bipartition),
    Schur(Bipartition),
    HigherPm { kind: PmKind, d: usize, e: usize },
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorKind::Tensor => write!(f, "tensor"),
            FunctorKind::Pm(k) => write!(f, "{k}"),
            FunctorKind::Gamma(s) => write!(f, "Γ{s}"),
            FunctorKind::TensorPm(s) => write!(f, "tensor{s}"),
            FunctorKind::SignedTensor(a, b) => write!(f, "signedTensor({a},{b})"),
            FunctorKind::SymBi(sh) => write!(f, "S^({sh})"),
            FunctorKind::ExtBi(sh) => write!(f, "∧^({sh})"),
            FunctorKind::Schur(sh) => write!(f, "Schur({sh})"),
            FunctorKind::HigherPm { kind, d, e } => write!(f, "higher{kind}({d},{e})"),
        }
    }
}

/// A functor evaluated at `V_n`, realized inside `V_n^{⊗d}`.
#[derive(Clone, Debug)]
pub struct FunctorValue<F> {
    pub kind: FunctorKind,
    pub n: usize,
    pub d: usize,
    pub presentation: Presentation,
    pub space: Subspace<F>,
}

impl<F: Field> FunctorValue<F> {
    pub fn sub(kind: FunctorKind, n: usize, d: usize, space: Subspace<F>) -> Self {
        Self { kind, n, d, presentation: Presentation::Sub, space }
    }

    pub fn quotient(kind: FunctorKind, n: usize, d: usize, relations: Subspace<F>) -> Self {
        Self { kind, n, d, presentation: Presentation::Quotient, space: relations }
    }

    pub fn dim(&self) -> usize {
        match self.presentation {
            Presentation::Sub => self.space.dim(),
            Presentation::Quotient => self.space.ambient() - self.space.dim(),
        }
    }

    pub fn summary(&self) -> Value {
        json!({
            "kind": self.kind.to_string(),
            "n": self.n,
            "d": self.d,
            "presentation": self.presentation.label(),
            "dim": self.dim(),
        })
    }
}
