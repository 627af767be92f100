use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the specialization point")]
    PoleAtSpecialization,
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("eigenvalue outside the candidate set (residual degree {residual_degree})")]
    UnclassifiedEigenvalue { residual_degree: usize },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid position: {0}")]
    InvalidPosition(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("symmetrizer self-test failed: {0}")]
    SymmetrizerValidationFailed(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("incompatible spaces: {0}")]
    IncompatibleSpaces(String),
    #[error("generator not available for this parity of n: {0}")]
    ParityMismatch(String),
    #[error("inadmissible index: {0}")]
    InadmissibleIndex(String),
    #[error("f_d vanishes at the working parameters: {0}")]
    FdVanishes(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
