use thiserror::Error;

/// Errors reported by evaluation, zero finding and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),
    #[error("gamma function overflows at x = {0}")]
    Overflow(f64),
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("argument lies on the branch cut (negative real axis)")]
    BranchCut,
    #[error("function is singular at the origin for order {0}")]
    SingularAtOrigin(f64),
    #[error("invalid series configuration: {0}")]
    InvalidConfig(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("bracketing failed: {0}")]
    Bracketing(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of the log-derivative at z = {0}")]
    LogDerivPole(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
}

pub type Result<T> = std::result::Result<T, Error>;
