use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPsd(f64),
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("trace {0} differs from 1")]
    BadTrace(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid alpha {0}: must be finite and non-negative")]
    InvalidAlpha(f64),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("alpha {alpha} is below the critical order {critical}; use the roof minimizer")]
    AlphaBelowCritical { alpha: f64, critical: f64 },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("state vector is not normalized (norm^2 = {0})")]
    NotNormalized(f64),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("function returned a non-finite value at x = {0}")]
    NonFiniteFunction(f64),
    #[error("x = {x} outside hull domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("matrix is not an isometry (max deviation {0:.3e})")]
    NotIsometry(f64),
    #[error("rank mismatch: expected {expected} columns, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("dimension {0} exceeds the supported maximum of 81")]
    DimensionTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
