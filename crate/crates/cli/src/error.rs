use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] erae_core::Error),
    #[error("cannot read matrix file {path}: {msg}")]
    File { path: String, msg: String },
    /// Carries the full report, which is still printed on stdout.
    #[error("verification failed: {}", failures.join(", "))]
    VerifyFailed { failures: Vec<String>, report: serde_json::Value },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::File { .. } => 4,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use erae_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::File { .. } => "file",
            CliError::VerifyFailed { .. } => "verify_failed",
            CliError::Domain(e) => match e {
                E::NotSquare { .. } => "not_square",
                E::NotHermitian(_) => "not_hermitian",
                E::NotPsd(_) => "not_psd",
                E::NonFinite => "non_finite",
                E::BadTrace(_) => "bad_trace",
                E::DimensionMismatch(_) => "dimension_mismatch",
                E::InvalidAlpha(_) => "invalid_alpha",
                E::Domain(_) => "domain",
                E::AlphaBelowCritical { .. } => "alpha_below_critical",
                E::NumericalFailure(_) => "numerical_failure",
                E::NotNormalized(_) => "not_normalized",
                E::InvalidSpec(_) => "invalid_spec",
                E::NonFiniteFunction(_) => "non_finite_function",
                E::OutOfDomain { .. } => "out_of_domain",
                E::NotIsometry(_) => "not_isometry",
                E::RankMismatch { .. } => "rank_mismatch",
                E::DimensionTooLarge(_) => "dimension_too_large",
            },
        }
    }
}
