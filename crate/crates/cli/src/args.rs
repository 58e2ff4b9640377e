use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use erae_core::curves::{DEFAULT_ALPHA_MAX, DEFAULT_ALPHA_MIN, DEFAULT_ALPHA_POINTS};
use erae_core::LogBase;

/// Entanglement Rényi α-entropy of bipartite states.
#[derive(Debug, Parser)]
#[command(name = "erae", version)]
pub struct Cli {
    /// Report entropies in bits (2) or nats (e).
    #[arg(long, global = true, env = "ERAE_LOG_BASE", default_value = "2", value_parser = parse_base)]
    pub log_base: LogBase,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form value for a single state.
    Eval(EvalArgs),
    /// Table of values along α or F for up to four series.
    Curve(CurveArgs),
    /// Numerical convex-roof minimization.
    Oracle(OracleArgs),
    /// Run the built-in property suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pure,
    TwoQubit,
    Werner,
    Isotropic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    Alpha,
    #[value(name = "F")]
    F,
}

/// Where the state comes from: a family with parameters, or a matrix file.
#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Local dimension of Werner and isotropic states.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Family parameter F.
    #[arg(long = "F", allow_negative_numbers = true)]
    pub f: Option<f64>,
    /// Concurrence of a two-qubit pure state.
    #[arg(long)]
    pub concurrence: Option<f64>,
    /// JSON density matrix {dimA, dimB, re, im}.
    #[arg(long, conflicts_with_all = ["f", "concurrence"])]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Rényi order; 0 selects the rank limit and 1 the von Neumann limit.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// A series like `isotropic:F=0.7,d=3` or `pure:C=0.5`. On the F axis
    /// leave out F (or C).
    #[arg(long = "series")]
    pub series: Vec<String>,
    /// Adds a two-qubit pure series with this concurrence.
    #[arg(long)]
    pub concurrence: Vec<f64>,
    #[arg(long, value_enum, default_value = "alpha")]
    pub axis: AxisArg,
    #[arg(long, default_value_t = DEFAULT_ALPHA_MIN)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = DEFAULT_ALPHA_MAX)]
    pub alpha_max: f64,
    /// Grid size along the axis.
    #[arg(long, default_value_t = DEFAULT_ALPHA_POINTS)]
    pub points: usize,
    /// Fixed order for an F axis.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long = "F-min", default_value_t = 0.0, allow_negative_numbers = true)]
    pub f_min: f64,
    #[arg(long = "F-max", default_value_t = 1.0)]
    pub f_max: f64,
    /// Locate where the two series cross (alpha axis only).
    #[arg(long)]
    pub find_crossing: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    /// Number of ensemble members (default rank²).
    #[arg(long)]
    pub ensemble_size: Option<usize>,
    /// Sweep limit per restart.
    #[arg(long, default_value_t = 2000)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub conv_tol: f64,
    /// Include the best decomposition found.
    #[arg(long)]
    pub emit_ensemble: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this suite.
    #[arg(long)]
    pub suite: Option<String>,
}

fn parse_base(s: &str) -> Result<LogBase, String> {
    LogBase::parse(s).ok_or_else(|| format!("log base must be 2 or e, got '{s}'"))
}
