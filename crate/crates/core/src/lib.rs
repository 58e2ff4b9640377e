//! Entanglement Rényi α-entropy (ERαE) of bipartite quantum states.
//!
//! The ERαE of a mixed state is the convex roof of the Rényi α-entropy of
//! the reduced state,
//!
//! ```text
//! R_α(ρ) = min over {p_k, ψ_k} with Σ p_k |ψ_k⟩⟨ψ_k| = ρ of Σ p_k R_α(ψ_k)
//! ```
//!
//! This crate evaluates it in closed form where that is possible:
//!
//! | state | module | result |
//! |-------|--------|--------|
//! | pure | [`pure_entropy`] | Rényi entropy of the Schmidt vector |
//! | two-qubit, α ≥ α_c | [`two_qubit`] | Ω(C(ρ), α) with Wootters' C |
//! | Werner | [`symmetric`] | co(ω)(F), independent of d |
//! | isotropic | [`symmetric`] | co(η)(F) |
//!
//! and provides an independent numerical minimizer of the roof itself
//! ([`roof_oracle`]) to cross-check every closed form. Entropies are in bits.

pub mod config;
pub mod convex_hull;
pub mod curves;
pub mod error;
pub mod linalg;
pub mod pure_entropy;
pub mod random;
pub mod roof_oracle;
mod simplex;
pub mod symmetric;
pub mod two_qubit;
pub mod verify;

pub use config::{LogBase, Tolerances, TOL};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, Subsystem};
pub use pure_entropy::{Alpha, AlphaMode, SchmidtSpectrum};
pub use symmetric::{Family, IsotropicSpec, WernerSpec};
