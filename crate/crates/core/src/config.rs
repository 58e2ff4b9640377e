//! Numerical tolerances shared across modules, and the logarithm base used
//! when reporting entropies.

use serde::{Deserialize, Serialize};

/// Every tolerance used by validation and clamping lives here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max entrywise |M - M†| accepted for density matrices.
    pub hermitian: f64,
    /// Looser Hermiticity check applied by the eigensolver itself.
    pub eig_hermitian: f64,
    /// |tr ρ - 1| accepted for density matrices.
    pub trace: f64,
    /// Eigenvalues in [-clamp, 0) are set to 0.
    pub psd_clamp: f64,
    /// Eigenvalues below -reject make the matrix non-PSD.
    pub psd_reject: f64,
    /// Schmidt coefficients above this count toward the rank (alpha = 0).
    pub rank_cutoff: f64,
    /// |alpha - 1| below this selects the von Neumann limit.
    pub alpha_limit: f64,
    /// Distance at which a family parameter snaps to a separability breakpoint.
    pub breakpoint_snap: f64,
    /// Negative roundoff accepted under the square root of Λ_i².
    pub lambda_sq_clamp: f64,
    /// Eigenvalues of unit-trace operators at or below this are treated as
    /// exact zeros before taking square roots.
    pub spectral_floor: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-10,
        eig_hermitian: 1e-8,
        trace: 1e-10,
        psd_clamp: 1e-10,
        psd_reject: 1e-6,
        rank_cutoff: 1e-12,
        alpha_limit: 1e-12,
        breakpoint_snap: 1e-14,
        lambda_sq_clamp: 1e-8,
        spectral_floor: 1e-14,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

pub const TOL: Tolerances = Tolerances::DEFAULT;

/// Unit in which entropies are reported. The library computes in bits;
/// conversion happens at the output boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum LogBase {
    #[default]
    Two,
    E,
}

impl LogBase {
    pub fn from_bits(self, bits: f64) -> f64 {
        match self {
            LogBase::Two => bits,
            LogBase::E => bits * std::f64::consts::LN_2,
        }
    }

    pub fn parse(s: &str) -> Option<LogBase> {
        match s.trim() {
            "2" => Some(LogBase::Two),
            "e" | "E" => Some(LogBase::E),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LogBase::Two => "2",
            LogBase::E => "e",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_conversion() {
        assert_eq!(LogBase::Two.from_bits(1.5), 1.5);
        assert!((LogBase::E.from_bits(1.0) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(LogBase::parse("e"), Some(LogBase::E));
        assert_eq!(LogBase::parse("10"), None);
    }
}
