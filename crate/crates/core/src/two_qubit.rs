//! Wootters concurrence of two-qubit states and the closed-form ERαE
//! R_α(ρ) = Ω(C(ρ), α), valid for α ≥ α_c.

use num_complex::Complex64;

use crate::config::TOL;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, norm_sqr, sigma_y, ComplexMatrix, DensityMatrix};
use crate::pure_entropy::{alpha_critical, omega, Alpha, AlphaMode};

/// A density matrix on C² ⊗ C².
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState(DensityMatrix);

impl TwoQubitState {
    pub fn new(rho: DensityMatrix) -> Result<Self> {
        if rho.dim_a() != 2 || rho.dim_b() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "two-qubit state needs 2x2 dims, got {}x{}",
                rho.dim_a(),
                rho.dim_b()
            )));
        }
        Ok(Self(rho))
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.0
    }
}

impl TryFrom<DensityMatrix> for TwoQubitState {
    type Error = Error;

    fn try_from(rho: DensityMatrix) -> Result<Self> {
        Self::new(rho)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult {
    pub concurrence: f64,
    /// Λ₁ ≥ Λ₂ ≥ Λ₃ ≥ Λ₄ ≥ 0, square roots of the eigenvalues of ρ̃ρ.
    pub lambdas: [f64; 4],
}

fn yy() -> ComplexMatrix {
    let y = sigma_y();
    kron(&y, &y)
}

/// ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y), conjugation in the computational basis.
pub fn spin_flip(state: &TwoQubitState) -> ComplexMatrix {
    let yy = yy();
    yy.matmul(&state.0.matrix().conj()).matmul(&yy)
}

/// C(ψ) = |⟨ψ̃|ψ⟩| = 2|ψ₀₀ψ₁₁ − ψ₀₁ψ₁₀|.
pub fn concurrence_pure(psi: &[Complex64]) -> Result<f64> {
    if psi.len() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "two-qubit vector needs 4 entries, got {}",
            psi.len()
        )));
    }
    let n2 = norm_sqr(psi);
    if (n2 - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized(n2));
    }
    Ok(2.0 * (psi[0] * psi[3] - psi[1] * psi[2]).norm())
}

/// Wootters concurrence max(Λ₁ − Λ₂ − Λ₃ − Λ₄, 0). The Λᵢ² are taken from
/// the Hermitian matrix √ρ ρ̃ √ρ, which shares its spectrum with ρ̃ρ.
pub fn concurrence_mixed(state: &TwoQubitState) -> Result<ConcurrenceResult> {
    let mut spec = state.0.spectrum()?;
    // eigenvalues at roundoff level are exact zeros; keeping them would put
    // O(√ε) noise into √ρ and hence into the Λᵢ
    for l in spec.eigenvalues.iter_mut() {
        *l = if *l <= TOL.spectral_floor { 0.0 } else { l.sqrt() };
    }
    let sqrt_rho = spec.reconstruct();
    let flipped = spin_flip(state);
    let h = sqrt_rho.matmul(&flipped).matmul(&sqrt_rho).hermitian_part();
    let ev = hermitian_eigenvalues(&h)?;
    let mut lambdas = [0.0; 4];
    for (l, &e) in lambdas.iter_mut().zip(&ev) {
        if e < -TOL.lambda_sq_clamp {
            return Err(Error::NumericalFailure(format!(
                "negative eigenvalue {e:.3e} of the spin-flipped product"
            )));
        }
        *l = if e <= TOL.spectral_floor { 0.0 } else { e.sqrt() };
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    let c = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
    Ok(ConcurrenceResult {
        concurrence: c.min(1.0),
        lambdas,
    })
}

/// R_α(ρ) = Ω(C(ρ), α). Refuses α below α_c, where Ω(·, α) is not convex
/// and no closed form is known.
pub fn erae_closed_form(state: &TwoQubitState, alpha: Alpha) -> Result<f64> {
    let critical = alpha_critical();
    if alpha.mode() != AlphaMode::VonNeumannLimit && alpha.value() < critical {
        return Err(Error::AlphaBelowCritical {
            alpha: alpha.value(),
            critical,
        });
    }
    let c = concurrence_mixed(state)?.concurrence;
    omega(c, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ONE, ZERO};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> Vec<Complex64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        vec![c(h), ZERO, ZERO, c(h)]
    }

    fn state(m: ComplexMatrix) -> TwoQubitState {
        TwoQubitState::new(DensityMatrix::new(m, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn spin_flip_examples() {
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(spin_flip(&state(mixed.clone())).max_abs_diff(&mixed) < 1e-15);
        let b = ComplexMatrix::projector(&bell());
        assert!(spin_flip(&state(b.clone())).max_abs_diff(&b) < 1e-15);
        let p00 = ComplexMatrix::projector(&[ONE, ZERO, ZERO, ZERO]);
        let p11 = ComplexMatrix::projector(&[ZERO, ZERO, ZERO, ONE]);
        assert!(spin_flip(&state(p00)).max_abs_diff(&p11) < 1e-15);
    }

    #[test]
    fn pure_concurrence_examples() {
        assert_eq!(concurrence_pure(&[ONE, ZERO, ZERO, ZERO]).unwrap(), 0.0);
        assert!((concurrence_pure(&bell()).unwrap() - 1.0).abs() < 1e-15);
        let psi = [c(0.933f64.sqrt()), ZERO, ZERO, c(0.067f64.sqrt())];
        let want = 2.0 * (0.933f64 * 0.067).sqrt();
        assert!((concurrence_pure(&psi).unwrap() - want).abs() < 1e-15);
        assert!((want - 0.5).abs() < 1e-3);
        assert!(matches!(
            concurrence_pure(&[ONE, ONE, ZERO, ZERO]),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn mixed_concurrence_examples() {
        let r = concurrence_mixed(&state(ComplexMatrix::identity(4).scale_real(0.25))).unwrap();
        assert_eq!(r.concurrence, 0.0);
        let r = concurrence_mixed(&state(ComplexMatrix::projector(&bell()))).unwrap();
        assert!((r.concurrence - 1.0).abs() < 1e-12);
        assert!((r.lambdas[0] - 1.0).abs() < 1e-12);
        assert!(r.lambdas[1..].iter().all(|l| l.abs() < 1e-12));
    }

    #[test]
    fn closed_form_refuses_low_alpha() {
        let s = state(ComplexMatrix::projector(&bell()));
        let e = erae_closed_form(&s, Alpha::new(0.5).unwrap());
        assert!(matches!(e, Err(Error::AlphaBelowCritical { .. })));
        assert!(erae_closed_form(&s, Alpha::zero()).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let sep = state(ComplexMatrix::identity(4).scale_real(0.25));
        assert_eq!(erae_closed_form(&sep, Alpha::new(2.0).unwrap()).unwrap(), 0.0);
        let b = state(ComplexMatrix::projector(&bell()));
        let v = erae_closed_form(&b, Alpha::new(2.0).unwrap()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        assert!(erae_closed_form(&b, Alpha::von_neumann()).is_ok());
    }

    #[test]
    fn rejects_non_qubit_dims() {
        let rho = DensityMatrix::new(ComplexMatrix::identity(4).scale_real(0.25), 1, 4).unwrap();
        assert!(TwoQubitState::new(rho).is_err());
    }
}
