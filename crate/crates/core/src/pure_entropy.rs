//! Rényi α-entropy of pure bipartite states and the two-qubit function
//! Ω(C, α), the entropy of the Schmidt vector λ± = (1 ± √(1−C²))/2 written
//! in terms of the concurrence C.
//!
//! All entropies are in bits.

use num_complex::Complex64;

use crate::config::TOL;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};

/// How an order α is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    /// (1−α)⁻¹ log Σ μᵢ^α
    Generic,
    /// log of the Schmidt rank.
    ZeroLimit,
    /// von Neumann entropy.
    VonNeumannLimit,
}

/// A Rényi order α ≥ 0, with the two removable singularities flagged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha {
    value: f64,
    mode: AlphaMode,
}

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidAlpha(value));
        }
        let mode = if value < TOL.alpha_limit {
            AlphaMode::ZeroLimit
        } else if (value - 1.0).abs() < TOL.alpha_limit {
            AlphaMode::VonNeumannLimit
        } else {
            AlphaMode::Generic
        };
        Ok(Self { value, mode })
    }

    pub fn zero() -> Self {
        Self {
            value: 0.0,
            mode: AlphaMode::ZeroLimit,
        }
    }

    pub fn von_neumann() -> Self {
        Self {
            value: 1.0,
            mode: AlphaMode::VonNeumannLimit,
        }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn mode(self) -> AlphaMode {
        self.mode
    }
}

/// Schmidt coefficients of a bipartite pure state, stored descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    mu: Vec<f64>,
}

impl SchmidtSpectrum {
    pub fn new(mut mu: Vec<f64>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::Domain("empty Schmidt vector".into()));
        }
        if mu.iter().any(|m| !m.is_finite() || *m < -TOL.psd_clamp) {
            return Err(Error::Domain("Schmidt coefficients must be non-negative".into()));
        }
        let sum: f64 = mu.iter().sum();
        if (sum - 1.0).abs() > TOL.trace {
            return Err(Error::Domain(format!("Schmidt coefficients sum to {sum}")));
        }
        for m in mu.iter_mut() {
            *m = m.max(0.0);
        }
        mu.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { mu })
    }

    /// (λ₊, λ₋) for a two-qubit state of concurrence C.
    pub fn from_concurrence(c: f64) -> Result<Self> {
        let (lp, lm) = lambdas(check_concurrence(c)?);
        Ok(Self { mu: vec![lp, lm] })
    }

    /// Schmidt coefficients of a unit vector on C^dim_a ⊗ C^dim_b.
    pub fn of_state(psi: &[Complex64], dim_a: usize, dim_b: usize) -> Result<Self> {
        if psi.len() != dim_a * dim_b {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {dim_a}x{dim_b}",
                psi.len()
            )));
        }
        let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if (n2 - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(n2));
        }
        let mut mu = schmidt_coefficients(psi, dim_a, dim_b);
        let sum: f64 = mu.iter().sum();
        for m in mu.iter_mut() {
            *m /= sum;
        }
        Ok(Self { mu })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.mu
    }
}

/// Schmidt coefficients (squared singular values of the coefficient
/// matrix), descending and clamped at zero. No normalization is applied.
pub fn schmidt_coefficients(psi: &[Complex64], dim_a: usize, dim_b: usize) -> Vec<f64> {
    if dim_a == 2 && dim_b == 2 {
        let (a, b, c, d) = (psi[0], psi[1], psi[2], psi[3]);
        let total = psi.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let det = (a * d - b * c).norm_sqr();
        // ρ_A = M M†, eigenvalues from trace and determinant
        let r00 = a.norm_sqr() + b.norm_sqr();
        let r11 = c.norm_sqr() + d.norm_sqr();
        let r01 = a * c.conj() + b * d.conj();
        let disc = ((r00 - r11).powi(2) + 4.0 * r01.norm_sqr()).sqrt();
        let lp = 0.5 * (total + disc);
        let lm = if lp > 0.0 { det / lp } else { 0.0 };
        return vec![lp, lm.max(0.0)];
    }
    // reduce onto the smaller factor
    let (small, large, transpose) = if dim_a <= dim_b {
        (dim_a, dim_b, false)
    } else {
        (dim_b, dim_a, true)
    };
    let coeff = |i: usize, k: usize| {
        if transpose {
            psi[k * dim_b + i]
        } else {
            psi[i * dim_b + k]
        }
    };
    if small == 3 {
        let m: Vec<[Complex64; 3]> = (0..large).map(|k| [coeff(0, k), coeff(1, k), coeff(2, k)]).collect();
        return three_schmidt(&m).to_vec();
    }
    let reduced = ComplexMatrix::from_fn(small, small, |i, j| {
        (0..large).map(|k| coeff(i, k) * coeff(j, k).conj()).sum()
    });
    let mut ev = hermitian_eigenvalues(&reduced).expect("reduced state is Hermitian");
    for e in ev.iter_mut() {
        *e = e.max(0.0);
    }
    ev
}

/// Eigenvalues of ρ_A = M M† for a 3 × n coefficient matrix M, given by
/// columns. The invariants e₂ and e₃ are taken from squared minors of M
/// (Cauchy–Binet), so small Schmidt coefficients keep their relative
/// accuracy instead of drowning in the rounding of ρ_A.
fn three_schmidt(cols: &[[Complex64; 3]]) -> [f64; 3] {
    let e1: f64 = cols.iter().flatten().map(|z| z.norm_sqr()).sum();
    if e1 == 0.0 {
        return [0.0; 3];
    }
    let mut e2 = 0.0;
    let mut e3 = 0.0;
    for (j, a) in cols.iter().enumerate() {
        for (k, b) in cols.iter().enumerate().skip(j + 1) {
            for (r, s) in [(0, 1), (0, 2), (1, 2)] {
                e2 += (a[r] * b[s] - a[s] * b[r]).norm_sqr();
            }
            for c in &cols[k + 1..] {
                let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
                    + c[0] * (a[1] * b[2] - a[2] * b[1]);
                e3 += det.norm_sqr();
            }
        }
    }
    // largest root of x³ − e1 x² + e2 x − e3, trigonometric form
    let q = e1 / 3.0;
    let p = ((e1 * e1 - 3.0 * e2) / 9.0).max(0.0);
    let l1 = if p == 0.0 {
        q
    } else {
        let r = (2.0 * e1 * e1 * e1 - 9.0 * e1 * e2 + 27.0 * e3) / 54.0;
        let phi = (r / (p * p.sqrt())).clamp(-1.0, 1.0).acos();
        q + 2.0 * p.sqrt() * (phi / 3.0).cos()
    };
    // the other two from λ₂λ₃ = e3/λ₁ and λ₂ + λ₃ = (e2 − λ₂λ₃)/λ₁
    let prod = e3 / l1;
    let sum = ((e2 - prod) / l1).max(0.0);
    let l2 = 0.5 * (sum + (sum * sum - 4.0 * prod).max(0.0).sqrt());
    let l3 = if l2 > 0.0 { (prod / l2).min(l2) } else { 0.0 };
    [l1, l2, l3]
}

/// Rényi entropy in bits of a probability vector, without validation.
/// Entries at or below the rank cutoff are ignored in the α → 0 limit.
pub fn renyi_of_probs(mu: &[f64], alpha: Alpha) -> f64 {
    match alpha.mode {
        AlphaMode::ZeroLimit => {
            let rank = mu.iter().filter(|&&m| m > TOL.rank_cutoff).count();
            (rank.max(1) as f64).log2()
        }
        // 0 − Σ rather than −Σ, so a product state gives +0 and not −0
        AlphaMode::VonNeumannLimit => 0.0 - mu
            .iter()
            .filter(|&&m| m > 0.0)
            .map(|&m| m * m.log2())
            .sum::<f64>(),
        AlphaMode::Generic => {
            let a = alpha.value;
            let s: f64 = mu.iter().filter(|&&m| m > 0.0).map(|&m| m.powf(a)).sum();
            let h = s.log2() / (1.0 - a);
            // a pure product spectrum gives log(1) = 0 up to rounding
            h.max(0.0)
        }
    }
}

/// R_α of a pure state with Schmidt vector μ.
pub fn renyi_pure(mu: &SchmidtSpectrum, alpha: Alpha) -> f64 {
    renyi_of_probs(&mu.mu, alpha)
}

fn check_concurrence(c: f64) -> Result<f64> {
    if !c.is_finite() || !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::Domain(format!("concurrence {c} outside [0, 1]")));
    }
    Ok(c.clamp(0.0, 1.0))
}

/// λ± = (1 ± √(1−C²))/2, with λ₋ = C²/(4λ₊) to keep precision near C = 0.
fn lambdas(c: f64) -> (f64, f64) {
    let s = (1.0 - c * c).max(0.0).sqrt();
    let lp = 0.5 * (1.0 + s);
    (lp, c * c / (4.0 * lp))
}

/// Ω(C, α): the Rényi α-entropy of a two-qubit pure state with concurrence C.
pub fn omega(c: f64, alpha: Alpha) -> Result<f64> {
    let c = check_concurrence(c)?;
    Ok(omega_unchecked(c, alpha))
}

pub(crate) fn omega_unchecked(c: f64, alpha: Alpha) -> f64 {
    if alpha.mode == AlphaMode::ZeroLimit {
        return if c > 0.0 { 1.0 } else { 0.0 };
    }
    let (lp, lm) = lambdas(c);
    renyi_of_probs(&[lp, lm], alpha)
}

fn open_concurrence(c: f64) -> Result<f64> {
    if !c.is_finite() || c <= 0.0 || c >= 1.0 {
        return Err(Error::Domain(format!(
            "derivatives of Ω need C in the open interval (0, 1), got {c}"
        )));
    }
    Ok(c)
}

/// ∂Ω/∂C in bits.
pub fn omega_dc(c: f64, alpha: Alpha) -> Result<f64> {
    let c = open_concurrence(c)?;
    let s = (1.0 - c * c).sqrt();
    let (lp, lm) = lambdas(c);
    let d1 = c / (2.0 * s);
    let nats = match alpha.mode {
        AlphaMode::ZeroLimit => 0.0,
        AlphaMode::VonNeumannLimit => (lp / lm).ln() * d1,
        AlphaMode::Generic => {
            let a = alpha.value;
            let x = lm / lp;
            let sum = lp.powf(a) + lm.powf(a);
            a * lp.powf(a - 1.0) * d1 * (1.0 - x.powf(a - 1.0)) / ((a - 1.0) * sum)
        }
    };
    Ok(nats / std::f64::consts::LN_2)
}

/// ∂²Ω/∂C² in bits, via the K / g(x, α) factorization with x = λ₋/λ₊.
pub fn omega_d2c(c: f64, alpha: Alpha) -> Result<f64> {
    let c = open_concurrence(c)?;
    let s = (1.0 - c * c).sqrt();
    let (lp, lm) = lambdas(c);
    let d1 = c / (2.0 * s);
    let nats = match alpha.mode {
        AlphaMode::ZeroLimit => 0.0,
        AlphaMode::VonNeumannLimit => {
            // d/dC [ln(λ₊/λ₋)·C/(2s)]
            -1.0 / (s * s) + (lp / lm).ln() / (2.0 * s * s * s)
        }
        AlphaMode::Generic => {
            let a = alpha.value;
            let x = lm / lp;
            let g = 1.0 - x.powf(2.0 * a - 1.0) - (2.0 * a - 1.0) * (1.0 - x) * x.powf(a - 1.0);
            let k = (1.0 - x.powf(a - 1.0)).powi(2)
                + (1.0 + x).powi(2) / (2.0 * x * (1.0 - x)) * g;
            let sum = lp.powf(a) + lm.powf(a);
            -a * lp.powf(2.0 * a - 2.0) * d1 * d1 / ((1.0 - a) * sum * sum) * k
        }
    };
    Ok(nats / std::f64::consts::LN_2)
}

/// (√7 − 1)/2, the positive root of 3(α−1) + (2α−1)α = 0.
pub fn alpha_critical() -> f64 {
    (7f64.sqrt() - 1.0) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Convexity {
    ConcaveEverywhere,
    ConvexEverywhere,
    /// Convex on (0, C₀), concave on (C₀, 1).
    SignChangeAt(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityReport {
    pub alpha: f64,
    pub kind: Convexity,
}

const C0_LO: f64 = 1e-6;
const C0_HI: f64 = 1.0 - 1e-6;
const C0_TOL: f64 = 1e-10;

/// Shape of C ↦ Ω(C, α) on (0, 1) for α ∈ (0, 1).
pub fn convexity_region(alpha: f64) -> Result<ConvexityReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let kind = if alpha <= 0.5 {
        Convexity::ConcaveEverywhere
    } else if alpha >= alpha_critical() {
        Convexity::ConvexEverywhere
    } else {
        let a = Alpha::new(alpha)?;
        let f = |c: f64| omega_d2c(c, a).expect("interior point");
        let (mut lo, mut hi) = (C0_LO, C0_HI);
        let (flo, fhi) = (f(lo), f(hi));
        if flo >= 0.0 && fhi >= 0.0 {
            Convexity::ConvexEverywhere
        } else if flo <= 0.0 && fhi <= 0.0 {
            Convexity::ConcaveEverywhere
        } else {
            let lo_sign = flo > 0.0;
            while hi - lo > C0_TOL {
                let mid = 0.5 * (lo + hi);
                if (f(mid) > 0.0) == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Convexity::SignChangeAt(0.5 * (lo + hi))
        }
    };
    Ok(ConvexityReport { alpha, kind })
}
