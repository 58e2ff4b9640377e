//! Werner (U⊗U-invariant) and isotropic (U⊗U*-invariant) states.
//!
//! For both families the ERαE is the convex hull, in the family parameter F,
//! of the smallest pure-state entropy compatible with that F:
//!
//! - Werner: ω(F, α) = Ω(F, α) for F > 0 and 0 otherwise, independent of d.
//! - Isotropic: η(F, α, d), the Rényi entropy of the Schmidt vector
//!   (γ, (1−γ)/(d−1), …) with γ = (√F + √((d−1)(1−F)))²/d, zero for F ≤ 1/d.
//!
//! Hulls are cached per (family, α, d, grid) so that curve sweeps which
//! revisit the same α do not resample.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::config::TOL;
use crate::convex_hull::{lower_envelope, HullCurve, HullOptions, DEFAULT_GRID};
use crate::error::{Error, Result};
use crate::linalg::{swap_operator, ComplexMatrix, DensityMatrix, ONE, ZERO};
use crate::pure_entropy::{omega_unchecked, Alpha, AlphaMode};

pub const BREAKPOINT_NODE_OFFSET: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Werner,
    Isotropic,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Werner => "werner",
            Family::Isotropic => "isotropic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerSpec {
    d: usize,
    f: f64,
}

impl WernerSpec {
    /// F ∈ [−1, 1]; separable iff F ≤ 0.
    pub fn new(d: usize, f: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidSpec(format!("Werner dimension must be >= 2, got {d}")));
        }
        if !f.is_finite() || !(-1.0..=1.0).contains(&f) {
            return Err(Error::InvalidSpec(format!("Werner F must lie in [-1, 1], got {f}")));
        }
        Ok(Self { d, f })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn is_separable(&self) -> bool {
        self.f <= 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicSpec {
    d: usize,
    f: f64,
}

impl IsotropicSpec {
    /// F ∈ [0, 1]; separable iff F ≤ 1/d.
    pub fn new(d: usize, f: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidSpec(format!("isotropic dimension must be >= 2, got {d}")));
        }
        if !f.is_finite() || !(0.0..=1.0).contains(&f) {
            return Err(Error::InvalidSpec(format!("isotropic F must lie in [0, 1], got {f}")));
        }
        Ok(Self { d, f })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn is_separable(&self) -> bool {
        self.f <= 1.0 / self.d as f64
    }
}

/// (1−F)/2 · (I+𝔽)/(d²+d) + (1+F)/2 · (I−𝔽)/(d²−d)
pub fn werner_density(spec: &WernerSpec) -> DensityMatrix {
    let d = spec.d;
    let n = (d * d) as f64;
    let sym = (1.0 - spec.f) / 2.0 / (n + d as f64);
    let anti = (1.0 + spec.f) / 2.0 / (n - d as f64);
    let swap = swap_operator(d);
    let id = ComplexMatrix::identity(d * d);
    let m = id.scale_real(sym + anti).add(&swap.scale_real(sym - anti));
    DensityMatrix::new(m, d, d).expect("Werner matrix is a valid state")
}

/// |Ψ⁺⟩ = Σᵢ |ii⟩/√d
pub fn max_entangled(d: usize) -> Vec<Complex64> {
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    (0..d * d)
        .map(|k| if k / d == k % d { amp } else { ZERO })
        .collect()
}

/// F·P₊ + (1−F)(I−P₊)/(d²−1)
pub fn isotropic_density(spec: &IsotropicSpec) -> DensityMatrix {
    let d = spec.d;
    let p = ComplexMatrix::projector(&max_entangled(d));
    let rest = (1.0 - spec.f) / ((d * d) as f64 - 1.0);
    let m = p
        .scale_real(spec.f - rest)
        .add(&ComplexMatrix::identity(d * d).scale_real(rest));
    DensityMatrix::new(m, d, d).expect("isotropic matrix is a valid state")
}

fn local_dim(rho: &DensityMatrix) -> Result<usize> {
    if rho.dim_a() != rho.dim_b() {
        return Err(Error::DimensionMismatch(format!(
            "symmetric families need equal local dimensions, got {}x{}",
            rho.dim_a(),
            rho.dim_b()
        )));
    }
    Ok(rho.dim_a())
}

/// f_W(ρ) = −tr(𝔽ρ)
pub fn f_werner(rho: &DensityMatrix) -> Result<f64> {
    let d = local_dim(rho)?;
    let m = rho.matrix();
    let mut tr = ZERO;
    for i in 0..d {
        for j in 0..d {
            tr += m[(j * d + i, i * d + j)];
        }
    }
    Ok(-tr.re)
}

/// f_Ψ⁺(ρ) = ⟨Ψ⁺|ρ|Ψ⁺⟩
pub fn f_isotropic(rho: &DensityMatrix) -> Result<f64> {
    let d = local_dim(rho)?;
    let m = rho.matrix();
    let mut s = ZERO;
    for i in 0..d {
        for j in 0..d {
            s += m[(i * d + i, j * d + j)];
        }
    }
    Ok(s.re / d as f64)
}

/// U⊗U twirl, taken as the exact projection onto the Werner family member
/// with the same f_W.
pub fn twirl_werner(rho: &DensityMatrix) -> Result<WernerSpec> {
    let f = f_werner(rho)?;
    WernerSpec::new(rho.dim_a(), f.clamp(-1.0, 1.0))
}

/// U⊗U* twirl onto the isotropic family.
pub fn twirl_isotropic(rho: &DensityMatrix) -> Result<IsotropicSpec> {
    let f = f_isotropic(rho)?;
    IsotropicSpec::new(rho.dim_a(), f.clamp(0.0, 1.0))
}

/// ω(F, α): Ω(F, α) on (0, 1], zero on [−1, 0].
pub fn werner_omega(f: f64, alpha: Alpha) -> Result<f64> {
    if !f.is_finite() || !(-1.0..=1.0).contains(&f) {
        return Err(Error::Domain(format!("Werner F must lie in [-1, 1], got {f}")));
    }
    Ok(werner_omega_unchecked(f, alpha))
}

fn werner_omega_unchecked(f: f64, alpha: Alpha) -> f64 {
    if f <= TOL.breakpoint_snap {
        0.0
    } else {
        omega_unchecked(f.min(1.0), alpha)
    }
}

fn check_iso_args(f: f64, d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!("dimension must be >= 2, got {d}")));
    }
    if !f.is_finite() || !(0.0..=1.0).contains(&f) {
        return Err(Error::Domain(format!("isotropic F must lie in [0, 1], got {f}")));
    }
    Ok(())
}

fn at_or_below_breakpoint(f: f64, d: usize) -> bool {
    f <= 1.0 / d as f64 + TOL.breakpoint_snap
}

/// γ(F, d) = (√F + √((d−1)(1−F)))²/d
pub fn gamma_iso(f: f64, d: usize) -> Result<f64> {
    check_iso_args(f, d)?;
    Ok(gamma_unchecked(f, d))
}

fn gamma_unchecked(f: f64, d: usize) -> f64 {
    let dm1 = (d - 1) as f64;
    let s = f.sqrt() + (dm1 * (1.0 - f)).sqrt();
    (s * s / d as f64).min(1.0)
}

fn binary_entropy(p: f64) -> f64 {
    let term = |q: f64| if q > 0.0 { -q * q.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}

/// η(F, α, d): zero for F ≤ 1/d, otherwise
/// (1−α)⁻¹ log[γ^α + (d−1)^(1−α) (1−γ)^α].
pub fn eta_iso(f: f64, alpha: Alpha, d: usize) -> Result<f64> {
    check_iso_args(f, d)?;
    Ok(eta_unchecked(f, alpha, d))
}

fn eta_unchecked(f: f64, alpha: Alpha, d: usize) -> f64 {
    if at_or_below_breakpoint(f, d) {
        return 0.0;
    }
    match alpha.mode() {
        // γ < 1 strictly above the breakpoint, so the Schmidt rank is d
        AlphaMode::ZeroLimit => (d as f64).log2(),
        AlphaMode::VonNeumannLimit => epsilon_unchecked(f, d),
        AlphaMode::Generic => {
            let a = alpha.value();
            let g = gamma_unchecked(f, d);
            let dm1 = (d - 1) as f64;
            let s = g.powf(a) + dm1.powf(1.0 - a) * (1.0 - g).powf(a);
            (s.log2() / (1.0 - a)).max(0.0)
        }
    }
}

/// ε(F, d) = H₂(γ) + (1−γ) log(d−1), the α → 1 limit of η.
pub fn epsilon_iso(f: f64, d: usize) -> Result<f64> {
    check_iso_args(f, d)?;
    Ok(epsilon_unchecked(f, d))
}

fn epsilon_unchecked(f: f64, d: usize) -> f64 {
    if at_or_below_breakpoint(f, d) {
        return 0.0;
    }
    let g = gamma_unchecked(f, d);
    binary_entropy(g) + (1.0 - g) * ((d - 1) as f64).log2()
}

/// ∂ε/∂F in bits, for F ∈ (1/d, 1), from the chain rule with
/// dγ/dF = −√(γ(1−γ))/√(F(1−F)).
pub fn epsilon_dfdf(f: f64, d: usize) -> Result<f64> {
    check_iso_args(f, d)?;
    if at_or_below_breakpoint(f, d) || f >= 1.0 {
        return Err(Error::Domain(format!("dε/dF needs F in (1/d, 1), got {f}")));
    }
    let g = gamma_unchecked(f, d);
    let dg = -(g * (1.0 - g)).sqrt() / (f * (1.0 - f)).sqrt();
    let de_dg = ((1.0 - g) / (g * (d - 1) as f64)).log2();
    Ok(de_dg * dg)
}

/// ∂²ε/∂F² in nats, for F ∈ (1/d, 1):
/// √(d−1) / (2d [F(1−F)]^{3/2}) · [ln(γ(d−1)/(1−γ)) − 2d√(F(1−F))/√(d−1)].
pub fn epsilon_d2f(f: f64, d: usize) -> Result<f64> {
    check_iso_args(f, d)?;
    if at_or_below_breakpoint(f, d) || f >= 1.0 {
        return Err(Error::Domain(format!("d²ε/dF² needs F in (1/d, 1), got {f}")));
    }
    let g = gamma_unchecked(f, d);
    let df = d as f64;
    let sq = (df - 1.0).sqrt();
    let ff = f * (1.0 - f);
    let bracket = (g * (df - 1.0) / (1.0 - g)).ln() - 2.0 * df * ff.sqrt() / sq;
    Ok(sq / (2.0 * df * ff.powf(1.5)) * bracket)
}

/// F₀ = 4(d−1)/d², where the tangent from (1, log d) touches ε.
pub fn iso_tangent_f(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!("dimension must be >= 2, got {d}")));
    }
    let df = d as f64;
    Ok(4.0 * (df - 1.0) / (df * df))
}

/// log d − ε − (1−F)·∂ε/∂F at F₀; zero when the tangent condition holds.
pub fn iso_tangent_residual(d: usize) -> Result<f64> {
    if d < 3 {
        return Err(Error::InvalidSpec(format!("tangent point needs d >= 3, got {d}")));
    }
    let f0 = iso_tangent_f(d)?;
    let eps = epsilon_unchecked(f0, d);
    Ok((d as f64).log2() - eps - (1.0 - f0) * epsilon_dfdf(f0, d)?)
}

/// Exact EoF of the isotropic state: 0, then ε(F, d), then the tangent line
/// through (1, log d) beyond F₀ = 4(d−1)/d².
pub fn eof_isotropic(spec: &IsotropicSpec) -> f64 {
    let (d, f) = (spec.d, spec.f);
    if at_or_below_breakpoint(f, d) {
        return 0.0;
    }
    if d == 2 {
        return epsilon_unchecked(f, d);
    }
    let f0 = 4.0 * (d - 1) as f64 / (d * d) as f64;
    if f <= f0 {
        epsilon_unchecked(f, d)
    } else {
        let df = d as f64;
        df * (df - 1.0).log2() / (df - 2.0) * (f - 1.0) + df.log2()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityWitness {
    pub d: usize,
    /// Interior zero of the quadratic governing f′(x), x = √((1−F)/(F(d−1))).
    pub x_plus: f64,
    /// h(√(d−1)) with h(x) = ln x − x/2 + 1/(2x); equals the minimum f(x₊).
    pub h_at_sqrt: f64,
    /// Sign changes of ∂²ε/∂F² on the F grid.
    pub sign_changes: usize,
    pub starts_convex: bool,
    pub ends_concave: bool,
    pub verified: bool,
}

/// Checks that ε(·, d) is convex then concave on (1/d, 1) with exactly one
/// inflection point, sampling ∂²ε/∂F² on a 1e-3 grid.
pub fn iso_eof_convexity_witness(d: usize) -> Result<ConvexityWitness> {
    if d <= 2 {
        return Err(Error::InvalidSpec(format!("convexity witness needs d >= 3, got {d}")));
    }
    let df = d as f64;
    let sq = (df - 1.0).sqrt();
    let x_plus = (-2.0 * sq + df) / ((df - 2.0) * sq);
    let h_at_sqrt = sq.ln() - sq / 2.0 + 1.0 / (2.0 * sq);

    let lo = 1.0 / df;
    let mut signs = Vec::new();
    let mut k = 1;
    loop {
        let f = lo + k as f64 * 1e-3;
        if f >= 1.0 {
            break;
        }
        signs.push(epsilon_d2f(f, d)? > 0.0);
        k += 1;
    }
    let sign_changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let starts_convex = signs.first().copied().unwrap_or(false);
    let ends_concave = !signs.last().copied().unwrap_or(true);
    Ok(ConvexityWitness {
        d,
        x_plus,
        h_at_sqrt,
        sign_changes,
        starts_convex,
        ends_concave,
        verified: sign_changes == 1 && starts_convex && ends_concave && x_plus > 0.0 && x_plus < 1.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct HullKey {
    family: Family,
    alpha_e12: i64,
    d: usize,
    grid: usize,
}

type HullCache = RwLock<HashMap<HullKey, Arc<HullCurve>>>;

fn cache() -> &'static HullCache {
    static CACHE: OnceLock<HullCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cached co(ω) (Werner, over [−1, 1]) or co(η) (isotropic, over [0, 1]).
pub fn family_hull(family: Family, alpha: Alpha, d: usize, grid: usize) -> Result<Arc<HullCurve>> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!("dimension must be >= 2, got {d}")));
    }
    let key = HullKey {
        family,
        alpha_e12: (alpha.value() * 1e12).round() as i64,
        d,
        grid,
    };
    if let Some(h) = cache().read().expect("hull cache poisoned").get(&key) {
        return Ok(Arc::clone(h));
    }
    let hull = Arc::new(match family {
        Family::Werner => {
            let opts = HullOptions::with_grid(grid).nodes([
                -BREAKPOINT_NODE_OFFSET,
                0.0,
                BREAKPOINT_NODE_OFFSET,
            ]);
            lower_envelope(|f| werner_omega_unchecked(f, alpha), -1.0, 1.0, &opts)?
        }
        Family::Isotropic => {
            let b = 1.0 / d as f64;
            let opts = HullOptions::with_grid(grid).nodes([
                b - BREAKPOINT_NODE_OFFSET,
                b,
                b + BREAKPOINT_NODE_OFFSET,
            ]);
            lower_envelope(|f| eta_unchecked(f, alpha, d), 0.0, 1.0, &opts)?
        }
    });
    // identical keys always produce identical hulls, so a racing insert is harmless
    cache()
        .write()
        .expect("hull cache poisoned")
        .insert(key, Arc::clone(&hull));
    Ok(hull)
}

/// R_α of a Werner state: co(ω)(F), the same for every d.
pub fn erae_werner(spec: &WernerSpec, alpha: Alpha) -> Result<f64> {
    erae_werner_with_grid(spec, alpha, DEFAULT_GRID)
}

pub fn erae_werner_with_grid(spec: &WernerSpec, alpha: Alpha, grid: usize) -> Result<f64> {
    if spec.f <= TOL.breakpoint_snap {
        return Ok(0.0);
    }
    family_hull(Family::Werner, alpha, spec.d, grid)?
        .evaluate(spec.f)
        .map(|v| v.max(0.0))
}

/// R_α of an isotropic state: co(η)(F).
pub fn erae_isotropic(spec: &IsotropicSpec, alpha: Alpha) -> Result<f64> {
    erae_isotropic_with_grid(spec, alpha, DEFAULT_GRID)
}

pub fn erae_isotropic_with_grid(spec: &IsotropicSpec, alpha: Alpha, grid: usize) -> Result<f64> {
    if at_or_below_breakpoint(spec.f, spec.d) {
        return Ok(0.0);
    }
    family_hull(Family::Isotropic, alpha, spec.d, grid)?
        .evaluate(spec.f)
        .map(|v| v.max(0.0))
}

/// Computational-basis vector |i⟩ ⊗ |j⟩ on C^d ⊗ C^d.
pub fn product_basis(d: usize, i: usize, j: usize) -> Vec<Complex64> {
    let mut v = vec![ZERO; d * d];
    v[i * d + j] = ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(WernerSpec::new(1, 0.5).is_err());
        assert!(WernerSpec::new(2, 1.5).is_err());
        assert!(WernerSpec::new(2, -1.0).is_ok());
        assert!(IsotropicSpec::new(3, -0.1).is_err());
        assert!(IsotropicSpec::new(3, f64::NAN).is_err());
        assert!(IsotropicSpec::new(3, 1.0 / 3.0).unwrap().is_separable());
        assert!(WernerSpec::new(3, 0.0).unwrap().is_separable());
    }

    #[test]
    fn werner_density_examples() {
        let rho = werner_density(&WernerSpec::new(2, 1.0).unwrap());
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = [ZERO, Complex64::new(h, 0.0), Complex64::new(-h, 0.0), ZERO];
        assert!(rho.matrix().max_abs_diff(&ComplexMatrix::projector(&singlet)) < 1e-15);

        let rho = werner_density(&WernerSpec::new(2, -1.0).unwrap());
        let want = ComplexMatrix::identity(4).add(&swap_operator(2)).scale_real(1.0 / 6.0);
        assert!(rho.matrix().max_abs_diff(&want) < 1e-15);

        let rho = werner_density(&WernerSpec::new(3, 0.8).unwrap());
        let tr = swap_operator(3).matmul(rho.matrix()).trace().re;
        assert!((tr + 0.8).abs() < 1e-12);
        assert!((f_werner(&rho).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn isotropic_density_examples() {
        for d in 2..5 {
            let p = ComplexMatrix::projector(&max_entangled(d));
            let rho = isotropic_density(&IsotropicSpec::new(d, 1.0).unwrap());
            assert!(rho.matrix().max_abs_diff(&p) < 1e-15);
            let n = (d * d) as f64;
            let rho = isotropic_density(&IsotropicSpec::new(d, 1.0 / n).unwrap());
            assert!(rho.matrix().max_abs_diff(&ComplexMatrix::identity(d * d).scale_real(1.0 / n)) < 1e-15);
        }
        let rho = isotropic_density(&IsotropicSpec::new(3, 0.85).unwrap());
        assert!((f_isotropic(&rho).unwrap() - 0.85).abs() < 1e-12);
    }

    #[test]
    fn fidelity_functionals() {
        for d in 2..5 {
            let n = (d * d) as f64;
            let mixed = DensityMatrix::new(ComplexMatrix::identity(d * d).scale_real(1.0 / n), d, d).unwrap();
            assert!((f_werner(&mixed).unwrap() + 1.0 / d as f64).abs() < 1e-15);
            assert!((f_isotropic(&mixed).unwrap() - 1.0 / n).abs() < 1e-15);
            let p = DensityMatrix::from_pure(&max_entangled(d), d, d).unwrap();
            assert!((f_isotropic(&p).unwrap() - 1.0).abs() < 1e-14);
        }
        let singlet = werner_density(&WernerSpec::new(2, 1.0).unwrap());
        assert!((f_werner(&singlet).unwrap() - 1.0).abs() < 1e-15);
        let lopsided = DensityMatrix::new(ComplexMatrix::identity(6).scale_real(1.0 / 6.0), 2, 3).unwrap();
        assert!(matches!(f_werner(&lopsided), Err(Error::DimensionMismatch(_))));
        assert!(f_isotropic(&lopsided).is_err());
    }

    #[test]
    fn twirl_idempotence() {
        let w = WernerSpec::new(3, 0.4).unwrap();
        let t = twirl_werner(&werner_density(&w)).unwrap();
        assert_eq!(t.d(), 3);
        assert!((t.f() - 0.4).abs() < 1e-12);
        let d = 3;
        let n = (d * d) as f64;
        let mixed = DensityMatrix::new(ComplexMatrix::identity(9).scale_real(1.0 / n), d, d).unwrap();
        assert!((twirl_isotropic(&mixed).unwrap().f() - 1.0 / n).abs() < 1e-15);
    }

    #[test]
    fn omega_family_branches() {
        for &v in &[0.0, 0.3, 1.0, 2.0] {
            assert_eq!(werner_omega(-0.5, a(v)).unwrap(), 0.0);
            assert!((werner_omega(1.0, a(v)).unwrap() - 1.0).abs() < 1e-14);
        }
        let want = crate::pure_entropy::omega(0.8, a(0.9)).unwrap();
        assert_eq!(werner_omega(0.8, a(0.9)).unwrap(), want);
        assert!(werner_omega(1.2, a(0.5)).is_err());
    }

    #[test]
    fn gamma_examples() {
        for d in 2..7 {
            assert!((gamma_iso(1.0 / d as f64, d).unwrap() - 1.0).abs() < 1e-15);
            assert!((gamma_iso(1.0, d).unwrap() - 1.0 / d as f64).abs() < 1e-15);
        }
        assert!((gamma_iso(0.85, 3).unwrap() - 0.719984).abs() < 1e-6);
        assert!(gamma_iso(1.1, 3).is_err());
        assert!(gamma_iso(0.5, 1).is_err());
    }

    #[test]
    fn eta_and_epsilon_examples() {
        for d in 2..6 {
            let b = 1.0 / d as f64;
            let ld = (d as f64).log2();
            for &v in &[0.0, 0.4, 1.0, 2.5] {
                assert_eq!(eta_iso(b, a(v), d).unwrap(), 0.0);
                assert!((eta_iso(1.0, a(v), d).unwrap() - ld).abs() < 1e-12, "d={d} a={v}");
            }
            assert_eq!(epsilon_iso(b, d).unwrap(), 0.0);
            assert!((epsilon_iso(1.0, d).unwrap() - ld).abs() < 1e-12);
        }
        // independent: H₂(γ) + (1−γ)·log₂2 with γ from its definition
        let g: f64 = ((0.85f64).sqrt() + (2.0f64 * 0.15).sqrt()).powi(2) / 3.0;
        let want = -(g * g.log2() + (1.0 - g) * (1.0 - g).log2()) + (1.0 - g);
        let e = epsilon_iso(0.85, 3).unwrap();
        assert!((e - want).abs() < 1e-14);
        assert!((e - 1.13549).abs() < 1e-5);
        assert_eq!(eta_iso(0.85, Alpha::von_neumann(), 3).unwrap(), e);
    }

    #[test]
    fn eof_examples() {
        for d in 2..8 {
            let b = 1.0 / d as f64;
            assert_eq!(eof_isotropic(&IsotropicSpec::new(d, b).unwrap()), 0.0);
            let top = eof_isotropic(&IsotropicSpec::new(d, 1.0).unwrap());
            assert!((top - (d as f64).log2()).abs() < 1e-12);
        }
        let v = eof_isotropic(&IsotropicSpec::new(3, 0.85).unwrap());
        assert_eq!(v, epsilon_iso(0.85, 3).unwrap());
        let v = eof_isotropic(&IsotropicSpec::new(3, 0.95).unwrap());
        assert!((v - (3.0 * (0.95 - 1.0) + 3f64.log2())).abs() < 1e-12);
        assert!((v - 1.43496).abs() < 1e-5);
    }

    #[test]
    fn tangent_point() {
        assert!((iso_tangent_f(3).unwrap() - 8.0 / 9.0).abs() < 1e-15);
        assert!((iso_tangent_f(4).unwrap() - 0.75).abs() < 1e-15);
        assert_eq!(iso_tangent_f(2).unwrap(), 1.0);
        assert!(iso_tangent_f(1).is_err());
        for d in 3..=10 {
            assert!(iso_tangent_residual(d).unwrap().abs() < 1e-8, "d={d}");
        }
    }

    #[test]
    fn convexity_witness() {
        let w = iso_eof_convexity_witness(3).unwrap();
        let want = (3.0 - 2.0 * 2f64.sqrt()) / 2f64.sqrt();
        assert!((w.x_plus - want).abs() < 1e-15);
        assert!((w.x_plus - 0.12132).abs() < 1e-5);
        for d in 3..=10 {
            let w = iso_eof_convexity_witness(d).unwrap();
            assert_eq!(w.sign_changes, 1, "d={d}");
            assert!(w.verified);
            assert!(w.h_at_sqrt < 0.0);
        }
        assert!(iso_eof_convexity_witness(2).is_err());
    }

    #[test]
    fn second_derivative_matches_finite_difference() {
        for &(f, d) in &[(0.5, 3), (0.9, 3), (0.6, 5)] {
            let h = 1e-4;
            let e = |x: f64| epsilon_iso(x, d).unwrap() * std::f64::consts::LN_2;
            let fd = (e(f + h) - 2.0 * e(f) + e(f - h)) / (h * h);
            let an = epsilon_d2f(f, d).unwrap();
            assert!(((fd - an) / an).abs() < 1e-4, "F={f} d={d}: {fd} vs {an}");
            let fd1 = (epsilon_iso(f + h, d).unwrap() - epsilon_iso(f - h, d).unwrap()) / (2.0 * h);
            let an1 = epsilon_dfdf(f, d).unwrap();
            assert!(((fd1 - an1) / an1).abs() < 1e-6);
        }
    }

    #[test]
    fn werner_erae_examples() {
        let s = WernerSpec::new(3, -0.3).unwrap();
        assert_eq!(erae_werner(&s, a(0.5)).unwrap(), 0.0);
        let s = WernerSpec::new(3, 0.8).unwrap();
        assert!((erae_werner(&s, Alpha::zero()).unwrap() - 0.8).abs() < 1e-9);
        let vn = erae_werner(&s, Alpha::von_neumann()).unwrap();
        let want = crate::pure_entropy::omega(0.8, Alpha::von_neumann()).unwrap();
        assert!((vn - want).abs() < 1e-9);
    }

    #[test]
    fn isotropic_erae_examples() {
        let s = IsotropicSpec::new(3, 0.3).unwrap();
        assert_eq!(erae_isotropic(&s, a(0.5)).unwrap(), 0.0);
        let s = IsotropicSpec::new(3, 0.7).unwrap();
        let want = (0.7 * 3.0 - 1.0) / 2.0 * 3f64.log2();
        assert!((erae_isotropic(&s, Alpha::zero()).unwrap() - want).abs() < 1e-9);
        let s = IsotropicSpec::new(3, 0.95).unwrap();
        let v = erae_isotropic(&s, Alpha::von_neumann()).unwrap();
        assert!((v - eof_isotropic(&s)).abs() < 1e-6);
    }
}
