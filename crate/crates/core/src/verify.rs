//! Named property suites that cross-check the closed forms against each
//! other, against their defining limits and against the roof oracle.
//! The CLI's `verify` command is a thin wrapper around [`run`].

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convex_hull::{lower_envelope, HullOptions};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};
use crate::pure_entropy::{alpha_critical, convexity_region, omega, omega_d2c, omega_dc, Alpha, Convexity};
use crate::random::{random_density, random_pure};
use crate::roof_oracle::{minimize_roof, OracleConfig};
use crate::symmetric::{
    eof_isotropic, erae_isotropic, erae_werner, family_hull, iso_eof_convexity_witness, iso_tangent_f,
    iso_tangent_residual, werner_density, Family, IsotropicSpec, WernerSpec,
};
use crate::two_qubit::{concurrence_mixed, erae_closed_form, TwoQubitState};

pub const SUITES: &[&str] = &[
    "alpha-critical",
    "omega-derivatives",
    "werner-alpha-zero",
    "werner-dimension",
    "iso-alpha-zero",
    "iso-eof-d3",
    "hull-properties",
    "monogamy",
    "oracle-vs-closed-form",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The measured quantity (an error, a residual, or a reported value).
    pub value: f64,
    /// The bound it was held to.
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifySummary {
    /// Names of failing checks as `suite/check`.
    pub fn failures(&self) -> Vec<String> {
        self.suites
            .iter()
            .flat_map(|s| {
                s.checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(move |c| format!("{}/{}", s.suite, c.name))
            })
            .collect()
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    /// Passes when `value ≤ tolerance`.
    fn at_most(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        self.0.push(Check {
            name: name.into(),
            passed: value <= tolerance,
            value,
            tolerance,
        });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push(Check {
            name: name.into(),
            passed: ok,
            value: if ok { 1.0 } else { 0.0 },
            tolerance: 1.0,
        });
    }

    /// Records a value with no bound attached.
    fn report(&mut self, name: impl Into<String>, value: f64) {
        self.0.push(Check {
            name: name.into(),
            passed: true,
            value,
            tolerance: f64::INFINITY,
        });
    }
}

/// Runs one suite, or all of them when `suite` is `None`.
pub fn run(suite: Option<&str>) -> Result<VerifySummary> {
    let names: Vec<&str> = match suite {
        Some(s) if SUITES.contains(&s) => vec![s],
        Some(s) => {
            return Err(Error::InvalidSpec(format!(
                "unknown suite '{s}'; known: {}",
                SUITES.join(", ")
            )))
        }
        None => SUITES.to_vec(),
    };
    let suites = names.into_iter().map(run_suite).collect::<Result<Vec<_>>>()?;
    Ok(VerifySummary {
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let checks = match name {
        "alpha-critical" => alpha_critical_suite()?,
        "omega-derivatives" => omega_derivatives_suite()?,
        "werner-alpha-zero" => werner_alpha_zero_suite()?,
        "werner-dimension" => werner_dimension_suite()?,
        "iso-alpha-zero" => iso_alpha_zero_suite()?,
        "iso-eof-d3" => iso_eof_suite(3)?,
        "hull-properties" => hull_properties_suite(200, 17)?,
        "monogamy" => monogamy_suite(200, 5)?,
        "oracle-vs-closed-form" => oracle_suite()?,
        other => return Err(Error::InvalidSpec(format!("unknown suite '{other}'"))),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        passed: checks.0.iter().all(|c| c.passed),
        checks: checks.0,
    })
}

fn alpha_critical_suite() -> Result<Checks> {
    let mut c = Checks::default();
    let a = alpha_critical();
    c.report("alpha_c", a);
    c.at_most("closed form (sqrt7-1)/2", (a - (7f64.sqrt() - 1.0) / 2.0).abs(), 1e-9);
    c.at_most("quadratic residual", (3.0 * (a - 1.0) + (2.0 * a - 1.0) * a).abs(), 1e-12);
    c.holds(
        "concave at 1/2",
        convexity_region(0.5)?.kind == Convexity::ConcaveEverywhere,
    );
    c.holds(
        "convex at alpha_c",
        convexity_region(a)?.kind == Convexity::ConvexEverywhere,
    );
    c.holds(
        "single sign change at 0.7",
        matches!(convexity_region(0.7)?.kind, Convexity::SignChangeAt(x) if x > 0.0 && x < 1.0),
    );
    Ok(c)
}

fn omega_derivatives_suite() -> Result<Checks> {
    let mut c = Checks::default();
    let h = 1e-5;
    let (mut first, mut second): (f64, f64) = (0.0, 0.0);
    for &a in &[0.3, 0.9, 1.0, 2.0, 5.0] {
        let alpha = Alpha::new(a)?;
        for &x in &[0.2, 0.6, 0.9] {
            let fd1 = (omega(x + h, alpha)? - omega(x - h, alpha)?) / (2.0 * h);
            let d1 = omega_dc(x, alpha)?;
            first = first.max((fd1 - d1).abs() / d1.abs().max(1.0));
            let fd2 = (omega_dc(x + h, alpha)? - omega_dc(x - h, alpha)?) / (2.0 * h);
            let d2 = omega_d2c(x, alpha)?;
            second = second.max((fd2 - d2).abs() / d2.abs().max(1.0));
        }
    }
    c.at_most("first derivative vs finite difference", first, 1e-5);
    c.at_most("second derivative vs finite difference", second, 1e-5);
    Ok(c)
}

fn werner_alpha_zero_suite() -> Result<Checks> {
    let mut c = Checks::default();
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for k in 1..=9 {
            let f = k as f64 / 10.0;
            let v = erae_werner(&WernerSpec::new(d, f)?, Alpha::zero())?;
            worst = worst.max((v - f).abs());
        }
    }
    c.at_most("R_0 = F", worst, 1e-6);
    Ok(c)
}

fn werner_dimension_suite() -> Result<Checks> {
    let mut c = Checks::default();
    let mut worst: f64 = 0.0;
    for &a in &[0.0, 0.3, 0.7, 1.0, 2.0] {
        let alpha = Alpha::new(a)?;
        for k in 0..=20 {
            let f = -1.0 + k as f64 / 10.0;
            let v2 = erae_werner(&WernerSpec::new(2, f)?, alpha)?;
            let v5 = erae_werner(&WernerSpec::new(5, f)?, alpha)?;
            worst = worst.max((v2 - v5).abs());
        }
    }
    c.at_most("d=2 vs d=5", worst, 1e-9);
    Ok(c)
}

fn iso_alpha_zero_suite() -> Result<Checks> {
    let mut c = Checks::default();
    for d in [2usize, 3, 5] {
        let df = d as f64;
        let mut worst: f64 = 0.0;
        for k in 0..=100 {
            let f = 1.0 / df + (1.0 - 1.0 / df) * k as f64 / 100.0;
            if f <= 1.0 / df {
                continue;
            }
            let v = erae_isotropic(&IsotropicSpec::new(d, f)?, Alpha::zero())?;
            let want = (f * df - 1.0) / (df - 1.0) * df.log2();
            worst = worst.max((v - want).abs());
        }
        c.at_most(format!("d={d} linear law"), worst, 1e-6);
    }
    Ok(c)
}

/// Checks the isotropic EoF formula against its own pieces and against the hull.
fn iso_eof_checks(d: usize, c: &mut Checks, grid_step: f64) -> Result<()> {
    let df = d as f64;
    let eof = |f: f64| IsotropicSpec::new(d, f).map(|s| eof_isotropic(&s));
    let eps = 1e-12;
    let b = 1.0 / df;
    c.at_most(
        format!("d={d} continuity at 1/d"),
        (eof(b + eps)? - eof(b)?).abs(),
        1e-9,
    );
    let f0 = iso_tangent_f(d)?;
    if d > 2 {
        c.at_most(
            format!("d={d} continuity at F0"),
            (eof(f0 + eps)? - eof(f0 - eps)?).abs(),
            1e-9,
        );
        c.at_most(format!("d={d} tangent residual"), iso_tangent_residual(d)?.abs(), 1e-8);
    }
    let hull = family_hull(Family::Isotropic, Alpha::von_neumann(), d, crate::convex_hull::DEFAULT_GRID)?;
    let mut worst: f64 = 0.0;
    let n = (1.0 / grid_step).round() as usize;
    for k in 0..=n {
        let f = k as f64 / n as f64;
        worst = worst.max((hull.evaluate(f)? - eof(f)?).abs());
    }
    c.at_most(format!("d={d} formula vs hull"), worst, 1e-6);
    Ok(())
}

fn iso_eof_suite(d: usize) -> Result<Checks> {
    let mut c = Checks::default();
    iso_eof_checks(d, &mut c, 1e-3)?;
    let w = iso_eof_convexity_witness(d)?;
    c.report("x_plus", w.x_plus);
    c.holds("epsilon convex then concave", w.verified);
    c.report("F0", iso_tangent_f(d)?);
    Ok(c)
}

/// A smooth random test function on [lo, hi] with several wiggles.
fn random_function(rng: &mut ChaCha8Rng) -> (impl Fn(f64) -> f64, f64, f64) {
    let terms: Vec<(f64, f64, f64)> = (0..3)
        .map(|_| (rng.random_range(-1.0..1.0), rng.random_range(0.5..8.0), rng.random_range(0.0..6.3)))
        .collect();
    let q: f64 = rng.random_range(-0.5..2.0);
    let lo: f64 = rng.random_range(-2.0..0.0);
    let hi = lo + rng.random_range(0.5..2.0);
    let f = move |x: f64| terms.iter().map(|(a, b, c)| a * (b * x + c).sin()).sum::<f64>() + q * x * x;
    (f, lo, hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HullPropertyReport {
    pub inputs: usize,
    /// max of hull(x) − f(x) over all probes
    pub dominance_gap: f64,
    /// max of hull((a+b)/2) − (hull(a) + hull(b))/2 over random pairs
    pub midpoint_violation: f64,
    /// largest move of a support point when the hull is hulled again;
    /// infinite if the support point count changes
    pub idempotence_shift: f64,
}

/// Defining properties of the lower envelope, measured on `n` random smooth
/// functions with `probes` random points each.
pub fn hull_properties(n: usize, probes: usize, seed: u64) -> Result<HullPropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = HullOptions::with_grid(401);
    let mut report = HullPropertyReport {
        inputs: n,
        dominance_gap: f64::NEG_INFINITY,
        midpoint_violation: f64::NEG_INFINITY,
        idempotence_shift: 0.0,
    };
    for _ in 0..n {
        let (f, lo, hi) = random_function(&mut rng);
        let h = lower_envelope(&f, lo, hi, &opts)?;
        for _ in 0..probes {
            let x = rng.random_range(lo..=hi);
            report.dominance_gap = report.dominance_gap.max(h.evaluate(x)? - f(x));
            let (a, b) = (rng.random_range(lo..=hi), rng.random_range(lo..=hi));
            let gap = h.evaluate(0.5 * (a + b))? - 0.5 * (h.evaluate(a)? + h.evaluate(b)?);
            report.midpoint_violation = report.midpoint_violation.max(gap);
        }
        let again = lower_envelope(
            |x| h.evaluate(x).unwrap_or(f64::NAN),
            lo,
            hi,
            &opts.clone().nodes(h.support_xs().iter().copied()),
        )?;
        let shift = if again.support_xs().len() == h.support_xs().len() {
            let xs = again.support_xs().iter().zip(h.support_xs());
            let ys = again.support_ys().iter().zip(h.support_ys());
            xs.chain(ys).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
        } else {
            f64::INFINITY
        };
        report.idempotence_shift = report.idempotence_shift.max(shift);
    }
    Ok(report)
}

fn hull_properties_suite(n: usize, seed: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let r = hull_properties(n, 10, seed)?;
    c.at_most("dominance: hull - f", r.dominance_gap, crate::convex_hull::DEFAULT_REFINE_TOL);
    c.at_most("convexity: midpoint inequality", r.midpoint_violation, 1e-12);
    c.at_most("idempotence: support point shift", r.idempotence_shift, 1e-9);
    Ok(c)
}

/// Two-qubit marginal of a three-qubit pure state, dropping qubit `drop`
/// (1 = B, 2 = C).
fn three_qubit_marginal(psi: &[Complex64], drop: usize) -> Result<DensityMatrix> {
    let m = ComplexMatrix::from_fn(4, 4, |r, s| {
        let (a, x) = (r / 2, r % 2);
        let (a2, x2) = (s / 2, s % 2);
        (0..2)
            .map(|t| {
                let idx = |a: usize, x: usize| if drop == 2 { a * 4 + x * 2 + t } else { a * 4 + t * 2 + x };
                psi[idx(a, x)] * psi[idx(a2, x2)].conj()
            })
            .sum()
    });
    DensityMatrix::new(m.hermitian_part(), 2, 2)
}

/// Largest violation of R₂(A|BC) ≥ R₂(ρ_AB) + R₂(ρ_AC) over `n` random
/// three-qubit pure states (negative means none).
pub fn monogamy_worst_violation(n: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = Alpha::new(2.0)?;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..n {
        let psi = random_pure(&mut rng, 8);
        // ρ_A from the 2 × 4 coefficient matrix; R₂ = −log₂ tr ρ_A²
        let mut purity = 0.0;
        for a in 0..2 {
            for b in 0..2 {
                let r: Complex64 = (0..4).map(|k| psi[a * 4 + k] * psi[b * 4 + k].conj()).sum();
                purity += r.norm_sqr();
            }
        }
        let whole = -purity.log2();
        let ab = erae_closed_form(&TwoQubitState::new(three_qubit_marginal(&psi, 2)?)?, two)?;
        let ac = erae_closed_form(&TwoQubitState::new(three_qubit_marginal(&psi, 1)?)?, two)?;
        worst = worst.max(ab + ac - whole);
    }
    Ok(worst)
}

fn monogamy_suite(n: usize, seed: u64) -> Result<Checks> {
    let mut c = Checks::default();
    c.at_most("R2(AB) + R2(AC) - R2(A|BC)", monogamy_worst_violation(n, seed)?, 1e-8);
    Ok(c)
}

fn oracle_suite() -> Result<Checks> {
    let mut c = Checks::default();
    let cfg = OracleConfig {
        restarts: 4,
        seed: 1,
        ..Default::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut worst: f64 = 0.0;
    let mut lowest: f64 = 0.0;
    for rank in [2, 3, 4] {
        let rho = random_density(&mut rng, 2, 2, rank);
        let state = TwoQubitState::new(rho.clone())?;
        for a in [0.9, 2.0] {
            let alpha = Alpha::new(a)?;
            let closed = erae_closed_form(&state, alpha)?;
            let found = minimize_roof(&rho, alpha, &cfg)?.value;
            worst = worst.max((found - closed).abs());
            lowest = lowest.min(found - closed);
        }
    }
    c.at_most("two-qubit |oracle - closed form|", worst, 1e-4);
    c.at_most("two-qubit oracle below closed form", -lowest, 1e-6);

    let w = WernerSpec::new(2, 0.8)?;
    let rho = werner_density(&w);
    for a in [0.3, 2.0] {
        let alpha = Alpha::new(a)?;
        let found = minimize_roof(&rho, alpha, &cfg)?.value;
        c.at_most(
            format!("werner F=0.8 alpha={a}"),
            (found - erae_werner(&w, alpha)?).abs(),
            1e-4,
        );
    }
    let conc = concurrence_mixed(&TwoQubitState::new(rho)?)?.concurrence;
    c.at_most("werner concurrence = F", (conc - 0.8).abs(), 1e-10);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_suites_pass() {
        for name in ["alpha-critical", "omega-derivatives", "werner-alpha-zero", "monogamy"] {
            let r = run_suite(name).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run(Some("nope")), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn hull_properties_small() {
        let r = hull_properties(20, 100, 3).unwrap();
        assert!(r.dominance_gap <= 1e-9, "{r:?}");
        assert!(r.midpoint_violation <= 1e-12, "{r:?}");
        assert!(r.idempotence_shift <= 1e-9, "{r:?}");
    }

    #[test]
    fn marginals_are_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let psi = random_pure(&mut rng, 8);
        for drop in [1, 2] {
            let rho = three_qubit_marginal(&psi, drop).unwrap();
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        }
    }
}
