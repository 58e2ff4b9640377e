//! Numerical upper bounds on the convex roof
//! R_α(ρ) = min Σ p_k R_α(ψ_k) over pure-state ensembles of ρ.
//!
//! Every ensemble of ρ = Σᵢ λᵢ|eᵢ⟩⟨eᵢ| with m members has the form
//! φ_k = Σᵢ V_{ki} √λᵢ |eᵢ⟩ for an m×r isometry V, with p_k = |φ_k|².
//! The search starts from Haar-random isometries and applies 2×2 unitary
//! mixes to pairs of rows of V. Each mix keeps V an isometry, so the ensemble
//! reconstructs ρ throughout, and its cost only touches two members.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::TOL;
use crate::error::{Error, Result};
use crate::linalg::{norm_sqr, orthonormalize_columns, ComplexMatrix, DensityMatrix, ZERO};
use crate::pure_entropy::{alpha_critical, renyi_of_probs, schmidt_coefficients, Alpha, AlphaMode};
use crate::random::haar_isometry;
use crate::simplex::{nelder_mead, SimplexOptions};

/// Largest total dimension accepted by [`minimize_roof`] (d = 9 per side).
pub const MAX_DIM: usize = 81;
const WEIGHT_FLOOR: f64 = 1e-14;
const RECONSTRUCTION_TOL: f64 = 1e-8;
/// Continuation path for small α. Below α_c product members sit at a cusp of
/// μ^α and pairwise moves cannot dislodge them, so each restart first
/// descends at α = 1 and walks α down to the target through these points.
const CONTINUATION: [f64; 20] = [
    1.0, 0.95, 0.9, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4, 0.35, 0.3, 0.2, 0.1, 0.05, 0.03, 0.01,
];
/// The rank objective is piecewise constant; it is smoothed to this α.
const ZERO_LIMIT_SMOOTHING: f64 = 1e-3;

/// Pure-state ensemble {p_k, ψ_k}.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleDecomposition {
    weights: Vec<f64>,
    #[serde(serialize_with = "serialize_states")]
    states: Vec<Vec<Complex64>>,
    dim_a: usize,
    dim_b: usize,
}

fn serialize_states<S: serde::Serializer>(states: &[Vec<Complex64>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let pairs: Vec<Vec<[f64; 2]>> = states
        .iter()
        .map(|v| v.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    pairs.serialize(s)
}

impl EnsembleDecomposition {
    pub fn new(weights: Vec<f64>, states: Vec<Vec<Complex64>>, dim_a: usize, dim_b: usize) -> Result<Self> {
        if weights.len() != states.len() || weights.is_empty() {
            return Err(Error::InvalidSpec(format!(
                "{} weights for {} states",
                weights.len(),
                states.len()
            )));
        }
        if weights.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidSpec("weights must be finite and non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::BadTrace(total));
        }
        let n = dim_a * dim_b;
        for psi in &states {
            if psi.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "state of length {} for dims {dim_a}x{dim_b}",
                    psi.len()
                )));
            }
            let n2 = norm_sqr(psi);
            if (n2 - 1.0).abs() > 1e-10 {
                return Err(Error::NotNormalized(n2));
            }
        }
        Ok(Self {
            weights,
            states,
            dim_a,
            dim_b,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn states(&self) -> &[Vec<Complex64>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    /// Σ p_k |ψ_k⟩⟨ψ_k|.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim_a * self.dim_b;
        let mut m = ComplexMatrix::zeros(n, n);
        for (p, psi) in self.weights.iter().zip(&self.states) {
            for i in 0..n {
                let a = psi[i] * *p;
                for j in 0..n {
                    m[(i, j)] += a * psi[j].conj();
                }
            }
        }
        m
    }

    pub fn reconstruction_error(&self, rho: &DensityMatrix) -> f64 {
        self.reconstruct().max_abs_diff(rho.matrix())
    }

    /// Ensemble from unnormalized vectors φ_k with p_k = |φ_k|². Members with
    /// p_k below 1e−14 are dropped and the rest renormalized to unit trace.
    fn from_unnormalized(rows: &[Vec<Complex64>], dim_a: usize, dim_b: usize) -> Result<Self> {
        let mut weights = Vec::with_capacity(rows.len());
        let mut states = Vec::with_capacity(rows.len());
        for phi in rows {
            let p = norm_sqr(phi);
            if p < WEIGHT_FLOOR {
                continue;
            }
            let s = p.sqrt();
            weights.push(p);
            states.push(phi.iter().map(|z| z / s).collect());
        }
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::NumericalFailure("ensemble has no weight".into()));
        }
        for p in weights.iter_mut() {
            *p /= total;
        }
        Self::new(weights, states, dim_a, dim_b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    /// Number of ensemble members; `None` means r², r = rank(ρ).
    pub ensemble_size: Option<usize>,
    pub restarts: usize,
    /// Maximum number of sweeps over all member pairs per restart.
    pub max_iters: usize,
    /// A restart has converged once a sweep changes the objective by less
    /// than conv_tol · max(objective, 1 bit).
    pub conv_tol: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            ensemble_size: None,
            restarts: 32,
            max_iters: 2000,
            conv_tol: 1e-8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    /// Bits.
    pub value: f64,
    pub best: EnsembleDecomposition,
    pub converged: bool,
    /// Max minus min of the restart values.
    pub spread: f64,
}

/// Positive part of the spectrum of ρ: (λᵢ, eᵢ) with λᵢ above the rank cutoff.
fn support(rho: &DensityMatrix) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    let spec = rho.spectrum()?;
    let mut lambdas = Vec::new();
    let mut vecs = Vec::new();
    for (j, &l) in spec.eigenvalues.iter().enumerate() {
        if l > TOL.rank_cutoff {
            lambdas.push(l);
            vecs.push(spec.eigenvectors.column(j));
        }
    }
    if lambdas.is_empty() {
        return Err(Error::NumericalFailure("density matrix has empty support".into()));
    }
    Ok((lambdas, vecs))
}

/// Rows φ_k = Σᵢ V_{ki} bᵢ with bᵢ = √λᵢ eᵢ.
fn mix_rows(v: &ComplexMatrix, basis: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = basis[0].len();
    (0..v.rows())
        .map(|k| {
            let mut phi = vec![ZERO; n];
            for (i, b) in basis.iter().enumerate() {
                let c = v[(k, i)];
                for (x, y) in phi.iter_mut().zip(b) {
                    *x += c * y;
                }
            }
            phi
        })
        .collect()
}

fn scaled_basis(lambdas: &[f64], vecs: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    lambdas
        .iter()
        .zip(vecs)
        .map(|(l, e)| {
            let s = l.sqrt();
            e.iter().map(|z| z * s).collect()
        })
        .collect()
}

pub fn ensemble_from_isometry(rho: &DensityMatrix, v: &ComplexMatrix) -> Result<EnsembleDecomposition> {
    let (lambdas, vecs) = support(rho)?;
    if v.cols() != lambdas.len() {
        return Err(Error::RankMismatch {
            expected: lambdas.len(),
            got: v.cols(),
        });
    }
    let gram = v.adjoint().matmul(v);
    let dev = gram.max_abs_diff(&ComplexMatrix::identity(v.cols()));
    if dev > 1e-10 {
        return Err(Error::NotIsometry(dev));
    }
    let rows = mix_rows(v, &scaled_basis(&lambdas, &vecs));
    EnsembleDecomposition::from_unnormalized(&rows, rho.dim_a(), rho.dim_b())
}

/// Σ p_k R_α(ψ_k).
pub fn roof_value_of(ensemble: &EnsembleDecomposition, alpha: Alpha) -> f64 {
    ensemble
        .weights
        .iter()
        .zip(&ensemble.states)
        .map(|(p, psi)| {
            let mu = schmidt_coefficients(psi, ensemble.dim_a, ensemble.dim_b);
            p * renyi_of_probs(&mu, alpha)
        })
        .sum()
}

/// |φ|² R_α(φ/|φ|) for an unnormalized member.
fn member_cost(phi: &[Complex64], dim_a: usize, dim_b: usize, alpha: Alpha) -> f64 {
    if dim_a == 2 && dim_b == 2 {
        let (a, b, c, d) = (phi[0], phi[1], phi[2], phi[3]);
        let r00 = a.norm_sqr() + b.norm_sqr();
        let r11 = c.norm_sqr() + d.norm_sqr();
        let w = r00 + r11;
        if w < 1e-300 {
            return 0.0;
        }
        let r01 = a * c.conj() + b * d.conj();
        let disc = ((r00 - r11).powi(2) + 4.0 * r01.norm_sqr()).sqrt();
        let lp = 0.5 * (w + disc);
        let lm = (a * d - b * c).norm_sqr() / lp;
        return w * renyi_of_probs(&[lp / w, lm / w], alpha);
    }
    let mut mu = schmidt_coefficients(phi, dim_a, dim_b);
    let w: f64 = mu.iter().sum();
    if w < 1e-300 {
        return 0.0;
    }
    for m in mu.iter_mut() {
        *m /= w;
    }
    w * renyi_of_probs(&mu, alpha)
}

/// (cos θ, e^{iχ} sin θ) applied to rows k and l:
/// a' = c·a + e^{iχ}s·b, b' = −e^{−iχ}s·a + c·b.
fn rotate_pair(a: &[Complex64], b: &[Complex64], theta: f64, chi: f64, out_a: &mut [Complex64], out_b: &mut [Complex64]) {
    let (s, c) = theta.sin_cos();
    let ph = Complex64::from_polar(s, chi);
    let phc = ph.conj();
    for i in 0..a.len() {
        out_a[i] = a[i] * c + ph * b[i];
        out_b[i] = b[i] * c - phc * a[i];
    }
}

struct Search<'a> {
    basis: &'a [Vec<Complex64>],
    dim_a: usize,
    dim_b: usize,
    v: ComplexMatrix,
    rows: Vec<Vec<Complex64>>,
    costs: Vec<f64>,
}

impl Search<'_> {
    fn refresh(&mut self, alpha: Alpha) {
        orthonormalize_columns(&mut self.v);
        self.rows = mix_rows(&self.v, self.basis);
        self.costs = self
            .rows
            .iter()
            .map(|phi| member_cost(phi, self.dim_a, self.dim_b, alpha))
            .collect();
    }

    fn total(&self) -> f64 {
        self.costs.iter().sum()
    }

    /// Optimizes the mix of rows k and l; returns true if it was accepted.
    fn improve_pair(&mut self, k: usize, l: usize, alpha: Alpha, opts: &SimplexOptions) -> bool {
        let (da, db) = (self.dim_a, self.dim_b);
        let n = self.rows[k].len();
        let f0 = self.costs[k] + self.costs[l];
        let (a, b) = (&self.rows[k], &self.rows[l]);
        let mut ta = vec![ZERO; n];
        let mut tb = vec![ZERO; n];
        let res = nelder_mead(
            |x: &[f64; 2]| {
                rotate_pair(a, b, x[0], x[1], &mut ta, &mut tb);
                member_cost(&ta, da, db, alpha) + member_cost(&tb, da, db, alpha)
            },
            [0.0, 0.0],
            f0,
            [0.3, 1.0],
            opts,
        );
        if !(res.fx < f0 - 1e-15 * f0.abs().max(1.0)) {
            return false;
        }
        let (theta, chi) = (res.x[0], res.x[1]);
        rotate_pair(a, b, theta, chi, &mut ta, &mut tb);
        // the pair's contribution to ρ is unchanged by a unitary mix
        let drift = (norm_sqr(&ta) + norm_sqr(&tb) - norm_sqr(a) - norm_sqr(b)).abs();
        if drift > RECONSTRUCTION_TOL {
            return false;
        }
        let ca = member_cost(&ta, da, db, alpha);
        let cb = member_cost(&tb, da, db, alpha);
        self.rows[k] = ta;
        self.rows[l] = tb;
        self.costs[k] = ca;
        self.costs[l] = cb;
        let r = self.v.cols();
        let va: Vec<Complex64> = self.v.row(k).to_vec();
        let vb: Vec<Complex64> = self.v.row(l).to_vec();
        let mut na = vec![ZERO; r];
        let mut nb = vec![ZERO; r];
        rotate_pair(&va, &vb, theta, chi, &mut na, &mut nb);
        for j in 0..r {
            self.v[(k, j)] = na[j];
            self.v[(l, j)] = nb[j];
        }
        true
    }

    /// Sweeps until the relative change falls below conv_tol or max_iters
    /// sweeps have run. Returns whether it converged.
    fn descend(&mut self, alpha: Alpha, cfg: &OracleConfig, rng: &mut ChaCha8Rng) -> bool {
        let m = self.rows.len();
        let mut pairs: Vec<(usize, usize)> = (0..m).flat_map(|k| (k + 1..m).map(move |l| (k, l))).collect();
        let opts = SimplexOptions {
            max_evals: 80,
            ftol: 1e-15,
            xtol: 1e-6,
        };
        let mut prev = self.total();
        for _ in 0..cfg.max_iters {
            pairs.shuffle(rng);
            for &(k, l) in &pairs {
                self.improve_pair(k, l, alpha, &opts);
            }
            self.refresh(alpha);
            let cur = self.total();
            let change = (prev - cur).abs();
            // relative change, with the scale floored at one bit so that
            // nearly separable states do not chase roundoff
            if change <= cfg.conv_tol * prev.abs().max(1.0) {
                return true;
            }
            prev = cur;
        }
        false
    }
}

struct RestartOutcome {
    value: f64,
    rows: Vec<Vec<Complex64>>,
    converged: bool,
}

fn run_restart(
    basis: &[Vec<Complex64>],
    dims: (usize, usize),
    m: usize,
    alpha: Alpha,
    cfg: &OracleConfig,
    index: usize,
) -> Result<RestartOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let v = haar_isometry(&mut rng, m, basis.len());
    let mut search = Search {
        basis,
        dim_a: dims.0,
        dim_b: dims.1,
        v,
        rows: Vec::new(),
        costs: Vec::new(),
    };
    let target = match alpha.mode() {
        AlphaMode::ZeroLimit => Alpha::new(ZERO_LIMIT_SMOOTHING)?,
        _ => alpha,
    };
    let mut stages: Vec<Alpha> = Vec::new();
    if target.value() < alpha_critical() {
        for &a in CONTINUATION.iter().filter(|&&a| a > target.value()) {
            stages.push(Alpha::new(a)?);
        }
    }
    stages.push(target);
    let mut converged = false;
    for stage in stages {
        search.refresh(stage);
        converged = search.descend(stage, cfg, &mut rng);
    }
    let value = search
        .rows
        .iter()
        .map(|phi| member_cost(phi, dims.0, dims.1, alpha))
        .sum();
    Ok(RestartOutcome {
        value,
        rows: search.rows,
        converged,
    })
}

/// Best ensemble found over `cfg.restarts` seeded local searches. The value
/// is an upper bound on the roof. Restarts are independent and merged by
/// minimum with ties going to the lower index, so the result depends only on
/// the seed and config.
pub fn minimize_roof(rho: &DensityMatrix, alpha: Alpha, cfg: &OracleConfig) -> Result<OracleResult> {
    if rho.dim() > MAX_DIM {
        return Err(Error::DimensionTooLarge(rho.dim()));
    }
    if cfg.restarts == 0 {
        return Err(Error::InvalidSpec("oracle needs at least one restart".into()));
    }
    let (lambdas, vecs) = support(rho)?;
    let r = lambdas.len();
    let m = cfg.ensemble_size.unwrap_or(r * r);
    if m < r {
        return Err(Error::InvalidSpec(format!("ensemble size {m} below rank {r}")));
    }
    let basis = scaled_basis(&lambdas, &vecs);
    let dims = (rho.dim_a(), rho.dim_b());

    let finish = |rows: &[Vec<Complex64>], converged: bool, spread: f64| -> Result<OracleResult> {
        let best = EnsembleDecomposition::from_unnormalized(rows, dims.0, dims.1)?;
        let err = best.reconstruction_error(rho);
        if err > RECONSTRUCTION_TOL {
            return Err(Error::NumericalFailure(format!(
                "best ensemble reconstructs rho only to {err:.3e}"
            )));
        }
        Ok(OracleResult {
            value: roof_value_of(&best, alpha),
            best,
            converged,
            spread,
        })
    };

    // a pure state has a single ensemble up to phases
    if r == 1 {
        return finish(&basis, true, 0.0);
    }

    let outcomes: Vec<RestartOutcome> = (0..cfg.restarts)
        .into_par_iter()
        .map(|i| run_restart(&basis, dims, m, alpha, cfg, i))
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, o) in outcomes.iter().enumerate() {
        if o.value < outcomes[best].value {
            best = i;
        }
    }
    let hi = outcomes.iter().map(|o| o.value).fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - outcomes[best].value;
    finish(&outcomes[best].rows, outcomes[best].converged, spread)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron_vec, ONE};
    use crate::random::{random_density, random_pure};
    use crate::symmetric::{werner_density, WernerSpec};

    fn werner(d: usize, f: f64) -> DensityMatrix {
        werner_density(&WernerSpec::new(d, f).unwrap())
    }

    fn quick(restarts: usize) -> OracleConfig {
        OracleConfig {
            restarts,
            seed: 11,
            ..Default::default()
        }
    }

    fn bell() -> Vec<Complex64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        vec![Complex64::new(h, 0.0), ZERO, ZERO, Complex64::new(h, 0.0)]
    }

    #[test]
    fn identity_isometry_gives_eigen_ensemble() {
        let diag = ComplexMatrix::from_real_diag(&[0.5, 0.3, 0.2, 0.0]);
        let rho = DensityMatrix::new(diag, 2, 2).unwrap();
        let e = ensemble_from_isometry(&rho, &ComplexMatrix::identity(3)).unwrap();
        assert_eq!(e.len(), 3);
        assert!((e.weights()[0] - 0.5).abs() < 1e-14);
        assert!(e.reconstruction_error(&rho) < 1e-14);
        assert!(roof_value_of(&e, Alpha::new(2.0).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn isometry_checks() {
        let rho = DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.5, 0.5, 0.0, 0.0]), 2, 2).unwrap();
        assert!(matches!(
            ensemble_from_isometry(&rho, &ComplexMatrix::identity(3)),
            Err(Error::RankMismatch { expected: 2, got: 3 })
        ));
        let bad = ComplexMatrix::identity(2).scale_real(1.1);
        assert!(matches!(ensemble_from_isometry(&rho, &bad), Err(Error::NotIsometry(_))));
    }

    #[test]
    fn random_isometry_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rho = random_density(&mut rng, 2, 2, 2);
        let v = haar_isometry(&mut rng, 4, 2);
        let e = ensemble_from_isometry(&rho, &v).unwrap();
        assert!(e.reconstruction_error(&rho) < 1e-10);
        let total: f64 = e.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pure_ensemble_is_the_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let psi = random_pure(&mut rng, 6);
        let rho = DensityMatrix::from_pure(&psi, 2, 3).unwrap();
        let v = ComplexMatrix::from_vec(2, 1, vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
        let e = ensemble_from_isometry(&rho, &v).unwrap();
        assert!(e.reconstruction_error(&rho) < 1e-12);
        let alpha = Alpha::new(0.7).unwrap();
        let want = renyi_of_probs(&schmidt_coefficients(&psi, 2, 3), alpha);
        let got = minimize_roof(&rho, alpha, &quick(2)).unwrap();
        assert!((got.value - want).abs() < 1e-12);
        assert_eq!(got.best.len(), 1);
    }

    #[test]
    fn roof_value_examples() {
        let b = EnsembleDecomposition::new(vec![1.0], vec![bell()], 2, 2).unwrap();
        assert!((roof_value_of(&b, Alpha::new(2.0).unwrap()) - 1.0).abs() < 1e-14);

        // Werner F = 0.8: singlet with weight F, the rest spread evenly over
        // the six product states |a, a⊥⟩ of the octahedron axes
        let f = 0.8;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let i = Complex64::new(0.0, 1.0);
        let axes: [[Complex64; 2]; 6] = [
            [ONE, ZERO],
            [ZERO, ONE],
            [ONE * h, ONE * h],
            [ONE * h, -ONE * h],
            [ONE * h, i * h],
            [ONE * h, -i * h],
        ];
        let perp = [1, 0, 3, 2, 5, 4];
        let singlet = vec![ZERO, ONE * h, -ONE * h, ZERO];
        let mut weights = vec![f];
        let mut states = vec![singlet];
        for (a, &q) in axes.iter().zip(&perp) {
            weights.push((1.0 - f) / 6.0);
            states.push(kron_vec(a, &axes[q]));
        }
        let e = EnsembleDecomposition::new(weights, states, 2, 2).unwrap();
        assert!(e.reconstruction_error(&werner(2, f)) < 1e-12);
        assert!((roof_value_of(&e, Alpha::new(0.3).unwrap()) - 0.8).abs() < 1e-12);
        assert!((roof_value_of(&e, Alpha::zero()) - 0.8).abs() < 1e-12);
    }

    #[test]
    fn werner_eof() {
        let r = minimize_roof(&werner(2, 0.8), Alpha::von_neumann(), &quick(4)).unwrap();
        assert!((r.value - 0.72193).abs() < 1e-3, "{}", r.value);
        assert!(r.best.reconstruction_error(&werner(2, 0.8)) < 1e-8);
        assert!((roof_value_of(&r.best, Alpha::von_neumann()) - r.value).abs() < 1e-12);
    }

    #[test]
    fn werner_alpha_two() {
        let r = minimize_roof(&werner(2, 0.8), Alpha::new(2.0).unwrap(), &quick(4)).unwrap();
        let want = -(1.0f64 - 0.32).log2();
        assert!((r.value - want).abs() < 1e-4, "{} vs {want}", r.value);
    }

    #[test]
    fn werner_zero_limit() {
        let r = minimize_roof(&werner(2, 0.8), Alpha::zero(), &quick(4)).unwrap();
        assert!((r.value - 0.8).abs() < 5e-3, "{}", r.value);
    }

    #[test]
    fn seed_determinism() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let rho = random_density(&mut rng, 2, 2, 3);
        let cfg = quick(3);
        let a = minimize_roof(&rho, Alpha::new(1.5).unwrap(), &cfg).unwrap();
        let b = minimize_roof(&rho, Alpha::new(1.5).unwrap(), &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_large_dims() {
        let n = 100;
        let rho = DensityMatrix::new(ComplexMatrix::identity(n).scale_real(0.01), 10, 10).unwrap();
        assert!(matches!(
            minimize_roof(&rho, Alpha::new(2.0).unwrap(), &quick(1)),
            Err(Error::DimensionTooLarge(100))
        ));
    }
}
