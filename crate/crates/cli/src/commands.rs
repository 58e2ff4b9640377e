use erae_core::curves::{alpha_curve, alpha_grid, f_curve, find_crossings, linear_grid, SeriesSpec};
use erae_core::pure_entropy::{omega, renyi_pure, SchmidtSpectrum};
use erae_core::roof_oracle::{minimize_roof, OracleConfig};
use erae_core::symmetric::{erae_isotropic, erae_werner, isotropic_density, werner_density};
use erae_core::two_qubit::{concurrence_mixed, erae_closed_form, TwoQubitState};
use erae_core::{verify, Alpha, DensityMatrix, IsotropicSpec, LogBase, WernerSpec};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::args::{AxisArg, CurveArgs, EvalArgs, FamilyArg, Format, OracleArgs, StateArgs, VerifyArgs};
use crate::error::CliError;
use crate::matrix_file;

/// Largest local dimension accepted for Werner and isotropic families.
const MAX_D: usize = 16;

/// What a command prints on success.
pub enum Output {
    Json(Value),
    Csv(String),
}

enum State {
    Werner(WernerSpec),
    Isotropic(IsotropicSpec),
    /// Two-qubit pure state given by its concurrence.
    Pure(f64),
    Matrix(DensityMatrix),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn resolve_state(args: &StateArgs) -> Result<State, CliError> {
    if let Some(path) = &args.matrix_file {
        return match args.family {
            None | Some(FamilyArg::TwoQubit) | Some(FamilyArg::Pure) => Ok(State::Matrix(matrix_file::read(path)?)),
            Some(f) => Err(usage(format!("--matrix-file cannot be combined with --family {f:?}"))),
        };
    }
    let family = args
        .family
        .ok_or_else(|| usage("give either --family or --matrix-file"))?;
    let need_f = || args.f.ok_or_else(|| usage("this family needs --F"));
    let check_d = || {
        if (2..=MAX_D).contains(&args.d) {
            Ok(args.d)
        } else {
            Err(usage(format!("--d must be between 2 and {MAX_D}")))
        }
    };
    match family {
        FamilyArg::Werner => Ok(State::Werner(WernerSpec::new(check_d()?, need_f()?)?)),
        FamilyArg::Isotropic => Ok(State::Isotropic(IsotropicSpec::new(check_d()?, need_f()?)?)),
        FamilyArg::Pure => {
            let c = args
                .concurrence
                .ok_or_else(|| usage("--family pure needs --concurrence"))?;
            SchmidtSpectrum::from_concurrence(c)?;
            Ok(State::Pure(c))
        }
        FamilyArg::TwoQubit => Err(usage("--family two-qubit needs --matrix-file")),
    }
}

/// JSON description of the state, echoed in reports.
fn describe(state: &State) -> Map<String, Value> {
    let mut m = Map::new();
    match state {
        State::Werner(s) => {
            m.insert("family".into(), json!("werner"));
            m.insert("d".into(), json!(s.d()));
            m.insert("F".into(), json!(s.f()));
        }
        State::Isotropic(s) => {
            m.insert("family".into(), json!("isotropic"));
            m.insert("d".into(), json!(s.d()));
            m.insert("F".into(), json!(s.f()));
        }
        State::Pure(c) => {
            m.insert("family".into(), json!("pure"));
            m.insert("concurrence".into(), json!(c));
        }
        State::Matrix(rho) => {
            m.insert("family".into(), json!("matrix"));
            m.insert("dimA".into(), json!(rho.dim_a()));
            m.insert("dimB".into(), json!(rho.dim_b()));
        }
    }
    m
}

fn pure_vector(c: f64) -> Result<Vec<Complex64>, CliError> {
    let mu = SchmidtSpectrum::from_concurrence(c)?;
    let mu = mu.as_slice();
    let z = Complex64::new(0.0, 0.0);
    let amp = |i: usize| Complex64::new(mu.get(i).copied().unwrap_or(0.0).sqrt(), 0.0);
    Ok(vec![amp(0), z, z, amp(1)])
}

fn density(state: &State) -> Result<DensityMatrix, CliError> {
    Ok(match state {
        State::Werner(s) => werner_density(s),
        State::Isotropic(s) => isotropic_density(s),
        State::Pure(c) => DensityMatrix::from_pure(&pure_vector(*c)?, 2, 2)?,
        State::Matrix(rho) => rho.clone(),
    })
}

/// The rank-one eigenvector of ρ, if ρ is pure.
fn as_pure(rho: &DensityMatrix) -> Result<Option<Vec<Complex64>>, CliError> {
    let spec = rho.spectrum()?;
    if spec.eigenvalues.get(1).copied().unwrap_or(0.0) > erae_core::TOL.rank_cutoff {
        return Ok(None);
    }
    Ok(Some(spec.eigenvectors.column(0)))
}

/// Closed-form value in bits, plus extra report fields.
fn closed_form(state: &State, alpha: Alpha) -> Result<(f64, Map<String, Value>), CliError> {
    let mut extra = Map::new();
    let value = match state {
        State::Werner(s) => erae_werner(s, alpha)?,
        State::Isotropic(s) => erae_isotropic(s, alpha)?,
        State::Pure(c) => omega(*c, alpha)?,
        State::Matrix(rho) => {
            if let Some(psi) = as_pure(rho)? {
                extra.insert("pure".into(), json!(true));
                renyi_pure(&SchmidtSpectrum::of_state(&psi, rho.dim_a(), rho.dim_b())?, alpha)
            } else if rho.dim_a() == 2 && rho.dim_b() == 2 {
                let state = TwoQubitState::new(rho.clone())?;
                extra.insert("concurrence".into(), json!(concurrence_mixed(&state)?.concurrence));
                erae_closed_form(&state, alpha)?
            } else {
                return Err(erae_core::Error::Domain(
                    "no closed form for a mixed state of this kind; use `erae oracle`".into(),
                )
                .into());
            }
        }
    };
    Ok((value, extra))
}

pub fn eval(args: &EvalArgs, base: LogBase) -> Result<Output, CliError> {
    let alpha = Alpha::new(args.alpha)?;
    let state = resolve_state(&args.state)?;
    let (value, extra) = closed_form(&state, alpha)?;
    let mut out = describe(&state);
    out.insert("alpha".into(), json!(args.alpha));
    out.extend(extra);
    out.insert("log_base".into(), json!(base.as_str()));
    out.insert("value".into(), json!(base.from_bits(value)));
    Ok(Output::Json(Value::Object(out)))
}

pub fn curve(args: &CurveArgs, base: LogBase) -> Result<Output, CliError> {
    let mut series = args
        .series
        .iter()
        .map(|s| s.parse::<SeriesSpec>().map_err(|e| usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    series.extend(args.concurrence.iter().map(|&c| match args.axis {
        AxisArg::Alpha => SeriesSpec::pure(c),
        AxisArg::F => SeriesSpec::Pure { c: None },
    }));
    if series.is_empty() || series.len() > 4 {
        return Err(usage(format!("give 1 to 4 series, got {}", series.len())));
    }
    let (table, grid) = match args.axis {
        AxisArg::Alpha => {
            if args.alpha.is_some() {
                return Err(usage("--alpha fixes the order on an F axis; use --alpha-min/--alpha-max here"));
            }
            let grid = alpha_grid(args.alpha_min, args.alpha_max, args.points)?;
            (alpha_curve(&series, &grid)?, grid)
        }
        AxisArg::F => {
            if args.find_crossing {
                return Err(usage("--find-crossing needs the alpha axis"));
            }
            let alpha = args.alpha.ok_or_else(|| usage("an F axis needs --alpha"))?;
            let grid = linear_grid(args.f_min, args.f_max, args.points)?;
            (f_curve(&series, Alpha::new(alpha)?, &grid)?, grid)
        }
    };
    let crossings = if args.find_crossing {
        let [a, b] = series[..] else {
            return Err(usage("--find-crossing needs exactly two series"));
        };
        Some(find_crossings(&a, &b, &grid)?)
    } else {
        None
    };
    let table = table.in_base(base);
    match args.format {
        Format::Csv => {
            if let Some(xs) = &crossings {
                eprintln!("crossings: {xs:?}");
            }
            Ok(Output::Csv(table.to_csv()))
        }
        Format::Json => {
            let mut out = match serde_json::to_value(&table).expect("curve tables serialize") {
                Value::Object(m) => m,
                _ => unreachable!("a struct serializes to an object"),
            };
            out.insert("log_base".into(), json!(base.as_str()));
            if let Some(xs) = crossings {
                out.insert("crossings".into(), json!(xs));
            }
            Ok(Output::Json(Value::Object(out)))
        }
    }
}

pub fn oracle(args: &OracleArgs, base: LogBase) -> Result<Output, CliError> {
    let alpha = Alpha::new(args.alpha)?;
    let state = resolve_state(&args.state)?;
    let rho = density(&state)?;
    let cfg = OracleConfig {
        ensemble_size: args.ensemble_size,
        restarts: args.restarts,
        max_iters: args.max_iters,
        conv_tol: args.conv_tol,
        seed: args.seed,
    };
    let result = minimize_roof(&rho, alpha, &cfg)?;
    // a closed form for comparison, when one applies
    let reference = closed_form(&state, alpha).ok().map(|(v, _)| base.from_bits(v));
    let mut out = describe(&state);
    out.insert("alpha".into(), json!(args.alpha));
    out.insert("seed".into(), json!(args.seed));
    out.insert("restarts".into(), json!(args.restarts));
    out.insert("log_base".into(), json!(base.as_str()));
    out.insert("value".into(), json!(base.from_bits(result.value)));
    out.insert("spread".into(), json!(base.from_bits(result.spread)));
    out.insert("converged".into(), json!(result.converged));
    out.insert("closed_form".into(), json!(reference));
    if args.emit_ensemble {
        out.insert("ensemble".into(), json!(result.best));
    }
    Ok(Output::Json(Value::Object(out)))
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    if let Some(s) = &args.suite {
        if !verify::SUITES.contains(&s.as_str()) {
            return Err(usage(format!(
                "unknown suite '{s}'; known: {}",
                verify::SUITES.join(", ")
            )));
        }
    }
    let summary = verify::run(args.suite.as_deref())?;
    let doc = serde_json::to_value(&summary).expect("summaries serialize");
    if summary.passed {
        Ok(Output::Json(doc))
    } else {
        Err(CliError::VerifyFailed {
            failures: summary.failures(),
            report: doc,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use erae_core::two_qubit::concurrence_pure;

    #[test]
    fn pure_vector_has_requested_concurrence() {
        for c in [0.0, 0.3, 1.0] {
            let psi = pure_vector(c).unwrap();
            assert!((concurrence_pure(&psi).unwrap() - c).abs() < 1e-12);
        }
    }

    #[test]
    fn as_pure_detects_rank() {
        let pure = DensityMatrix::from_pure(&pure_vector(0.4).unwrap(), 2, 2).unwrap();
        assert!(as_pure(&pure).unwrap().is_some());
        let mixed = werner_density(&WernerSpec::new(2, 0.5).unwrap());
        assert!(as_pure(&mixed).unwrap().is_none());
    }
}
