//! Curve sweeps over α or F for a handful of state families, and location of
//! the α at which two curves swap order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::LogBase;
use crate::error::{Error, Result};
use crate::pure_entropy::{omega, Alpha};
use crate::symmetric::{erae_isotropic, erae_werner, IsotropicSpec, WernerSpec};

pub const DEFAULT_ALPHA_POINTS: usize = 200;
pub const DEFAULT_ALPHA_MIN: f64 = 0.01;
pub const DEFAULT_ALPHA_MAX: f64 = 1.0;
pub const CROSSING_TOL: f64 = 1e-8;
/// Differences this small count as zero when looking for sign changes.
const ZERO_DIFF: f64 = 1e-12;

/// One curve: a state family with its parameters.
///
/// Text form is `family[:key=value,...]`, e.g. `werner:F=0.8`,
/// `isotropic:F=0.7,d=3`, `pure:C=0.5`. On an F axis the F (or C) key is
/// omitted and supplied by the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesSpec {
    Werner { f: Option<f64>, d: usize },
    Isotropic { f: Option<f64>, d: usize },
    /// Two-qubit pure state with concurrence C.
    Pure { c: Option<f64> },
}

impl SeriesSpec {
    pub fn werner(f: f64, d: usize) -> Self {
        Self::Werner { f: Some(f), d }
    }

    pub fn isotropic(f: f64, d: usize) -> Self {
        Self::Isotropic { f: Some(f), d }
    }

    pub fn pure(c: f64) -> Self {
        Self::Pure { c: Some(c) }
    }

    fn fixed(&self) -> Option<f64> {
        match *self {
            Self::Werner { f, .. } | Self::Isotropic { f, .. } => f,
            Self::Pure { c } => c,
        }
    }

    /// Value at the series' own parameter.
    pub fn value(&self, alpha: Alpha) -> Result<f64> {
        let f = self
            .fixed()
            .ok_or_else(|| Error::InvalidSpec(format!("series {self} has no F")))?;
        self.value_at(f, alpha)
    }

    /// Value with F (or C for pure states) replaced by `f`.
    pub fn value_at(&self, f: f64, alpha: Alpha) -> Result<f64> {
        match *self {
            Self::Werner { d, .. } => erae_werner(&WernerSpec::new(d, f)?, alpha),
            Self::Isotropic { d, .. } => erae_isotropic(&IsotropicSpec::new(d, f)?, alpha),
            Self::Pure { .. } => omega(f, alpha),
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Werner { f, d } => {
                write!(out, "werner:")?;
                if let Some(f) = f {
                    write!(out, "F={f},")?;
                }
                write!(out, "d={d}")
            }
            Self::Isotropic { f, d } => {
                write!(out, "isotropic:")?;
                if let Some(f) = f {
                    write!(out, "F={f},")?;
                }
                write!(out, "d={d}")
            }
            Self::Pure { c: Some(c) } => write!(out, "pure:C={c}"),
            Self::Pure { c: None } => write!(out, "pure"),
        }
    }
}

impl FromStr for SeriesSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidSpec(format!("series '{s}': {why}"));
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut f = None;
        let mut c = None;
        let mut d = None;
        for kv in rest.split(',').filter(|kv| !kv.trim().is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v = v.trim();
            match k.trim() {
                "F" | "f" => f = Some(v.parse::<f64>().map_err(|_| bad("F is not a number"))?),
                "C" | "c" => c = Some(v.parse::<f64>().map_err(|_| bad("C is not a number"))?),
                "d" => d = Some(v.parse::<usize>().map_err(|_| bad("d is not a count"))?),
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        match family.trim() {
            "werner" => {
                if c.is_some() {
                    return Err(bad("werner takes F, not C"));
                }
                Ok(Self::Werner { f, d: d.unwrap_or(2) })
            }
            "isotropic" | "iso" => {
                if c.is_some() {
                    return Err(bad("isotropic takes F, not C"));
                }
                Ok(Self::Isotropic { f, d: d.unwrap_or(2) })
            }
            "pure" => {
                if f.is_some() || d.is_some() {
                    return Err(bad("pure takes only C"));
                }
                Ok(Self::Pure { c })
            }
            other => Err(bad(&format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    #[serde(rename = "alpha")]
    Alpha,
    F,
}

impl Axis {
    pub fn as_str(self) -> &'static str {
        match self {
            Axis::Alpha => "alpha",
            Axis::F => "F",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveRow {
    pub x: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveTable {
    pub axis: Axis,
    pub series: Vec<String>,
    pub rows: Vec<CurveRow>,
}

impl CurveTable {
    /// Entropy columns converted from bits; the axis column is untouched.
    pub fn in_base(mut self, base: LogBase) -> Self {
        for row in &mut self.rows {
            for v in &mut row.values {
                *v = base.from_bits(*v);
            }
        }
        self
    }

    /// Header of the axis name then one column per series label.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(self.axis.as_str());
        for s in &self.series {
            out.push(',');
            // labels contain commas, so quote them
            out.push('"');
            out.push_str(s);
            out.push('"');
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{}", row.x));
            for v in &row.values {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `n` log-spaced points from `lo` to `hi`, both included exactly. A zero
/// lower end is kept as the α → 0 limit in front of a log grid starting at
/// min(0.01, hi/2).
pub fn alpha_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo < hi) || n < 2 {
        return Err(Error::Domain(format!("bad alpha range [{lo}, {hi}] with {n} points")));
    }
    if lo == 0.0 {
        let start = DEFAULT_ALPHA_MIN.min(hi / 2.0);
        let mut g = vec![0.0];
        g.extend(alpha_grid(start, hi, n.saturating_sub(1).max(2))?);
        return Ok(g);
    }
    let (a, b) = (lo.ln(), hi.ln());
    let mut g: Vec<f64> = (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect();
    g[0] = lo;
    g[n - 1] = hi;
    Ok(g)
}

/// `n` evenly spaced points on [lo, hi].
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || n < 2 {
        return Err(Error::Domain(format!("bad range [{lo}, {hi}] with {n} points")));
    }
    let mut g: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    g[n - 1] = hi;
    Ok(g)
}

fn check_series(series: &[SeriesSpec]) -> Result<()> {
    if series.is_empty() || series.len() > 4 {
        return Err(Error::InvalidSpec(format!("need 1 to 4 series, got {}", series.len())));
    }
    Ok(())
}

fn finite(v: f64, what: &dyn fmt::Display) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NumericalFailure(format!("non-finite value for {what}")))
    }
}

/// Each series evaluated at its own F for every α in `alphas` (increasing).
pub fn alpha_curve(series: &[SeriesSpec], alphas: &[f64]) -> Result<CurveTable> {
    check_series(series)?;
    if alphas.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("alpha grid must be strictly increasing".into()));
    }
    let rows = alphas
        .iter()
        .map(|&a| {
            let alpha = Alpha::new(a)?;
            let values = series
                .iter()
                .map(|s| finite(s.value(alpha)?, s))
                .collect::<Result<Vec<_>>>()?;
            Ok(CurveRow { x: a, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveTable {
        axis: Axis::Alpha,
        series: series.iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

/// Each series at fixed α with F (or C) running over `fs` (increasing).
pub fn f_curve(series: &[SeriesSpec], alpha: Alpha, fs: &[f64]) -> Result<CurveTable> {
    check_series(series)?;
    if fs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("F grid must be strictly increasing".into()));
    }
    let rows = fs
        .iter()
        .map(|&f| {
            let values = series
                .iter()
                .map(|s| finite(s.value_at(f, alpha)?, s))
                .collect::<Result<Vec<_>>>()?;
            Ok(CurveRow { x: f, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveTable {
        axis: Axis::F,
        series: series.iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

fn sign(v: f64) -> i8 {
    if v > ZERO_DIFF {
        1
    } else if v < -ZERO_DIFF {
        -1
    } else {
        0
    }
}

/// α values where a − b changes sign, each refined by bisection to 1e−8.
/// Grid points where the curves agree to 1e−12 are skipped, so identical
/// series report no crossing.
pub fn find_crossings(a: &SeriesSpec, b: &SeriesSpec, alphas: &[f64]) -> Result<Vec<f64>> {
    let diff = |x: f64| -> Result<f64> {
        let alpha = Alpha::new(x)?;
        Ok(a.value(alpha)? - b.value(alpha)?)
    };
    let mut crossings = Vec::new();
    let mut last: Option<(f64, i8)> = None;
    for &x in alphas {
        let s = sign(diff(x)?);
        if s == 0 {
            continue;
        }
        if let Some((x0, s0)) = last {
            if s0 != s {
                crossings.push(bisect(&diff, x0, x, s0)?);
            }
        }
        last = Some((x, s));
    }
    Ok(crossings)
}

fn bisect(diff: &impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, s_lo: i8) -> Result<f64> {
    while hi - lo > CROSSING_TOL {
        let mid = 0.5 * (lo + hi);
        let s = sign(diff(mid)?);
        if s == 0 {
            return Ok(mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_label() {
        let s: SeriesSpec = "werner:F=0.8".parse().unwrap();
        assert_eq!(s, SeriesSpec::werner(0.8, 2));
        assert_eq!(s.to_string(), "werner:F=0.8,d=2");
        let s: SeriesSpec = "iso:F=0.7,d=3".parse().unwrap();
        assert_eq!(s, SeriesSpec::isotropic(0.7, 3));
        assert_eq!("pure:C=0.5".parse::<SeriesSpec>().unwrap(), SeriesSpec::pure(0.5));
        assert_eq!("pure".parse::<SeriesSpec>().unwrap(), SeriesSpec::Pure { c: None });
        for bad in ["bell:F=1", "werner:C=0.5", "pure:F=0.3", "werner:F=x", "werner:F"] {
            assert!(bad.parse::<SeriesSpec>().is_err(), "{bad}");
        }
        for s in ["werner:F=0.8,d=3", "isotropic:F=0.25,d=5", "pure:C=0.5"] {
            assert_eq!(s.parse::<SeriesSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn grids() {
        let g = alpha_grid(0.01, 1.0, DEFAULT_ALPHA_POINTS).unwrap();
        assert_eq!(g.len(), 200);
        assert_eq!((g[0], g[199]), (0.01, 1.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        let ratio = g[1] / g[0];
        assert!((g[100] / g[99] - ratio).abs() < 1e-12);
        let g = alpha_grid(0.0, 1.0, 10).unwrap();
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1], 0.01);
        assert!(alpha_grid(0.5, 0.1, 10).is_err());
    }

    #[test]
    fn werner_vs_pure_order_and_crossing() {
        let w = SeriesSpec::werner(0.8, 2);
        let p = SeriesSpec::pure(0.5);
        let one = Alpha::new(1.0).unwrap();
        assert!((w.value(one).unwrap() - 0.72193).abs() < 1e-5);
        assert!((p.value(one).unwrap() - 0.35459).abs() < 2e-5);
        let low = Alpha::new(0.05).unwrap();
        assert!(w.value(low).unwrap() < p.value(low).unwrap());
        let grid = alpha_grid(0.01, 1.0, DEFAULT_ALPHA_POINTS).unwrap();
        let xs = find_crossings(&w, &p, &grid).unwrap();
        assert_eq!(xs.len(), 1, "{xs:?}");
        assert!(xs[0] > 0.05 && xs[0] < 1.0);
    }

    #[test]
    fn self_difference_has_no_crossing() {
        let s = SeriesSpec::isotropic(0.7, 3);
        let grid = alpha_grid(0.01, 1.0, 50).unwrap();
        assert!(find_crossings(&s, &s, &grid).unwrap().is_empty());
        let t = alpha_curve(&[s, s], &grid).unwrap();
        assert!(t.rows.iter().all(|r| r.values[0] == r.values[1]));
    }

    #[test]
    fn tables() {
        let t = alpha_curve(&[SeriesSpec::pure(1.0)], &[0.5, 2.0]).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert!((t.rows[1].values[0] - 1.0).abs() < 1e-12);
        let csv = t.clone().in_base(LogBase::E).to_csv();
        assert!(csv.starts_with("alpha,\"pure:C=1\"\n"));
        let e = t.in_base(LogBase::E).rows[0].values[0];
        assert!((e - std::f64::consts::LN_2).abs() < 1e-12);

        let fs = linear_grid(0.0, 1.0, 11).unwrap();
        let t = f_curve(&[SeriesSpec::Werner { f: None, d: 3 }], Alpha::zero(), &fs).unwrap();
        for r in &t.rows {
            assert!((r.values[0] - r.x.max(0.0)).abs() < 1e-9, "{r:?}");
        }
        assert!(alpha_curve(&[], &[0.5]).is_err());
        assert!(alpha_curve(&[SeriesSpec::pure(0.5)], &[0.5, 0.4]).is_err());
        assert!(SeriesSpec::Pure { c: None }.value(Alpha::zero()).is_err());
    }
}
