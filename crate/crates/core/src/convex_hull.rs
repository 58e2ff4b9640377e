//! Lower convex envelope co(f) of a scalar function on a closed interval.
//!
//! The function is sampled on a uniform grid (plus any caller-supplied
//! nodes), the lower hull of the samples is taken with a monotone chain, and
//! cells where f dips below the hull between samples are bisected until the
//! hull agrees with f or the cell is narrower than `min_cell`.

use crate::error::{Error, Result};

pub const DEFAULT_GRID: usize = 4001;
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;
pub const DEFAULT_MIN_CELL: f64 = 1e-7;
const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct HullOptions {
    pub grid: usize,
    pub refine_tol: f64,
    pub min_cell: f64,
    /// Extra sample locations, e.g. both sides of a known jump.
    pub extra_nodes: Vec<f64>,
}

impl Default for HullOptions {
    fn default() -> Self {
        Self {
            grid: DEFAULT_GRID,
            refine_tol: DEFAULT_REFINE_TOL,
            min_cell: DEFAULT_MIN_CELL,
            extra_nodes: Vec::new(),
        }
    }
}

impl HullOptions {
    pub fn with_grid(grid: usize) -> Self {
        Self {
            grid,
            ..Self::default()
        }
    }

    pub fn nodes(mut self, nodes: impl IntoIterator<Item = f64>) -> Self {
        self.extra_nodes.extend(nodes);
        self
    }
}

/// Samples of f on an increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub lo: f64,
    pub hi: f64,
}

impl SampledCurve {
    pub fn sample(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, opts: &HullOptions) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Domain(format!("bad hull domain [{lo}, {hi}]")));
        }
        if opts.grid < 3 {
            return Err(Error::Domain(format!("hull grid needs at least 3 points, got {}", opts.grid)));
        }
        let n = opts.grid;
        let step = (hi - lo) / (n - 1) as f64;
        let mut xs: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
        xs[n - 1] = hi;
        xs.extend(opts.extra_nodes.iter().copied().filter(|x| *x > lo && *x < hi));
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        let ys = xs
            .iter()
            .map(|&x| {
                let y = f(x);
                if y.is_finite() {
                    Ok(y)
                } else {
                    Err(Error::NonFiniteFunction(x))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { xs, ys, lo, hi })
    }
}

/// Piecewise-linear convex function through its extreme points.
#[derive(Debug, Clone, PartialEq)]
pub struct HullCurve {
    support_xs: Vec<f64>,
    support_ys: Vec<f64>,
}

impl HullCurve {
    pub fn support_xs(&self) -> &[f64] {
        &self.support_xs
    }

    pub fn support_ys(&self) -> &[f64] {
        &self.support_ys
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.support_xs[0], *self.support_xs.last().unwrap())
    }

    /// Linear interpolation between the bracketing support points.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.domain();
        if !(x >= lo - DOMAIN_SLACK && x <= hi + DOMAIN_SLACK) {
            return Err(Error::OutOfDomain { x, lo, hi });
        }
        Ok(self.eval_clamped(x.clamp(lo, hi)))
    }

    fn eval_clamped(&self, x: f64) -> f64 {
        let xs = &self.support_xs;
        let ys = &self.support_ys;
        let i = xs.partition_point(|&s| s <= x);
        if i == 0 {
            return ys[0];
        }
        if i >= xs.len() {
            return ys[xs.len() - 1];
        }
        let (x0, x1, y0, y1) = (xs[i - 1], xs[i], ys[i - 1], ys[i]);
        if x == x0 {
            return y0;
        }
        let t = (x - x0) / (x1 - x0);
        y0 + t * (y1 - y0)
    }
}

/// Evaluates a hull at query points that move mostly forward, walking from
/// the previous segment instead of searching from scratch.
struct Cursor<'a> {
    hull: &'a HullCurve,
    seg: usize,
}

impl<'a> Cursor<'a> {
    fn new(hull: &'a HullCurve) -> Self {
        Self { hull, seg: 0 }
    }

    fn eval(&mut self, x: f64) -> f64 {
        let xs = &self.hull.support_xs;
        while self.seg + 2 < xs.len() && xs[self.seg + 1] <= x {
            self.seg += 1;
        }
        while self.seg > 0 && xs[self.seg] > x {
            self.seg -= 1;
        }
        let ys = &self.hull.support_ys;
        let (x0, x1, y0, y1) = (xs[self.seg], xs[self.seg + 1], ys[self.seg], ys[self.seg + 1]);
        if x <= x0 {
            return y0;
        }
        if x >= x1 {
            return y1;
        }
        y0 + (x - x0) / (x1 - x0) * (y1 - y0)
    }
}

/// Lower hull of points sorted by x. Collinear (or roundoff-collinear)
/// middle points are dropped.
fn monotone_chain(xs: &[f64], ys: &[f64]) -> Vec<usize> {
    let mut hull: Vec<usize> = Vec::with_capacity(64);
    for i in 0..xs.len() {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let (dx1, dy1) = (xs[a] - xs[o], ys[a] - ys[o]);
            let (dx2, dy2) = (xs[i] - xs[o], ys[i] - ys[o]);
            let cross = dx1 * dy2 - dy1 * dx2;
            // each y carries rounding of order eps·|y|, which matters when
            // the differences dy are much smaller than y itself
            let ymax = ys[o].abs().max(ys[a].abs()).max(ys[i].abs());
            let scale = (dx1 * dy2).abs() + (dy1 * dx2).abs() + 4.0 * ymax * (dx1.abs() + dx2.abs());
            if cross <= 1e-14 * scale {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    hull
}

fn hull_of(xs: &[f64], ys: &[f64]) -> HullCurve {
    let idx = monotone_chain(xs, ys);
    HullCurve {
        support_xs: idx.iter().map(|&i| xs[i]).collect(),
        support_ys: idx.iter().map(|&i| ys[i]).collect(),
    }
}

/// co(f) on [lo, hi].
pub fn lower_envelope(f: impl Fn(f64) -> f64, lo: f64, hi: f64, opts: &HullOptions) -> Result<HullCurve> {
    let SampledCurve { mut xs, mut ys, .. } = SampledCurve::sample(&f, lo, hi, opts)?;
    let mut hull = hull_of(&xs, &ys);
    // cells still to be checked, as left endpoints
    let mut pending: Vec<f64> = xs[..xs.len() - 1].to_vec();
    // Midpoint dips are checked against half the tolerance so the gap away
    // from the midpoint stays inside refine_tol too.
    let threshold = 0.5 * opts.refine_tol;
    while !pending.is_empty() {
        let mut inserted: Vec<(f64, f64)> = Vec::new();
        // pending is increasing, so both lookups can walk forward
        let mut at = Cursor::new(&hull);
        let mut i = 0;
        for &left in &pending {
            while i < xs.len() && xs[i] < left {
                i += 1;
            }
            if i + 1 >= xs.len() || xs[i] != left {
                continue;
            }
            let right = xs[i + 1];
            if right - left < opts.min_cell {
                continue;
            }
            let mid = 0.5 * (left + right);
            let fm = f(mid);
            if !fm.is_finite() {
                return Err(Error::NonFiniteFunction(mid));
            }
            let gm = fm - at.eval(mid);
            if gm < -threshold {
                inserted.push((mid, fm));
                continue;
            }
            // A dip between the midpoint and an end (typically next to an
            // isolated hull vertex) is invisible at the midpoint. Fit a
            // parabola to f − hull through the three points and probe its
            // minimum.
            let ga = ys[i] - at.eval(left);
            let gb = ys[i + 1] - at.eval(right);
            // p(t) = a t² + b t + ga on t ∈ [0, 1]
            let a = 2.0 * (ga - 2.0 * gm + gb);
            let b = 4.0 * gm - 3.0 * ga - gb;
            if a <= 0.0 {
                continue;
            }
            let t = -b / (2.0 * a);
            let predicted = ga - b * b / (4.0 * a);
            let x = left + t * (right - left);
            if predicted >= -threshold || x - left < 0.5 * opts.min_cell || right - x < 0.5 * opts.min_cell {
                continue;
            }
            let fx = f(x);
            if !fx.is_finite() {
                return Err(Error::NonFiniteFunction(x));
            }
            if fx < at.eval(x) - threshold {
                inserted.push((x, fx));
            }
        }
        if inserted.is_empty() {
            break;
        }
        pending.clear();
        let mut merged_x = Vec::with_capacity(xs.len() + inserted.len());
        let mut merged_y = Vec::with_capacity(xs.len() + inserted.len());
        let mut ins = inserted.iter().peekable();
        for (k, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
            merged_x.push(x);
            merged_y.push(y);
            if let Some(&&(mx, my)) = ins.peek() {
                if k + 1 < xs.len() && mx > x && mx < xs[k + 1] {
                    merged_x.push(mx);
                    merged_y.push(my);
                    pending.push(x);
                    pending.push(mx);
                    ins.next();
                }
            }
        }
        xs = merged_x;
        ys = merged_y;
        hull = hull_of(&xs, &ys);
    }
    Ok(hull)
}
