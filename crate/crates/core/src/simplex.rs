//! Small Nelder-Mead simplex minimizer used by the roof search for its
//! low-dimensional inner problems.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub max_evals: usize,
    /// Stop when the spread of function values in the simplex drops below this.
    pub ftol: f64,
    /// Stop when the simplex diameter drops below this.
    pub xtol: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            max_evals: 200,
            ftol: 1e-14,
            xtol: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexResult<const N: usize> {
    pub x: [f64; N],
    pub fx: f64,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Minimizes `f` from `x0` with an axis-aligned initial simplex of the given
/// per-coordinate `steps`. `f0` is f(x0), which callers usually know already.
/// The dimension is a const parameter so the inner loop never allocates.
pub fn nelder_mead<const N: usize>(
    mut f: impl FnMut(&[f64; N]) -> f64,
    x0: [f64; N],
    f0: f64,
    steps: [f64; N],
    opts: &SimplexOptions,
) -> SimplexResult<N> {
    // N + 1 vertices; a Vec keeps this stable-Rust friendly, allocated once
    let mut pts: Vec<[f64; N]> = vec![x0; N + 1];
    let mut vals: Vec<f64> = vec![f0; N + 1];
    let mut evals = 0;
    for i in 0..N {
        pts[i + 1][i] += steps[i];
        vals[i + 1] = f(&pts[i + 1]);
        evals += 1;
    }

    let mut order: Vec<usize> = (0..=N).collect();
    while evals < opts.max_evals {
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        let (best, worst, second) = (order[0], order[N], order[N - 1]);
        if (vals[worst] - vals[best]).abs() <= opts.ftol {
            break;
        }
        let diam = pts
            .iter()
            .map(|p| p.iter().zip(&pts[best]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if diam <= opts.xtol {
            break;
        }

        let mut centroid = [0.0; N];
        for &k in &order[..N] {
            for (c, x) in centroid.iter_mut().zip(&pts[k]) {
                *c += x / N as f64;
            }
        }
        let w = pts[worst];
        let along = |t: f64| -> [f64; N] { std::array::from_fn(|i| centroid[i] + t * (centroid[i] - w[i])) };

        let xr = along(REFLECT);
        let fr = f(&xr);
        evals += 1;
        if fr < vals[best] {
            let xe = along(EXPAND);
            let fe = f(&xe);
            evals += 1;
            if fe < fr {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if fr < vals[second] {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        let xc = if fr < vals[worst] { along(CONTRACT) } else { along(-CONTRACT) };
        let fc = f(&xc);
        evals += 1;
        if fc < vals[worst].min(fr) {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        let xb = pts[best];
        for k in 0..=N {
            if k == best {
                continue;
            }
            for (x, b) in pts[k].iter_mut().zip(&xb) {
                *x = b + SHRINK * (*x - b);
            }
            vals[k] = f(&pts[k]);
            evals += 1;
        }
    }
    let best = (0..=N).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap();
    SimplexResult {
        x: pts[best],
        fx: vals[best],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64; 2]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let x0 = [-1.2, 1.0];
        let r = nelder_mead(
            f,
            x0,
            f(&x0),
            [0.5, 0.5],
            &SimplexOptions {
                max_evals: 2000,
                ..Default::default()
            },
        );
        assert!((r.x[0] - 1.0).abs() < 1e-4 && (r.x[1] - 1.0).abs() < 1e-4, "{:?}", r.x);
    }

    #[test]
    fn never_worse_than_start() {
        let f = |x: &[f64; 2]| x[0].abs() + (x[1] - 3.0).abs();
        let r = nelder_mead(f, [0.0, 3.0], 0.0, [1.0, 1.0], &SimplexOptions::default());
        assert_eq!(r.fx, 0.0);
    }
}
