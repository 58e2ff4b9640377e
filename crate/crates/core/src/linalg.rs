//! Dense complex matrices and the handful of kernels the rest of the crate
//! needs: Hermitian eigendecomposition (cyclic Jacobi), PSD square root,
//! partial trace and Kronecker product.
//!
//! Sizes here never exceed 81x81, so everything is plain row-major `Vec`
//! storage with O(n³) loops.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::config::TOL;
use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// |v⟩⟨v|
    pub fn projector(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate (in the stored basis).
    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max |M - M†| entrywise; infinite for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// Replaces M by (M + M†)/2.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product: entry (i·rb + k, j·cb + l) = a[i,j]·b[k,l].
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (rb, cb) = (b.rows, b.cols);
    ComplexMatrix::from_fn(a.rows * rb, a.cols * cb, |r, c| {
        a[(r / rb, c / cb)] * b[(r % rb, c % cb)]
    })
}

pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Eigen-decomposition M = Q Λ Q† of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Column k is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let q = &self.eigenvectors;
        let n = q.rows;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..self.eigenvalues.len())
                .map(|k| q[(i, k)] * self.eigenvalues[k] * q[(j, k)].conj())
                .sum()
        })
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Each rotation
/// first phases the (p, q) element real and then applies the real symmetric
/// Jacobi rotation that annihilates it.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianSpectrum> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let dev = m.hermitian_deviation();
    if !(dev <= TOL.eig_hermitian) {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.rows;
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.data.iter().map(|z| z.norm()).fold(0.0, f64::max);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off == 0.0 || off.sqrt() <= 1e-16 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // G = diag-phase · real rotation, restricted to (p, q).
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eig(m).map(|s| s.eigenvalues)
}

/// Clamps roundoff-negative eigenvalues to zero and rejects genuinely
/// negative ones.
pub fn clamp_psd(eigenvalues: &mut [f64]) -> Result<()> {
    for l in eigenvalues.iter_mut() {
        if *l < -TOL.psd_reject {
            return Err(Error::NotPsd(*l));
        }
        if *l < 0.0 {
            *l = 0.0;
        }
    }
    Ok(())
}

/// Hermitian PSD square root Q·√Λ·Q†.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let mut spec = hermitian_eig(m)?;
    clamp_psd(&mut spec.eigenvalues)?;
    for l in spec.eigenvalues.iter_mut() {
        *l = l.sqrt();
    }
    Ok(spec.reconstruct())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated bipartite density matrix on C^dim_a ⊗ C^dim_b.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows,
                cols: matrix.cols,
            });
        }
        if dim_a == 0 || dim_b == 0 || dim_a * dim_b != matrix.rows {
            return Err(Error::DimensionMismatch(format!(
                "{dim_a}x{dim_b} does not match matrix size {}",
                matrix.rows
            )));
        }
        let dev = matrix.hermitian_deviation();
        if !(dev <= TOL.hermitian) {
            return Err(Error::NotHermitian(dev));
        }
        let tr = matrix.trace().re;
        if !((tr - 1.0).abs() <= TOL.trace) {
            return Err(Error::BadTrace(tr));
        }
        let min = hermitian_eigenvalues(&matrix)?
            .last()
            .copied()
            .unwrap_or(0.0);
        if min < -TOL.psd_clamp {
            return Err(Error::NotPsd(min));
        }
        Ok(Self {
            matrix,
            dim_a,
            dim_b,
        })
    }

    /// |ψ⟩⟨ψ| for a unit vector ψ.
    pub fn from_pure(psi: &[Complex64], dim_a: usize, dim_b: usize) -> Result<Self> {
        let n2 = norm_sqr(psi);
        if (n2 - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(n2));
        }
        Self::new(ComplexMatrix::projector(psi), dim_a, dim_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    /// Spectrum with negative roundoff clamped to zero.
    pub fn spectrum(&self) -> Result<HermitianSpectrum> {
        let mut spec = hermitian_eig(&self.matrix)?;
        clamp_psd(&mut spec.eigenvalues)?;
        Ok(spec)
    }
}

/// Reduced state of the kept subsystem.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> ComplexMatrix {
    let (da, db) = (rho.dim_a, rho.dim_b);
    let m = &rho.matrix;
    match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|k| m[(i * db + k, j * db + k)]).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |i, j| {
            (0..da).map(|k| m[(k * db + i, k * db + j)]).sum()
        }),
    }
}

/// Swap operator 𝔽 = Σ |ij⟩⟨ji| on C^d ⊗ C^d.
pub fn swap_operator(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d * d, d * d, |r, c| {
        let (i, j) = (r / d, r % d);
        if c == j * d + i {
            ONE
        } else {
            ZERO
        }
    })
}

/// Pauli Y.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_vec(
        2,
        2,
        vec![ZERO, Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), ZERO],
    )
    .expect("static 2x2")
}

/// Orthonormalizes the columns of `m` in place (modified Gram-Schmidt,
/// applied twice for stability). Returns the smallest column norm seen
/// before normalization, so callers can detect rank deficiency.
pub fn orthonormalize_columns(m: &mut ComplexMatrix) -> f64 {
    let (rows, cols) = (m.rows, m.cols);
    let mut min_norm = f64::INFINITY;
    for pass in 0..2 {
        for j in 0..cols {
            for k in 0..j {
                let mut dot = ZERO;
                for i in 0..rows {
                    dot += m[(i, k)].conj() * m[(i, j)];
                }
                for i in 0..rows {
                    let mk = m[(i, k)];
                    m[(i, j)] -= dot * mk;
                }
            }
            let nrm = (0..rows).map(|i| m[(i, j)].norm_sqr()).sum::<f64>().sqrt();
            if pass == 0 {
                min_norm = min_norm.min(nrm);
            }
            if nrm > 0.0 {
                for i in 0..rows {
                    m[(i, j)] /= nrm;
                }
            }
        }
    }
    min_norm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_identity_and_diagonal() {
        let s = hermitian_eig(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 1.0]);
        let s = hermitian_eig(&ComplexMatrix::from_real_diag(&[0.2, 0.8])).unwrap();
        assert!((s.eigenvalues[0] - 0.8).abs() < 1e-15);
        assert!((s.eigenvalues[1] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn eig_pauli_y() {
        let s = hermitian_eig(&sigma_y()).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] + 1.0).abs() < 1e-14);
        assert!(s.reconstruct().max_abs_diff(&sigma_y()) < 1e-14);
    }

    #[test]
    fn eig_rejects_bad_input() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotSquare { .. })));
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(0.5, 0.0);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = psd_sqrt(&ComplexMatrix::from_real_diag(&[4.0, 1.0])).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diag(&[2.0, 1.0])) < 1e-14);
        let i3 = ComplexMatrix::identity(3);
        assert!(psd_sqrt(&i3).unwrap().max_abs_diff(&i3) < 1e-14);
        let neg = ComplexMatrix::from_real_diag(&[1.0, -1e-3]);
        assert!(matches!(psd_sqrt(&neg), Err(Error::NotPsd(_))));
        // roundoff-sized negatives are clamped
        let tiny = ComplexMatrix::from_real_diag(&[1.0, -1e-11]);
        assert!(psd_sqrt(&tiny).is_ok());
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
        let yy = kron(&sigma_y(), &sigma_y());
        let anti = [-1.0, 1.0, 1.0, -1.0];
        for r in 0..4 {
            for col in 0..4 {
                let want = if r + col == 3 { c(anti[r], 0.0) } else { ZERO };
                assert_eq!(yy[(r, col)], want);
            }
        }
        let e1 = ComplexMatrix::projector(&[ONE, ZERO]);
        let e2 = ComplexMatrix::projector(&[ZERO, ONE]);
        let p = kron(&e1, &e2);
        for r in 0..4 {
            for col in 0..4 {
                let want = if r == 1 && col == 1 { ONE } else { ZERO };
                assert_eq!(p[(r, col)], want);
            }
        }
    }

    #[test]
    fn partial_trace_product_and_bell() {
        let psi = kron_vec(&[ONE, ZERO], &[ZERO, ONE]);
        let rho = DensityMatrix::from_pure(&psi, 2, 2).unwrap();
        let ra = partial_trace(&rho, Subsystem::A);
        assert!(ra.max_abs_diff(&ComplexMatrix::from_real_diag(&[1.0, 0.0])) < 1e-15);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = [c(h, 0.0), ZERO, ZERO, c(h, 0.0)];
        let rho = DensityMatrix::from_pure(&bell, 2, 2).unwrap();
        let rb = partial_trace(&rho, Subsystem::B);
        assert!(rb.max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn partial_trace_schmidt_form() {
        // √μ1 |a1 b1⟩ + √μ2 |a2 b2⟩ with rotated local bases
        let mu: [f64; 2] = [0.933, 0.067];
        let (ct, st) = (0.3f64.cos(), 0.3f64.sin());
        let a1 = [c(ct, 0.0), c(st, 0.0)];
        let a2 = [c(-st, 0.0), c(ct, 0.0)];
        let b1 = [c(0.6, 0.0), c(0.0, 0.8)];
        let b2 = [c(0.0, 0.8), c(0.6, 0.0)];
        let t1 = kron_vec(&a1, &b1);
        let t2 = kron_vec(&a2, &b2);
        let psi: Vec<_> = t1
            .iter()
            .zip(&t2)
            .map(|(x, y)| x * mu[0].sqrt() + y * mu[1].sqrt())
            .collect();
        let rho = DensityMatrix::from_pure(&psi, 2, 2).unwrap();
        let ev = hermitian_eigenvalues(&partial_trace(&rho, Subsystem::B)).unwrap();
        assert!((ev[0] - 0.933).abs() < 1e-12);
        assert!((ev[1] - 0.067).abs() < 1e-12);
    }

    #[test]
    fn density_validation() {
        let m = ComplexMatrix::identity(4).scale_real(0.5);
        assert!(matches!(DensityMatrix::new(m, 2, 2), Err(Error::BadTrace(_))));
        let m = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(matches!(
            DensityMatrix::new(m.clone(), 3, 2),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(DensityMatrix::new(m, 2, 2).is_ok());
        let neg = ComplexMatrix::from_real_diag(&[1.1, -0.1]);
        assert!(matches!(DensityMatrix::new(neg, 1, 2), Err(Error::NotPsd(_))));
    }

    #[test]
    fn swap_operator_trace() {
        for d in 2..5 {
            assert!((swap_operator(d).trace().re - d as f64).abs() < 1e-15);
        }
    }
}
