//! Random states and unitaries. The roof minimizer draws its starting
//! points from here; tests and property suites draw their inputs.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{orthonormalize_columns, ComplexMatrix, DensityMatrix};

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Isometry with orthonormal columns from an orthonormalized complex
/// Gaussian matrix (Haar distributed on the Stiefel manifold).
pub fn haar_isometry<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    loop {
        let mut g = ginibre(rng, rows, cols);
        if orthonormalize_columns(&mut g) > 1e-8 {
            return g;
        }
    }
}

pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    haar_isometry(rng, n, n)
}

pub fn random_pure<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
    let n = crate::linalg::norm_sqr(&v).sqrt();
    v.into_iter().map(|z| z / n).collect()
}

/// Random density matrix ρ = GG†/tr(GG†) with G a dim×rank Ginibre matrix.
pub fn random_density<R: Rng + ?Sized>(
    rng: &mut R,
    dim_a: usize,
    dim_b: usize,
    rank: usize,
) -> DensityMatrix {
    let n = dim_a * dim_b;
    let g = ginibre(rng, n, rank);
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    let m = m.scale_real(1.0 / tr).hermitian_part();
    DensityMatrix::new(m, dim_a, dim_b).expect("Ginibre state is a valid density matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = haar_unitary(&mut rng, 5);
        let uu = u.adjoint().matmul(&u);
        assert!(uu.max_abs_diff(&ComplexMatrix::identity(5)) < 1e-12);
    }

    #[test]
    fn random_density_has_requested_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_density(&mut rng, 2, 2, 2);
        let ev = rho.spectrum().unwrap().eigenvalues;
        assert!(ev[1] > 1e-6);
        assert!(ev[2].abs() < 1e-12);
    }
}
