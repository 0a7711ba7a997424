//! Small dense linear-algebra helpers shared by all modules.
//!
//! Everything here operates on `nalgebra` dynamic matrices; complex Hermitian
//! spectra are obtained through the real symmetric embedding
//! `H -> [[Re H, -Im H], [Im H, Re H]]`, which doubles every eigenvalue's
//! multiplicity but preserves the spectrum itself.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

pub type C64 = Complex64;
pub type CMat = DMatrix<Complex64>;
pub type RMat = DMatrix<f64>;

pub const ZERO_C: C64 = Complex64::new(0.0, 0.0);
pub const ONE_C: C64 = Complex64::new(1.0, 0.0);

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Largest entry modulus of the anti-Hermitian part.
pub fn hermiticity_deviation(m: &CMat) -> f64 {
    let mut dev = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm() / 2.0);
        }
    }
    dev
}

/// Symmetrised Hermitian part `(M + M^dag) / 2`.
pub fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()).scale(0.5)
}

/// Real symmetric embedding `[[Re H, -Im H], [Im H, Re H]]` of a Hermitian matrix.
pub fn real_embedding(h: &CMat) -> RMat {
    let d = h.nrows();
    let mut out = RMat::zeros(2 * d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            let z = h[(i, j)];
            out[(i, j)] = z.re;
            out[(d + i, d + j)] = z.re;
            out[(i, d + j)] = -z.im;
            out[(d + i, j)] = z.im;
        }
    }
    out
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Computed on the real embedding; the doubled spectrum is collapsed by
/// averaging adjacent pairs after sorting.
pub fn hermitian_eigenvalues(h: &CMat) -> Vec<f64> {
    let d = h.nrows();
    if d == 0 {
        return Vec::new();
    }
    let embedded = real_embedding(h);
    let mut eigs: Vec<f64> = symmetric_eigenvalues(&embedded);
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (0..d).map(|i| (eigs[2 * i] + eigs[2 * i + 1]) / 2.0).collect()
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &CMat) -> f64 {
    hermitian_eigenvalues(h)
        .first()
        .copied()
        .unwrap_or(f64::INFINITY)
}

/// Eigenvalues of a real symmetric matrix (unsorted).
pub fn symmetric_eigenvalues(m: &RMat) -> Vec<f64> {
    nalgebra::linalg::SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .copied()
        .collect()
}

/// Complex matrix with independent standard-normal real and imaginary parts.
pub fn random_complex_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMat {
    CMat::from_fn(rows, cols, |_, _| {
        C64::new(randn(rng), randn(rng))
    })
}

/// Random Hermitian matrix, entries O(1).
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> CMat {
    hermitize(&random_complex_matrix(dim, dim, rng))
}

/// Random positive semidefinite matrix `G G^dag`.
pub fn random_psd<R: Rng>(dim: usize, rank: usize, rng: &mut R) -> CMat {
    let g = random_complex_matrix(dim, rank.max(1), rng);
    &g * g.adjoint()
}

/// Random unit vector in C^dim.
pub fn random_unit_vector<R: Rng>(dim: usize, rng: &mut R) -> DVector<C64> {
    let mut v = DVector::from_fn(dim, |_, _| C64::new(randn(rng), randn(rng)));
    let norm = v.norm();
    v /= C64::new(norm, 0.0);
    v
}

// Box-Muller; avoids pulling in a distributions crate for one sampler.
fn randn<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn embedding_preserves_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = random_hermitian(5, &mut rng);
        let direct = hermitian_eigenvalues(&h);
        // trace and trace of square agree with the complex matrix
        let tr: f64 = direct.iter().sum();
        assert_abs_diff_eq!(tr, h.trace().re, epsilon = 1e-10);
        let tr2: f64 = direct.iter().map(|e| e * e).sum();
        assert_abs_diff_eq!(tr2, (&h * &h).trace().re, epsilon = 1e-9);
    }

    #[test]
    fn psd_min_eigenvalue_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let p = random_psd(6, 3, &mut rng);
            assert!(min_eigenvalue(&p) >= -1e-10);
        }
    }

    #[test]
    fn hermitize_kills_deviation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_complex_matrix(4, 4, &mut rng);
        assert!(hermiticity_deviation(&hermitize(&g)) <= 1e-14);
    }
}
