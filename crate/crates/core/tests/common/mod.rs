#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xxz_core::{Complex64, ComplexMatrix, SpinParams};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// J, Jz ∈ [-20, 20], B ∈ b_range, T ∈ [0.05, 10].
pub fn draw_params(rng: &mut ChaCha8Rng, b_range: (f64, f64)) -> SpinParams {
    let b = if b_range.0 == b_range.1 {
        b_range.0
    } else {
        rng.random_range(b_range.0..b_range.1)
    };
    SpinParams::new(
        rng.random_range(-20.0..20.0),
        rng.random_range(-20.0..20.0),
        b,
        rng.random_range(0.05..10.0),
    )
    .unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| random_complex(rng))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> ComplexMatrix {
    random_matrix(rng, dim).hermitian_part().scale(scale)
}

pub fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = random_matrix(rng, dim);
    let m = g * g.adjoint();
    m.scale(1.0 / m.trace().re).hermitian_part()
}

pub fn random_ket(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| random_complex(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Unitary from the QR-free route: eigenvectors of a random Hermitian
/// matrix, each column given a random phase.
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let e = xxz_core::linalg::eig_hermitian(&random_hermitian(rng, dim, 1.0)).unwrap();
    let phases: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
        .collect();
    ComplexMatrix::from_fn(dim, |r, c| e.vectors()[(r, c)] * phases[c])
}
