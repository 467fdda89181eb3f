#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xxz_core::linalg::eig_hermitian;
use xxz_core::model::Param;
use xxz_core::{Complex64, ComplexMatrix, Engine, Measure, SpinParams};
use xxz_tools::{AxisSpec, OutputFormat, SweepSpec};

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

pub fn draws(seed: u64, n: usize, b_range: (f64, f64)) -> Vec<SpinParams> {
    let mut r = rng(seed);
    (0..n).map(|_| draw_params(&mut r, b_range)).collect()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| random_complex(rng)).hermitian_part()
}

pub fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| random_complex(rng));
    let m = g * g.adjoint();
    m.scale(1.0 / m.trace().re).hermitian_part()
}

pub fn random_ket(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| random_complex(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let e = eig_hermitian(&random_hermitian(rng, dim)).unwrap();
    let phases: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
        .collect();
    ComplexMatrix::from_fn(dim, |r, c| e.vectors()[(r, c)] * phases[c])
}

pub fn axis(s: &str) -> AxisSpec {
    s.parse().unwrap()
}

pub fn spec(
    measures: &[Measure],
    engine: Engine,
    axes: &[&str],
    fixed: &[(Param, f64)],
    jobs: usize,
) -> SweepSpec {
    SweepSpec {
        measures: measures.to_vec(),
        engine,
        fixed: fixed.to_vec(),
        axes: axes.iter().map(|a| axis(a)).collect(),
        out: None,
        format: OutputFormat::Csv,
        jobs,
    }
}

/// Indices of strict interior local minima.
pub fn local_minima(v: &[f64]) -> Vec<usize> {
    (1..v.len().saturating_sub(1))
        .filter(|&i| v[i] < v[i - 1] && v[i] < v[i + 1])
        .collect()
}
