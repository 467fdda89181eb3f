mod common;

use common::*;
use proptest::prelude::*;
use xxz_core::linalg::{eig_hermitian, partial_trace_a, spectral_fn, vn_entropy};
use xxz_core::{Complex64, ComplexMatrix};

#[test]
fn eigendecomposition_residuals_on_random_hermitian() {
    let mut rng = rng(11);
    for dim in [2, 4] {
        for _ in 0..1000 {
            let a = random_hermitian(&mut rng, dim, 5.0);
            let e = eig_hermitian(&a).unwrap();
            let scale = a.frobenius_norm().max(1.0);
            let rebuilt = e.reconstruct();
            assert!((rebuilt - a).frobenius_norm() <= 1e-12 * scale);
            let v = e.vectors();
            let gram = v.adjoint() * *v;
            assert!((gram - ComplexMatrix::identity(dim)).frobenius_norm() <= 1e-12);
            assert!(e.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn eigendecomposition_is_deterministic() {
    let mut rng = rng(12);
    let a = random_hermitian(&mut rng, 4, 1.0);
    assert_eq!(eig_hermitian(&a).unwrap(), eig_hermitian(&a).unwrap());
}

#[test]
fn exp_times_exp_of_negative_is_identity() {
    let mut rng = rng(13);
    for dim in [2, 4] {
        for _ in 0..200 {
            let a = random_hermitian(&mut rng, dim, 3.0);
            let forward = spectral_fn(&a, f64::exp).unwrap();
            let backward = spectral_fn(&a, |x| (-x).exp()).unwrap();
            let product = forward * backward;
            assert!(product.max_abs_diff(&ComplexMatrix::identity(dim)) <= 1e-10);
            assert!(forward.hermitian_residual() <= 1e-12 * forward.frobenius_norm().max(1.0));
        }
    }
}

/// Truncated Taylor series, independent of the eigensolver.
fn taylor_exp(a: &ComplexMatrix, terms: usize) -> ComplexMatrix {
    let dim = a.dim();
    let mut term = ComplexMatrix::identity(dim);
    let mut sum = term;
    for k in 1..terms {
        term = (term * *a).scale(1.0 / k as f64);
        sum = sum + term;
    }
    sum
}

#[test]
fn spectral_exp_matches_taylor_series() {
    let mut rng = rng(14);
    for dim in [2, 4] {
        for _ in 0..200 {
            let a = random_hermitian(&mut rng, dim, 0.5);
            let spectral = spectral_fn(&a, f64::exp).unwrap();
            assert!(spectral.max_abs_diff(&taylor_exp(&a, 30)) <= 1e-10);
        }
    }
}

#[test]
fn partial_trace_is_linear_and_trace_preserving() {
    let mut rng = rng(15);
    for _ in 0..500 {
        let rho = random_density(&mut rng, 4);
        let reduced = partial_trace_a(&rho).unwrap();
        assert!((reduced.trace() - Complex64::new(1.0, 0.0)).norm() <= 1e-14);

        let x = random_matrix(&mut rng, 4);
        let y = random_matrix(&mut rng, 4);
        let alpha = random_complex(&mut rng);
        let lhs = partial_trace_a(&(x.scale_complex(alpha) + y)).unwrap();
        let rhs = partial_trace_a(&x).unwrap().scale_complex(alpha) + partial_trace_a(&y).unwrap();
        assert!(lhs.max_abs_diff(&rhs) <= 1e-14);
    }
}

#[test]
fn entropy_is_unitarily_invariant() {
    let mut rng = rng(16);
    for dim in [2, 4] {
        for _ in 0..300 {
            let rho = random_density(&mut rng, dim);
            let u = random_unitary(&mut rng, dim);
            let s0 = vn_entropy(&rho).unwrap();
            let s1 = vn_entropy(&rho.conjugate_by(&u).hermitian_part()).unwrap();
            assert!((s0 - s1).abs() <= 1e-10);
            assert!(s0 >= 0.0 && s0 <= (dim as f64).log2() + 1e-12);
        }
    }
}

#[test]
fn pure_states_have_zero_entropy() {
    let mut rng = rng(17);
    for _ in 0..100 {
        let rho = ComplexMatrix::projector(&random_ket(&mut rng, 4));
        assert!(vn_entropy(&rho).unwrap().abs() < 1e-10);
    }
}

proptest! {
    #[test]
    fn eig_handles_arbitrary_real_symmetric(entries in proptest::array::uniform10(-100.0f64..100.0)) {
        let [a, b, c, d, e, f, g, h, i, j] = entries;
        let m = ComplexMatrix::from_real([
            [a, b, c, d],
            [b, e, f, g],
            [c, f, h, i],
            [d, g, i, j],
        ]);
        let eig = eig_hermitian(&m).unwrap();
        let scale = m.frobenius_norm().max(1.0);
        prop_assert!((eig.reconstruct() - m).frobenius_norm() <= 1e-12 * scale);
        let trace: f64 = eig.values().iter().sum();
        prop_assert!((trace - (a + e + h + j)).abs() <= 1e-12 * scale);
    }

    #[test]
    fn eig_of_diagonal_matrix_sorts_values(values in proptest::array::uniform4(-10.0f64..10.0)) {
        let eig = eig_hermitian(&ComplexMatrix::diag_real(&values)).unwrap();
        let mut sorted = values;
        sorted.sort_by(f64::total_cmp);
        prop_assert_eq!(eig.values(), &sorted[..]);
    }
}
