//! Quantum Fisher information of a state for a unitary phase generated by
//! an observable `O`:
//!
//! ```text
//! F(ρ, O) = 2 Σ_{m,n} (p_m - p_n)^2 / (p_m + p_n) |⟨m|O|n⟩|^2
//! ```
//!
//! For the XXZ Gibbs state the generator is the collective spin component
//! `(X⊗I + I⊗X)/2`, evaluated on the state with non-negative coherence `|v|`.
//! That choice gives 4 on the Bell state, 2 on `|00⟩` and a value that is
//! even in `J`. The published closed form `m/n` is kept as
//! [`qfi_closed`]; it matches this definition at `B = 0`, `J >= 0` only (see
//! [`calibrate_observable`]).

use alloc::vec::Vec;

use crate::linalg::{check_density, kron, ComplexMatrix};
use crate::math::{exp, ln, log_sum_exp};
use crate::model::{GibbsState, SpinParams, XStateElements};
use crate::steering::PauliAxis;
use crate::{Error, Result};

/// Eigenvalue pairs with `p_m + p_n` at or below this are skipped.
pub const PAIR_SKIP: f64 = 1e-12;

/// A calibration candidate is accepted when its worst relative deviation
/// from the closed form stays below this.
pub const CALIBRATION_THRESHOLD: f64 = 1e-6;

/// Collective spin component `(σ⊗I + I⊗σ)/2` along one axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Observable {
    axis: PauliAxis,
    matrix: ComplexMatrix,
}

impl Observable {
    pub fn axis(&self) -> PauliAxis {
        self.axis
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

pub fn collective_observable(axis: PauliAxis) -> Observable {
    Observable {
        axis,
        matrix: collective_sum(axis).scale(0.5),
    }
}

fn collective_sum(axis: PauliAxis) -> ComplexMatrix {
    let i2 = ComplexMatrix::identity(2);
    let s = axis.matrix();
    kron(&s, &i2).expect("2x2") + kron(&i2, &s).expect("2x2")
}

/// Fisher information of `rho` for the phase generated by `generator`,
/// from the eigendecomposition of `rho`.
pub fn qfi_spectral(rho: &ComplexMatrix, generator: &ComplexMatrix) -> Result<f64> {
    let eig = check_density(rho)?;
    generator.ensure_finite()?;
    let v = eig.vectors();
    let o = v.adjoint() * *generator * *v;
    let p = eig.values();
    let mut total = 0.0;
    for m in 0..p.len() {
        for n in 0..p.len() {
            let sum = p[m] + p[n];
            if m == n || sum <= PAIR_SKIP {
                continue;
            }
            let diff = p[m] - p[n];
            total += diff * diff / sum * o[(m, n)].norm_sqr();
        }
    }
    Ok(2.0 * total)
}

/// Canonical Fisher information of a Gibbs state: the X-collective
/// generator on the `|v|` gauge of the state.
pub fn qfi_gibbs(g: &GibbsState) -> Result<f64> {
    qfi_spectral(
        &g.rho_nonnegative_coherence(),
        collective_observable(PauliAxis::X).matrix(),
    )
}

/// Closed form of [`qfi_gibbs`] read off the X-state entries.
///
/// The eigenvectors are `|00⟩`, `|11⟩` and `(|01⟩ ± |10⟩)/√2` with weights
/// `a`, `d`, `b ± |v|`; the collective X generator only couples `|00⟩` and
/// `|11⟩` to the symmetric triplet, each with matrix element `1/√2`.
pub fn qfi_xstate(e: &XStateElements) -> f64 {
    let triplet = e.b + e.v.abs();
    let term = |p: f64| {
        let sum = p + triplet;
        if sum <= PAIR_SKIP {
            0.0
        } else {
            (p - triplet) * (p - triplet) / sum
        }
    };
    2.0 * (term(e.a) + term(e.d))
}

/// The published closed form `QFI = m/n`, assembled term by term with all
/// exponentials shifted by the largest exponent.
pub fn qfi_closed(p: &SpinParams) -> Result<f64> {
    let t = p.t();
    let jz = p.jz() / t;
    let b = p.b() / t;
    // sinh(|J|/T) + cosh(J/T) = exp(|J|/T)
    let s = p.j().abs() / t;
    let j = p.j() / t;

    let m_terms = [
        (1.0, 2.0 * jz + s - b),
        (-4.0, 2.0 * jz + s + b),
        (1.0, 2.0 * jz + s + 3.0 * b),
        (-1.0, jz + 2.0 * b + 2.0 * s),
        (-1.0, jz + 2.0 * s),
        (2.0, 2.0 * b + 3.0 * s),
        (1.0, 3.0 * jz + 2.0 * b),
        (1.0, 3.0 * jz),
    ];
    let shift = m_terms
        .iter()
        .map(|&(_, x)| x)
        .fold(f64::NEG_INFINITY, f64::max);
    let m_shifted: f64 = m_terms.iter().map(|&(c, x)| c * exp(x - shift)).sum();

    let log_n = ln(0.5)
        + log_sum_exp(&[jz + b, jz - b, j, -j])
        + log_sum_exp(&[s, b + jz])
        + log_sum_exp(&[b + s, jz]);

    if m_shifted == 0.0 {
        return Ok(0.0);
    }
    let value = m_shifted * exp(shift - log_n);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow {
            what: "closed-form QFI",
            j: p.j(),
            jz: p.jz(),
            b: p.b(),
            t: p.t(),
        })
    }
}

/// Generator tried when matching [`qfi_closed`] against [`qfi_spectral`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CalibrationCandidate {
    pub axis: PauliAxis,
    /// `(σ⊗I + I⊗σ)/2` when set, `σ⊗I + I⊗σ` otherwise.
    pub halved: bool,
}

impl CalibrationCandidate {
    pub const ALL: [CalibrationCandidate; 6] = [
        CalibrationCandidate {
            axis: PauliAxis::X,
            halved: true,
        },
        CalibrationCandidate {
            axis: PauliAxis::Y,
            halved: true,
        },
        CalibrationCandidate {
            axis: PauliAxis::Z,
            halved: true,
        },
        CalibrationCandidate {
            axis: PauliAxis::X,
            halved: false,
        },
        CalibrationCandidate {
            axis: PauliAxis::Y,
            halved: false,
        },
        CalibrationCandidate {
            axis: PauliAxis::Z,
            halved: false,
        },
    ];

    pub fn generator(&self) -> ComplexMatrix {
        let g = collective_sum(self.axis);
        if self.halved {
            g.scale(0.5)
        } else {
            g
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CandidateScore {
    pub candidate: CalibrationCandidate,
    /// `max |closed - spectral| / max(|closed|, |spectral|)` over the draws.
    pub max_relative_deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub scores: Vec<CandidateScore>,
    /// Index into `scores` of the smallest worst-case deviation; ties go to
    /// the earlier candidate.
    pub best: usize,
}

impl Calibration {
    pub fn best_score(&self) -> &CandidateScore {
        &self.scores[self.best]
    }

    pub fn accepted(&self) -> bool {
        self.best_score().max_relative_deviation < CALIBRATION_THRESHOLD
    }
}

fn relative_deviation(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

/// Scores each [`CalibrationCandidate`] by comparing [`qfi_closed`] with
/// [`qfi_spectral`] on the `|v|` gauge of the spectral Gibbs state.
pub fn calibrate_observable(draws: &[SpinParams]) -> Result<Calibration> {
    let mut scores: Vec<CandidateScore> = CalibrationCandidate::ALL
        .iter()
        .map(|&candidate| CandidateScore {
            candidate,
            max_relative_deviation: 0.0,
        })
        .collect();
    for p in draws {
        let closed = qfi_closed(p)?;
        let rho = crate::model::gibbs_spectral(p)?.rho_nonnegative_coherence();
        for score in scores.iter_mut() {
            let spectral = qfi_spectral(&rho, &score.candidate.generator())?;
            let dev = relative_deviation(closed, spectral);
            score.max_relative_deviation = score.max_relative_deviation.max(dev);
        }
    }
    let mut best = 0;
    for (i, s) in scores.iter().enumerate() {
        if s.max_relative_deviation < scores[best].max_relative_deviation {
            best = i;
        }
    }
    Ok(Calibration { scores, best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;
    use crate::model::{gibbs_closed, gibbs_spectral};
    use crate::steering::bell_psi_plus;

    fn params(j: f64, jz: f64, b: f64, t: f64) -> SpinParams {
        SpinParams::new(j, jz, b, t).unwrap()
    }

    #[test]
    fn collective_observables() {
        let z = collective_observable(PauliAxis::Z);
        assert_eq!(
            *z.matrix(),
            ComplexMatrix::diag_real(&[1.0, 0.0, 0.0, -1.0])
        );
        let x = collective_observable(PauliAxis::X);
        let expected = ComplexMatrix::from_real([
            [0.0, 0.5, 0.5, 0.0],
            [0.5, 0.0, 0.0, 0.5],
            [0.5, 0.0, 0.0, 0.5],
            [0.0, 0.5, 0.5, 0.0],
        ]);
        assert_eq!(*x.matrix(), expected);
        for axis in PauliAxis::ALL {
            let o = collective_observable(axis);
            assert_eq!(o.axis(), axis);
            assert!(o.matrix().hermitian_residual() == 0.0);
            let e = eig_hermitian(o.matrix()).unwrap();
            for (got, want) in e.values().iter().zip([-1.0, 0.0, 0.0, 1.0]) {
                assert!((got - want).abs() < 1e-12, "{axis:?}: {:?}", e.values());
            }
        }
    }

    #[test]
    fn spectral_anchor_values() {
        let x = collective_observable(PauliAxis::X);
        let mixed = ComplexMatrix::identity(4).scale(0.25);
        for axis in PauliAxis::ALL {
            assert_eq!(
                qfi_spectral(&mixed, collective_observable(axis).matrix()).unwrap(),
                0.0
            );
        }
        assert!((qfi_spectral(&bell_psi_plus(), x.matrix()).unwrap() - 4.0).abs() < 1e-12);
        let up = ComplexMatrix::diag_real(&[1.0, 0.0, 0.0, 0.0]);
        assert!((qfi_spectral(&up, x.matrix()).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_rejects_invalid_state() {
        let x = collective_observable(PauliAxis::X);
        assert!(qfi_spectral(&ComplexMatrix::identity(4), x.matrix()).is_err());
    }

    #[test]
    fn closed_form_anchor_values() {
        assert_eq!(qfi_closed(&params(0.0, 0.0, 0.0, 1.0)).unwrap(), 0.0);
        assert!((qfi_closed(&params(10.0, 2.0, 0.0, 0.01)).unwrap() - 4.0).abs() < 1e-3);
        assert!((qfi_closed(&params(1.0, 0.0, 20.0, 0.1)).unwrap() - 2.0).abs() < 1e-3);
    }

    #[test]
    fn closed_form_matches_definition_at_zero_field() {
        let x = collective_observable(PauliAxis::X);
        for &(j, jz, t) in &[
            (1.0, 1.0, 1.0),
            (2.5, -0.7, 0.4),
            (0.3, 3.0, 2.0),
            (0.0, 1.0, 1.0),
        ] {
            let p = params(j, jz, 0.0, t);
            let spectral = qfi_spectral(gibbs_spectral(&p).unwrap().rho(), x.matrix()).unwrap();
            assert!((qfi_closed(&p).unwrap() - spectral).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_departs_from_definition_in_a_field() {
        // J = 1, Jz = 0, B = 1, T = 1: the printed m/n gives ~1.913, the
        // definition ~0.580.
        let p = params(1.0, 0.0, 1.0, 1.0);
        let closed = qfi_closed(&p).unwrap();
        let canonical = qfi_gibbs(&gibbs_spectral(&p).unwrap()).unwrap();
        assert!((closed - 1.913_074_702_131_586_6).abs() < 1e-12);
        assert!((canonical - 0.580_026).abs() < 1e-6);
    }

    #[test]
    fn xstate_fast_path_matches_spectral() {
        for &(j, jz, b, t) in &[
            (1.0, 1.0, 1.0, 1.0),
            (-3.0, 0.5, 2.0, 0.7),
            (10.0, 2.0, 0.0, 0.01),
            (1.0, 0.0, 20.0, 0.1),
            (0.0, 0.0, 0.0, 1.0),
        ] {
            let p = params(j, jz, b, t);
            let spectral = qfi_gibbs(&gibbs_spectral(&p).unwrap()).unwrap();
            let fast = qfi_xstate(&gibbs_closed(&p).unwrap().elements());
            assert!(
                (spectral - fast).abs() < 1e-10,
                "{p:?}: {spectral} vs {fast}"
            );
        }
    }

    #[test]
    fn canonical_qfi_is_even_in_j() {
        let a = qfi_gibbs(&gibbs_spectral(&params(10.0, 2.0, 0.0, 0.01)).unwrap()).unwrap();
        let b = qfi_gibbs(&gibbs_spectral(&params(-10.0, 2.0, 0.0, 0.01)).unwrap()).unwrap();
        assert!((a - 4.0).abs() < 1e-9 && (b - 4.0).abs() < 1e-9);
        // the raw signed state has the singlet as ground state for J < 0
        let raw = gibbs_spectral(&params(-10.0, 2.0, 0.0, 0.01)).unwrap();
        let x = collective_observable(PauliAxis::X);
        assert!(qfi_spectral(raw.rho(), x.matrix()).unwrap() < 1e-9);
    }

    #[test]
    fn relative_deviation_handles_zero() {
        assert_eq!(relative_deviation(0.0, 0.0), 0.0);
        assert_eq!(relative_deviation(1.0, 0.0), 1.0);
        assert_eq!(relative_deviation(-1.0, 1.0), 2.0);
    }
}
