//! Two-qubit XXZ Hamiltonian and its thermal state.
//!
//! ```text
//! H = -1/2 [J (XX + YY) + Jz ZZ] - 1/2 B (Z⊗I + I⊗Z)
//! ```
//!
//! The Gibbs state `exp(-H/T)/Z` is built two ways: from the closed-form
//! X-state entries and from a spectral matrix exponential of `H`. Both
//! subtract the largest Boltzmann exponent before exponentiating, so the
//! partition function is carried as `ln Z`.

use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

use crate::linalg::{eig_hermitian, kron, sigma_x, sigma_y, sigma_z, ComplexMatrix};
use crate::math::{exp, ln, log_sum_exp};
use crate::{Error, Result};

/// Lowest admitted temperature.
pub const T_MIN: f64 = 1e-3;

/// Largest admitted `|J|`, `|Jz|`, `|B|`.
pub const COUPLING_MAX: f64 = 1e3;

/// Tolerance on every [`GibbsState`] invariant.
pub const STATE_TOL: f64 = 1e-12;

/// One of the four model controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    J,
    Jz,
    B,
    T,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::J, Param::Jz, Param::B, Param::T];

    pub fn name(self) -> &'static str {
        match self {
            Param::J => "J",
            Param::Jz => "Jz",
            Param::B => "B",
            Param::T => "T",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownParam;

impl fmt::Display for UnknownParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of J, Jz, B, T")
    }
}

impl FromStr for Param {
    type Err = UnknownParam;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownParam> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or(UnknownParam)
    }
}

/// Validated model parameters `(J, Jz, B, T)` in energy units with
/// `k_B = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinParams {
    j: f64,
    jz: f64,
    b: f64,
    t: f64,
}

impl SpinParams {
    pub fn new(j: f64, jz: f64, b: f64, t: f64) -> Result<Self> {
        check_coupling("J", j, "|J| <= 1000")?;
        check_coupling("Jz", jz, "|Jz| <= 1000")?;
        check_coupling("B", b, "|B| <= 1000")?;
        if !(t.is_finite() && t >= T_MIN) {
            return Err(Error::ParamOutOfRange {
                name: "T",
                value: t,
                bound: "finite T >= 0.001",
            });
        }
        Ok(Self { j, jz, b, t })
    }

    pub fn j(&self) -> f64 {
        self.j
    }

    pub fn jz(&self) -> f64 {
        self.jz
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn get(&self, param: Param) -> f64 {
        match param {
            Param::J => self.j,
            Param::Jz => self.jz,
            Param::B => self.b,
            Param::T => self.t,
        }
    }

    /// Copy with one parameter replaced, revalidated.
    pub fn with(&self, param: Param, value: f64) -> Result<Self> {
        let mut v = [self.j, self.jz, self.b, self.t];
        v[param as usize] = value;
        Self::new(v[0], v[1], v[2], v[3])
    }

    fn overflow(&self, what: &'static str) -> Error {
        Error::Overflow {
            what,
            j: self.j,
            jz: self.jz,
            b: self.b,
            t: self.t,
        }
    }

    /// Boltzmann exponents `-E/T` of the levels `|00⟩`, `|11⟩`, `|ψ+⟩`,
    /// `|ψ-⟩` with `ψ± = (|01⟩ ± |10⟩)/√2`.
    fn boltzmann_exponents(&self) -> [f64; 4] {
        let (j, jz, b, t) = (self.j, self.jz, self.b, self.t);
        [
            (jz / 2.0 + b) / t,
            (jz / 2.0 - b) / t,
            (j - jz / 2.0) / t,
            (-j - jz / 2.0) / t,
        ]
    }
}

fn check_coupling(name: &'static str, value: f64, bound: &'static str) -> Result<()> {
    if value.is_finite() && value.abs() <= COUPLING_MAX {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange { name, value, bound })
    }
}

/// The four independent entries of a two-qubit X state with real
/// coherences:
///
/// ```text
/// | a 0 0 0 |
/// | 0 b v 0 |
/// | 0 v b 0 |
/// | 0 0 0 d |
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateElements {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub v: f64,
}

impl XStateElements {
    pub fn new(a: f64, b: f64, d: f64, v: f64) -> Self {
        Self { a, b, d, v }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let Self { a, b, d, v } = *self;
        ComplexMatrix::from_real([
            [a, 0.0, 0.0, 0.0],
            [0.0, b, v, 0.0],
            [0.0, v, b, 0.0],
            [0.0, 0.0, 0.0, d],
        ])
    }

    /// `sqrt((a - d)^2 + 4 v^2)`, the Bloch-vector length of Bob's
    /// conditional states under Alice's X measurement.
    pub fn coherence_radius(&self) -> f64 {
        libm::hypot(self.a - self.d, 2.0 * self.v)
    }
}

/// Thermal state of the XXZ pair. Immutable; every constructor checks the
/// X-state structure, positivity, unit trace and U(1) symmetry to
/// [`STATE_TOL`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GibbsState {
    params: SpinParams,
    rho: ComplexMatrix,
    log_z: f64,
    elements: XStateElements,
}

impl GibbsState {
    pub fn params(&self) -> &SpinParams {
        &self.params
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn elements(&self) -> XStateElements {
        self.elements
    }

    /// `ln Z`; always finite.
    pub fn log_z(&self) -> f64 {
        self.log_z
    }

    /// `Z`, which overflows to `+inf` at very low temperature.
    pub fn z(&self) -> f64 {
        exp(self.log_z)
    }

    /// The state with `v` replaced by `|v|`, i.e. conjugated by `Z⊗I` when
    /// `J < 0`. This is the matrix with `sinh(|J|/T)` coherences.
    pub fn rho_nonnegative_coherence(&self) -> ComplexMatrix {
        if self.elements.v < 0.0 {
            self.rho.conjugate_by(&z_on_a())
        } else {
            self.rho
        }
    }

    fn checked(
        params: SpinParams,
        rho: ComplexMatrix,
        log_z: f64,
        e: XStateElements,
    ) -> Result<Self> {
        let fail = |what, residual| Err(Error::Inconsistent { what, residual });

        if !rho.is_finite() || !log_z.is_finite() {
            return fail("non-finite Gibbs state", f64::NAN);
        }
        let herm = rho.hermitian_residual();
        if herm > STATE_TOL {
            return fail("rho not Hermitian", herm);
        }
        let tr = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
        if tr > STATE_TOL {
            return fail("trace of rho differs from 1", tr);
        }
        let norm = (e.a + 2.0 * e.b + e.d - 1.0).abs();
        if norm > STATE_TOL {
            return fail("a + 2b + d differs from 1", norm);
        }
        let x = rho.max_abs_diff(&e.to_matrix());
        if x > STATE_TOL {
            return fail("rho is not an X state", x);
        }
        let psd = [e.a, e.d, e.b - e.v.abs()]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if psd < -STATE_TOL {
            return fail("rho not positive semidefinite", psd);
        }
        let total_z = kron(&sigma_z(), &ComplexMatrix::identity(2))?
            + kron(&ComplexMatrix::identity(2), &sigma_z())?;
        let comm = rho.commutator(&total_z).frobenius_norm();
        if comm > STATE_TOL {
            return fail("rho does not commute with total Z", comm);
        }
        Ok(Self {
            params,
            rho,
            log_z,
            elements: e,
        })
    }
}

fn z_on_a() -> ComplexMatrix {
    ComplexMatrix::diag_real(&[1.0, 1.0, -1.0, -1.0])
}

/// `H` assembled from Pauli tensor products.
pub fn hamiltonian(p: &SpinParams) -> ComplexMatrix {
    let i2 = ComplexMatrix::identity(2);
    let k = |a: &ComplexMatrix, b: &ComplexMatrix| kron(a, b).expect("2x2 factors");
    let (x, y, z) = (sigma_x(), sigma_y(), sigma_z());
    let exchange = (k(&x, &x) + k(&y, &y)).scale(p.j) + k(&z, &z).scale(p.jz);
    let zeeman = (k(&z, &i2) + k(&i2, &z)).scale(p.b);
    (exchange + zeeman).scale(-0.5)
}

/// `ln Z` from the closed-form level sum, evaluated in shifted form.
pub fn log_partition_function(p: &SpinParams) -> f64 {
    log_sum_exp(&p.boltzmann_exponents())
}

/// `Z = 2 (e^{Jz/2T} cosh(B/T) + e^{-Jz/2T} cosh(J/T))`.
///
/// Fails with [`Error::Overflow`] when `Z` itself is not representable; use
/// [`log_partition_function`] in that regime.
pub fn partition_function(p: &SpinParams) -> Result<f64> {
    let z = exp(log_partition_function(p));
    if z.is_finite() {
        Ok(z)
    } else {
        Err(p.overflow("partition function"))
    }
}

/// Gibbs state from the closed-form X-state entries.
pub fn gibbs_closed(p: &SpinParams) -> Result<GibbsState> {
    let w = p.boltzmann_exponents();
    let shift = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let [ea, ed, eplus, eminus] = w.map(|x| exp(x - shift));
    let zs = ea + ed + eplus + eminus;
    let e = XStateElements {
        a: ea / zs,
        b: 0.5 * (eplus + eminus) / zs,
        d: ed / zs,
        v: 0.5 * (eplus - eminus) / zs,
    };
    let log_z = shift + ln(zs);
    if !log_z.is_finite() {
        return Err(p.overflow("closed-form Gibbs state"));
    }
    GibbsState::checked(*p, e.to_matrix(), log_z, e)
}

/// Gibbs state from the spectral exponential of `-H/T`.
pub fn gibbs_spectral(p: &SpinParams) -> Result<GibbsState> {
    let h = hamiltonian(p);
    let eig = eig_hermitian(&h)?;
    let t = p.t;
    let shift = -eig.values()[0] / t;
    let weights = eig.map(|lambda| exp(-lambda / t - shift))?;
    let trace = weights.trace().re;
    let log_z = shift + ln(trace);
    if !log_z.is_finite() {
        return Err(p.overflow("spectral Gibbs state"));
    }
    let rho = weights.scale(1.0 / trace);
    let e = XStateElements {
        a: rho[(0, 0)].re,
        b: 0.5 * (rho[(1, 1)].re + rho[(2, 2)].re),
        d: rho[(3, 3)].re,
        v: rho[(1, 2)].re,
    };
    GibbsState::checked(*p, rho, log_z, e)
}
