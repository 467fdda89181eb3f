use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("unsupported dimension {dim} (expected {expected})")]
    Dimension { dim: usize, expected: &'static str },

    #[error("tensor product of dimension {dim} exceeds the supported maximum of 4")]
    DimensionOverflow { dim: usize },

    #[error("matrix is not Hermitian: ||A - A^H||_F = {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("spectral function is not finite at eigenvalue {eigenvalue}")]
    NonFiniteSpectralValue { eigenvalue: f64 },

    #[error("not a density matrix: {what} (measured {residual:e})")]
    InvalidState { what: &'static str, residual: f64 },

    #[error("probability {value} outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    #[error("parameter {name} = {value} violates bound {bound}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        bound: &'static str,
    },

    #[error("overflow evaluating {what} at J={j}, Jz={jz}, B={b}, T={t}")]
    Overflow {
        what: &'static str,
        j: f64,
        jz: f64,
        b: f64,
        t: f64,
    },

    #[error("internal consistency check failed: {what} (residual {residual:e})")]
    Inconsistent { what: &'static str, residual: f64 },
}
