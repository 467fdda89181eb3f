//! Dense complex linear algebra for dimensions up to 4.
//!
//! Qubit index convention: in a two-qubit basis state `|A B⟩` the qubit `A`
//! is the most significant bit, so the basis order is `|00⟩, |01⟩, |10⟩,
//! |11⟩` and `kron(X, Y)` places `X` on qubit `A`.

use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::math::{sqrt, xlog2x};
use crate::{Error, Result};

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 4;

/// Relative Hermiticity tolerance accepted by [`eig_hermitian`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// fraction of `||A||_F`.
pub const JACOBI_TOL: f64 = 1e-13;

/// Hard cap on cyclic Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 60;

/// Tolerance for trace, positivity and Hermiticity of density matrices.
pub const DENSITY_TOL: f64 = 1e-10;

/// Range slack accepted by [`binary_entropy`].
pub const PROBABILITY_SLACK: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix of dimension 1 to 4 stored inline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [[Complex64; MAX_DIM]; MAX_DIM],
}

impl ComplexMatrix {
    /// # Panics
    ///
    /// If `dim` is zero or larger than [`MAX_DIM`].
    pub fn zeros(dim: usize) -> Self {
        assert!(
            (1..=MAX_DIM).contains(&dim),
            "matrix dimension {dim} not in 1..=4"
        );
        Self {
            dim,
            data: [[ZERO; MAX_DIM]; MAX_DIM],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.data[r][c] = f(r, c);
            }
        }
        m
    }

    pub fn from_rows<const N: usize>(rows: [[Complex64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| rows[r][c])
    }

    pub fn from_real<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| Complex64::new(rows[r][c], 0.0))
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &x) in values.iter().enumerate() {
            m.data[i][i] = Complex64::new(x, 0.0);
        }
        m
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalised) ket.
    pub fn projector(ket: &[Complex64]) -> Self {
        Self::from_fn(ket.len(), |r, c| ket[r] * ket[c].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.data[c][r].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        sqrt(self.entries().map(|z| z.norm_sqr()).sum())
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c {
                    acc += self.data[r][c].norm_sqr();
                }
            }
        }
        sqrt(acc)
    }

    /// `||A - A^H||_F`.
    pub fn hermitian_residual(&self) -> f64 {
        (*self - self.adjoint()).frobenius_norm()
    }

    /// `(A + A^H) / 2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::from_fn(self.dim, |r, c| self.data[r][c] * k)
    }

    pub fn scale_complex(&self, k: Complex64) -> Self {
        Self::from_fn(self.dim, |r, c| self.data[r][c] * k)
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `U A U^H`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.dim).flat_map(move |r| (0..self.dim).map(move |c| self.data[r][c]))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        (*self - *other)
            .entries()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    fn ensure_dim(&self, dim: usize, expected: &'static str) -> Result<()> {
        if self.dim == dim {
            Ok(())
        } else {
            Err(Error::Dimension {
                dim: self.dim,
                expected,
            })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(
            r < self.dim && c < self.dim,
            "index ({r}, {c}) out of range"
        );
        &self.data[r][c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(
            r < self.dim && c < self.dim,
            "index ({r}, {c}) out of range"
        );
        &mut self.data[r][c]
    }
}

impl Add for ComplexMatrix {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_fn(self.dim, |r, c| self.data[r][c] + rhs.data[r][c])
    }
}

impl Sub for ComplexMatrix {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_fn(self.dim, |r, c| self.data[r][c] - rhs.data[r][c])
    }
}

impl Mul for ComplexMatrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |r, c| {
            (0..n).map(|k| self.data[r][k] * rhs.data[k][c]).sum()
        })
    }
}

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_real([[0.0, 1.0], [1.0, 0.0]])
}

pub fn sigma_y() -> ComplexMatrix {
    let i = Complex64::i();
    ComplexMatrix::from_rows([[ZERO, -i], [i, ZERO]])
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real([[1.0, 0.0], [0.0, -1.0]])
}

/// Tensor product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.ensure_finite()?;
    b.ensure_finite()?;
    let dim = a.dim * b.dim;
    if dim > MAX_DIM {
        return Err(Error::DimensionOverflow { dim });
    }
    Ok(ComplexMatrix::from_fn(dim, |r, c| {
        a.data[r / b.dim][c / b.dim] * b.data[r % b.dim][c % b.dim]
    }))
}

/// Partial trace over the leading qubit `A` of a two-qubit operator.
pub fn partial_trace_a(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    m.ensure_dim(4, "4")?;
    Ok(ComplexMatrix::from_fn(2, |j, k| {
        m.data[j][k] + m.data[2 + j][2 + k]
    }))
}

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenDecomposition {
    values: [f64; MAX_DIM],
    vectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.vectors.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values[..self.dim()]
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> [Complex64; MAX_DIM] {
        let mut out = [ZERO; MAX_DIM];
        for (r, slot) in out.iter_mut().enumerate().take(self.dim()) {
            *slot = self.vectors.data[r][k];
        }
        out
    }

    /// `V diag(f(λ)) V^H`.
    pub fn map(&self, mut f: impl FnMut(f64) -> f64) -> Result<ComplexMatrix> {
        let n = self.dim();
        let mut fv = [0.0; MAX_DIM];
        for (slot, &lambda) in fv.iter_mut().zip(&self.values[..n]) {
            *slot = f(lambda);
            if !slot.is_finite() {
                return Err(Error::NonFiniteSpectralValue { eigenvalue: lambda });
            }
        }
        let v = &self.vectors;
        let m = ComplexMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|k| v.data[r][k] * v.data[c][k].conj() * fv[k])
                .sum()
        });
        Ok(m.hermitian_part())
    }

    /// `V diag(λ) V^H`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|x| x).expect("eigenvalues are finite")
    }
}

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation first removes the phase of `A[p][q]` with a diagonal
/// unitary, then applies the real symmetric Jacobi rotation that annihilates
/// the now-real off-diagonal pair.
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    a.ensure_finite()?;
    let n = a.dim;
    let norm = a.frobenius_norm();
    let residual = a.hermitian_residual();
    if residual > HERMITIAN_TOL * norm.max(1.0) {
        return Err(Error::NotHermitian { residual });
    }

    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let target = JACOBI_TOL * norm;
    let mut sweeps = 0;
    loop {
        let off = m.off_diagonal_norm();
        if off <= target {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.data[p][q];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = (apq / mag).conj();
                let tau = (m.data[q][q].re - m.data[p][p].re) / (2.0 * mag);
                let t = if tau.abs() > 1e150 {
                    0.5 / tau
                } else {
                    tau.signum() / (tau.abs() + sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = t * c;

                let mut g = ComplexMatrix::identity(n);
                g.data[p][p] = Complex64::new(c, 0.0);
                g.data[p][q] = Complex64::new(s, 0.0);
                g.data[q][p] = phase * -s;
                g.data[q][q] = phase * c;

                m = g.adjoint() * m * g;
                m.data[p][q] = ZERO;
                m.data[q][p] = ZERO;
                for k in 0..n {
                    m.data[k][k].im = 0.0;
                }
                v = v * g;
            }
        }
        sweeps += 1;
    }

    let mut order = [0usize, 1, 2, 3];
    let order = &mut order[..n];
    order.sort_unstable_by(|&i, &j| m.data[i][i].re.total_cmp(&m.data[j][j].re).then(i.cmp(&j)));
    let mut values = [0.0; MAX_DIM];
    let mut vectors = ComplexMatrix::zeros(n);
    for (k, &src) in order.iter().enumerate() {
        values[k] = m.data[src][src].re;
        for r in 0..n {
            vectors.data[r][k] = v.data[r][src];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// `f(A)` for Hermitian `A`.
pub fn spectral_fn(a: &ComplexMatrix, f: impl FnMut(f64) -> f64) -> Result<ComplexMatrix> {
    eig_hermitian(a)?.map(f)
}

/// Checks Hermiticity, unit trace and positivity; returns the spectrum.
pub fn check_density(rho: &ComplexMatrix) -> Result<EigenDecomposition> {
    rho.ensure_finite()?;
    let residual = rho.hermitian_residual();
    if residual > DENSITY_TOL * rho.frobenius_norm().max(1.0) {
        return Err(Error::InvalidState {
            what: "not Hermitian",
            residual,
        });
    }
    let tr = rho.trace();
    let trace_err = (tr - ONE).norm();
    if trace_err > DENSITY_TOL {
        return Err(Error::InvalidState {
            what: "trace differs from 1",
            residual: trace_err,
        });
    }
    let eig = eig_hermitian(rho)?;
    let min = eig.values()[0];
    if min < -DENSITY_TOL {
        return Err(Error::InvalidState {
            what: "negative eigenvalue",
            residual: min,
        });
    }
    Ok(eig)
}

/// Shannon entropy in bits; non-positive entries contribute nothing.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    -probabilities.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// Von Neumann entropy in bits, eigenvalues clamped to `[0, 1]`.
pub fn vn_entropy(rho: &ComplexMatrix) -> Result<f64> {
    let eig = check_density(rho)?;
    Ok(-eig
        .values()
        .iter()
        .map(|&x| xlog2x(x.clamp(0.0, 1.0)))
        .sum::<f64>())
}

/// `-q log2 q - (1-q) log2 (1-q)`.
pub fn binary_entropy(q: f64) -> Result<f64> {
    if !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&q) {
        return Err(Error::ProbabilityOutOfRange { value: q });
    }
    let q = q.clamp(0.0, 1.0);
    Ok(shannon_entropy(&[q, 1.0 - q]))
}
