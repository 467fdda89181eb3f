//! Thermal state of the two-qubit anisotropic Heisenberg XXZ chain and three
//! quantum-information measures evaluated on it:
//!
//! - l1-norm steered coherence (`SCn`),
//! - relative entropy of steered coherence (`SCRE`),
//! - quantum Fisher information (`QFI`) for a collective spin observable.
//!
//! Every measure is available through a definition-level route (explicit
//! Pauli measurements, partial traces and Hermitian eigendecompositions) and
//! through a closed-form route that only reads the X-state entries of the
//! Gibbs matrix. The two routes share no code beyond the parameter
//! validation, so each one serves as the oracle for the other.
//!
//! The crate is `no_std` and only needs `alloc`. All matrices are at most
//! 4×4 and live on the stack.
//!
//! ```
//! use xxz_core::{model::{gibbs_closed, SpinParams}, steering::scn_closed};
//!
//! let p = SpinParams::new(10.0, 2.0, 0.0, 0.01).unwrap();
//! let g = gibbs_closed(&p).unwrap();
//! assert!((scn_closed(&g.elements()) - 3.0).abs() < 1e-6);
//! ```

#![no_std]

extern crate alloc;

mod error;
pub mod fisher;
pub mod linalg;
mod math;
pub mod measures;
pub mod model;
pub mod steering;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, EigenDecomposition};
pub use measures::{evaluate_point, Engine, Measure, MeasureValue};
pub use model::{GibbsState, SpinParams, XStateElements};
pub use num_complex::Complex64;
