//! gate-forge: exact synthesis of two- and three-qubit interaction
//! Hamiltonians for the CNOT and Toffoli gates, with symmetry analysis.
//!
//! A rectangular pulse of a time-independent coupling realizes the CNOT
//! exactly for every integer pair (n, m) — see [`synthesis`]. The symmetry
//! side — see [`symmetry`] — shows numerically that no global rotation
//! commutes with the CNOT interaction Hamiltonian (the minimal commutator
//! residual over all axes stays above π/√2), while the x-basis variant of
//! the gate recovers an exact rotation symmetry about x.
//!
//! Modules:
//! - [`matrix`]: dense complex matrices, tensor products, commutators,
//!   phase-aware distances
//! - [`eigen`]: Hermitian Jacobi eigensolver and the exponential map
//! - [`gates`]: Pauli matrices, projectors, the gate catalog, basis actions
//! - [`synthesis`]: interaction Hamiltonians, pulse evolution, block-form
//!   exponentials, verification, timing jitter
//! - [`symmetry`]: rotation-generator search, commutants, conserved
//!   operators, exchange asymmetry
//! - [`textfmt`]: the plain-text matrix exchange format
//! - [`report`] / [`cli`]: analysis orchestration and the `gate-forge`
//!   binary
//!
//! Every type is an immutable value and every operation a pure function, so
//! the whole crate is safe for concurrent read-only use.
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example synthesize_cnot
//! cargo run --example rotation_symmetry
//! ```

pub mod cli;
pub mod eigen;
pub mod error;
pub mod gates;
pub mod matrix;
pub mod report;
pub mod symmetry;
pub mod synthesis;
pub mod textfmt;
pub mod tolerances;

pub use error::{Error, Result};
pub use matrix::{phase_distance, ComplexMatrix, GateDistance, SystemShape};
