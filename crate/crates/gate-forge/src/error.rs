//! Error type shared by all fallible operations in the crate.

use thiserror::Error;

/// Errors raised by matrix kernels, synthesis and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands (or an operand and a target) have incompatible dimensions.
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An operation required a Hermitian input and the deviation exceeded the tolerance.
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    /// An operation required a unitary input.
    #[error("matrix is not unitary (Frobenius deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    /// A rotation axis was not normalized.
    #[error("rotation axis is not a unit vector (norm {norm})")]
    NonUnitAxis { norm: f64 },

    /// Synthesis or analysis parameters violate their invariants.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A basis label does not match the gate it is applied to.
    #[error("invalid basis label: {0}")]
    InvalidLabel(String),

    /// The matrix text format could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure while reading or writing matrix files.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
