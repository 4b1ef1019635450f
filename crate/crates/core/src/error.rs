//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by constructors, parsers and resource guards.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix or vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A cochain or tensor was used with an incompatible arity.
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    /// Two objects over different algebras were combined.
    #[error("objects belong to different algebras")]
    AlgebraMismatch,

    /// A univariate quotient constructor was given a non-monic polynomial.
    #[error("defining polynomial must be monic")]
    NonMonic,

    /// A computation would allocate beyond the configured size bound.
    #[error("resource bound exceeded: coefficient space of dimension {dim} (arity {arity}) over bound {bound}")]
    ResourceBound { dim: usize, arity: usize, bound: usize },

    /// Malformed input data (JSON structure, number syntax, table shape).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
