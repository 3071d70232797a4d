//! Error type shared by the fallible operations of the crate.

use thiserror::Error;

/// Errors reported by tensor construction, transforms and factorizations.
///
/// Contract violations (index out of range, dimension mismatches between
/// operands) panic instead, like slice indexing does; the variants here cover
/// data-dependent conditions a caller can reasonably hit and recover from.
/// Numeric diagnostics are carried as `f64` regardless of the scalar type in
/// use.
#[derive(Debug, Error)]
pub enum Error {
    #[error("data length {found} does not match dims {dims:?} (expected {expected})")]
    DataLength {
        dims: (usize, usize, usize),
        expected: usize,
        found: usize,
    },

    #[error("non-finite entry at flat index {index}")]
    NonFinite { index: usize },

    #[error("tube is numerically singular: min/max DFT modulus ratio {ratio:.3e} below tolerance {tol:.3e}")]
    NearSingularTube { ratio: f64, tol: f64 },

    #[error("frontal slice {slice} of the transformed tensor is numerically singular")]
    SingularSlice { slice: usize },

    #[error("inverse transform of allegedly real-origin data left imaginary residue {residue:.3e} (relative), above {limit:.3e}")]
    SymmetryViolation { residue: f64, limit: f64 },

    #[error("target rank {rank} invalid for dims {dims:?}")]
    InvalidRank {
        rank: usize,
        dims: (usize, usize, usize),
    },

    #[error("reference tensor has zero Frobenius norm")]
    ZeroNorm,

    #[error("mask has no observed entries")]
    EmptyMask,

    #[error("malformed tensor file: {0}")]
    FileFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
