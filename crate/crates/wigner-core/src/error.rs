//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by construction, validation, and the analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Input matrix is empty or not square.
    #[error("input must be a non-empty square matrix, got {rows}x{cols}")]
    Dimension { rows: usize, cols: usize },

    /// Two operands must share a dimension (after any documented padding).
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    /// Matrix is not Hermitian within `tol_herm`.
    #[error("matrix is not Hermitian: max |M - M^dagger| entry = {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    /// Trace differs from 1 beyond `tol_trace`.
    #[error("trace deviates from 1 by {deviation:.3e}")]
    NotUnitTrace { deviation: f64 },

    /// An eigenvalue is below the `-tol_psd` rejection threshold.
    #[error("matrix is not positive semi-definite: min eigenvalue = {min_eigenvalue:.3e}")]
    NotPsd { min_eigenvalue: f64 },

    /// A basis handed to `subspace_support` is not orthonormal.
    #[error("basis is not orthonormal: max Gram deviation = {deviation:.3e}")]
    NotOrthonormal { deviation: f64 },

    /// The 2x2 map matrix is not symplectic (det != 1).
    #[error("map is not symplectic: |det(S) - 1| = {deviation:.3e}")]
    NotSymplectic { deviation: f64 },

    /// Family parameters outside their admissible region.
    #[error("parameter domain violation: {0}")]
    Domain(String),

    /// A caller-facing contract was violated (preconditions on certificates,
    /// polynomial shape, membership queries, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The certified search-radius bound cannot be established for this
    /// polynomial (degenerate or non-state-like leading structure).
    #[error("search radius not certifiable: {0}")]
    RadiusNotCertifiable(String),

    /// The Jacobi eigensolver did not reach its off-diagonal threshold.
    #[error("eigensolver failed to converge after {sweeps} sweeps (off-diagonal {off:.3e})")]
    EigenNoConvergence { sweeps: usize, off: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
