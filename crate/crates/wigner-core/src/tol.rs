//! Centralized numeric tolerances.
//!
//! Every threshold used by validation and certification lives here with its
//! rationale, so no module carries ad-hoc magic numbers. All values are
//! overridable per call through [`Tolerances`].

/// Hermiticity check: max entrywise |M - M^dagger| allowed.
///
/// f64 noise floor with margin; entries are O(1) for states.
pub const TOL_HERM: f64 = 1e-10;

/// Unit-trace check: |tr M - 1| allowed.
pub const TOL_TRACE: f64 = 1e-10;

/// PSD rejection threshold: eigenvalues below `-TOL_PSD` reject the input;
/// eigenvalues in [-TOL_PSD, 0) are treated as rounding noise and clamped.
pub const TOL_PSD: f64 = 1e-9;

/// Numerical rank: eigenvalues above `EPS_RANK` (relative to the largest
/// eigenvalue magnitude) count toward the rank.
pub const EPS_RANK: f64 = 1e-9;

/// Spectral reconstruction and orthonormality budget for the Jacobi
/// eigensolver at the dims this crate targets (<= ~32).
pub const TOL_SPEC: f64 = 1e-10;

/// Positivity verdict band: |min Q| below `EPS_ZERO * max(1, ||c||_1)` is
/// reported as "nodal". Zero detection on floats is ill-posed; the band is
/// part of the certificate, not a ground-truth claim.
pub const EPS_ZERO: f64 = 1e-7;

/// Euclidean merge distance for clustering near-zero points of Q.
pub const ZERO_CLUSTER_DIST: f64 = 1e-3;

/// Singular-value threshold factor for numerical rank of the tangent-face
/// linear system: sigma > `SV_RANK_FACTOR` * sigma_max counts.
pub const SV_RANK_FACTOR: f64 = 1e-8;

/// Floor for the certified search radius; the bulk of every desk-scale
/// negative region sits well inside r = 4.
pub const R_MIN: f64 = 4.0;

/// Tolerance bundle for validation; `Default` gives the documented ladder.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Max entrywise Hermiticity deviation.
    pub herm: f64,
    /// Max |trace - 1|.
    pub trace: f64,
    /// PSD rejection threshold (see [`TOL_PSD`]).
    pub psd: f64,
    /// Relative eigenvalue cutoff for rank counting.
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            herm: TOL_HERM,
            trace: TOL_TRACE,
            psd: TOL_PSD,
            rank: EPS_RANK,
        }
    }
}
