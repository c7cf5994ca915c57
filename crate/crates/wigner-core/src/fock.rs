//! Finite-dimensional quantum states in the Fock basis: validated Hermitian
//! unit-trace matrices, density matrices, spectral decompositions, and the
//! handful of linear-algebra operations the rest of the crate is built on.

use num_complex::Complex64;

use crate::cmatrix::{jacobi_hermitian, CMat};
use crate::error::{Error, Result};
use crate::tol::{Tolerances, EPS_RANK, TOL_SPEC};

/// Hermitian matrix with unit trace in the Fock basis `{|0>, ..., |N>}`.
/// Entry `(m, n)` is `<m|rho|n>`. Not necessarily positive semi-definite;
/// affine combinations of states live here.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianUnitTrace {
    entries: CMat,
}

/// A genuine quantum state: Hermitian, unit trace, and positive
/// semi-definite within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    inner: HermitianUnitTrace,
}

/// Eigendecomposition of a Hermitian matrix: eigenvalues sorted descending,
/// eigenvectors as matching orthonormal columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMat,
}

/// Outcome of checking a raw matrix against the state invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub hermitian: bool,
    pub unit_trace: bool,
    pub psd: bool,
    pub min_eigenvalue: f64,
    pub trace_deviation: f64,
}

impl ValidationReport {
    pub fn is_valid_state(&self) -> bool {
        self.hermitian && self.unit_trace && self.psd
    }
}

impl HermitianUnitTrace {
    /// Validates the two structural invariants with the default tolerances.
    pub fn new(entries: CMat) -> Result<Self> {
        Self::with_tolerances(entries, &Tolerances::default())
    }

    pub fn with_tolerances(entries: CMat, tol: &Tolerances) -> Result<Self> {
        let dev = entries.hermitian_deviation();
        if dev > tol.herm {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace_dev = (entries.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_dev > tol.trace {
            return Err(Error::NotUnitTrace {
                deviation: trace_dev,
            });
        }
        Ok(HermitianUnitTrace { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn entries(&self) -> &CMat {
        &self.entries
    }

    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.entries[(m, n)]
    }

    /// Embeds into a larger Fock truncation with zero rows/columns.
    pub fn pad_to(&self, dim: usize) -> HermitianUnitTrace {
        if dim <= self.dim() {
            return self.clone();
        }
        HermitianUnitTrace {
            entries: self.entries.zero_padded(dim),
        }
    }
}

impl DensityMatrix {
    /// Validates PSD on top of the Hermitian/trace invariants.
    ///
    /// Eigenvalues in `[-tol_psd, 0)` are treated as rounding noise: the
    /// state is reprojected with those eigenvalues clamped to zero and the
    /// trace renormalized. Anything below `-tol_psd` is rejected.
    pub fn new(state: HermitianUnitTrace) -> Result<Self> {
        Self::with_tolerances(state, &Tolerances::default())
    }

    pub fn with_tolerances(state: HermitianUnitTrace, tol: &Tolerances) -> Result<Self> {
        let spec = spectral(&state)?;
        let min_eig = spec.eigenvalues.last().copied().unwrap_or(0.0);
        if min_eig < -tol.psd {
            return Err(Error::NotPsd {
                min_eigenvalue: min_eig,
            });
        }
        if min_eig >= 0.0 {
            return Ok(DensityMatrix { inner: state });
        }
        // Clamp the noise-level negatives and renormalize the trace. The
        // shift is on the order of the violation itself, not of tol_psd.
        let clamped: Vec<f64> = spec.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
        let total: f64 = clamped.iter().sum();
        if total <= 0.0 {
            return Err(Error::NotPsd {
                min_eigenvalue: min_eig,
            });
        }
        let dim = state.dim();
        let mut rebuilt = CMat::zeros(dim);
        for (idx, &l) in clamped.iter().enumerate() {
            let w = l / total;
            if w == 0.0 {
                continue;
            }
            for i in 0..dim {
                let vi = spec.eigenvectors[(i, idx)];
                for j in 0..dim {
                    rebuilt[(i, j)] += w * vi * spec.eigenvectors[(j, idx)].conj();
                }
            }
        }
        // Force exact Hermitian symmetry on the rebuilt matrix.
        for i in 0..dim {
            for j in (i + 1)..dim {
                let m = 0.5 * (rebuilt[(i, j)] + rebuilt[(j, i)].conj());
                rebuilt[(i, j)] = m;
                rebuilt[(j, i)] = m.conj();
            }
            rebuilt[(i, i)] = Complex64::new(rebuilt[(i, i)].re, 0.0);
        }
        let inner = HermitianUnitTrace::with_tolerances(rebuilt, tol)?;
        Ok(DensityMatrix { inner })
    }

    /// The vacuum state `|0><0|`.
    pub fn vacuum(dim: usize) -> DensityMatrix {
        Self::fock_state(0, dim)
    }

    /// The Fock state `|n><n|` embedded in `dim` levels (`n < dim`).
    pub fn fock_state(n: usize, dim: usize) -> DensityMatrix {
        assert!(n < dim, "Fock level {n} needs dim > {n}");
        let mut m = CMat::zeros(dim);
        m[(n, n)] = Complex64::new(1.0, 0.0);
        DensityMatrix {
            inner: HermitianUnitTrace { entries: m },
        }
    }

    /// Rank-one projector onto the given state vector, normalized first.
    pub fn pure_state(coeffs: &[Complex64]) -> Result<DensityMatrix> {
        let dim = coeffs.len();
        if dim == 0 {
            return Err(Error::Dimension { rows: 0, cols: 0 });
        }
        let norm_sq: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if norm_sq <= 0.0 {
            return Err(Error::Domain("zero vector has no pure state".into()));
        }
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = coeffs[i] * coeffs[j].conj() / norm_sq;
            }
        }
        Ok(DensityMatrix {
            inner: HermitianUnitTrace { entries: m },
        })
    }

    pub fn pad_to(&self, dim: usize) -> DensityMatrix {
        DensityMatrix {
            inner: self.inner.pad_to(dim),
        }
    }
}

impl std::ops::Deref for DensityMatrix {
    type Target = HermitianUnitTrace;
    fn deref(&self) -> &HermitianUnitTrace {
        &self.inner
    }
}

impl From<DensityMatrix> for HermitianUnitTrace {
    fn from(dm: DensityMatrix) -> HermitianUnitTrace {
        dm.inner
    }
}

/// Checks a raw square matrix against the state invariants and reports each
/// one separately. The PSD flag and the extreme eigenvalue come from the
/// spectral decomposition of the Hermitian part.
pub fn validate(m: &CMat, tol: &Tolerances) -> Result<ValidationReport> {
    if m.dim() == 0 {
        return Err(Error::Dimension { rows: 0, cols: 0 });
    }
    let herm_dev = m.hermitian_deviation();
    let hermitian = herm_dev <= tol.herm;
    let trace_deviation = (m.trace() - Complex64::new(1.0, 0.0)).norm();
    let unit_trace = trace_deviation <= tol.trace;
    // Jacobi symmetrizes internally, so eigenvalues of the Hermitian part
    // are well-defined even when the Hermiticity check failed.
    let (eigenvalues, _) = jacobi_hermitian(m)?;
    let min_eigenvalue = eigenvalues.last().copied().unwrap_or(0.0);
    let psd = hermitian && min_eigenvalue >= -tol.psd;
    Ok(ValidationReport {
        hermitian,
        unit_trace,
        psd,
        min_eigenvalue,
        trace_deviation,
    })
}

/// Spectral decomposition of a Hermitian unit-trace matrix.
pub fn spectral(rho: &HermitianUnitTrace) -> Result<SpectralDecomposition> {
    spectral_matrix(rho.entries())
}

/// Spectral decomposition of any Hermitian matrix (differences of states
/// included). Rejects non-Hermitian input.
pub fn spectral_matrix(m: &CMat) -> Result<SpectralDecomposition> {
    let dev = m.hermitian_deviation();
    if dev > crate::tol::TOL_HERM {
        return Err(Error::Contract(format!(
            "spectral decomposition needs a Hermitian matrix (deviation {dev:.3e})"
        )));
    }
    let (eigenvalues, eigenvectors) = jacobi_hermitian(m)?;
    let spec = SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    };
    debug_assert!(spec.max_reconstruction_error(m) < TOL_SPEC);
    Ok(spec)
}

impl SpectralDecomposition {
    /// `V diag(lambda) V^dagger`.
    pub fn reconstruct(&self) -> CMat {
        let n = self.eigenvalues.len();
        let mut out = CMat::zeros(n);
        for (idx, &l) in self.eigenvalues.iter().enumerate() {
            if l == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.eigenvectors[(i, idx)];
                for j in 0..n {
                    out[(i, j)] += l * vi * self.eigenvectors[(j, idx)].conj();
                }
            }
        }
        out
    }

    pub fn max_reconstruction_error(&self, original: &CMat) -> f64 {
        let rec = self.reconstruct();
        rec.add_scaled(original, -1.0).max_abs()
    }
}

/// Number of eigenvalues above `eps_rank`.
pub fn rank(rho: &DensityMatrix, eps_rank: f64) -> Result<usize> {
    let spec = spectral(rho)?;
    Ok(spec.eigenvalues.iter().filter(|&&l| l > eps_rank).count())
}

/// Rank with the default threshold.
pub fn rank_default(rho: &DensityMatrix) -> Result<usize> {
    rank(rho, EPS_RANK)
}

/// Trace norm `tr|A|` of a Hermitian matrix: the sum of absolute
/// eigenvalues. Accepts differences of states, not just states.
pub fn trace_norm(m: &CMat) -> Result<f64> {
    let spec = spectral_matrix(m)?;
    Ok(spec.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Trace distance `||a - b||_1` between two Hermitian matrices.
pub fn trace_distance(a: &HermitianUnitTrace, b: &HermitianUnitTrace) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    trace_norm(&a.entries().add_scaled(b.entries(), -1.0))
}

/// Hilbert-Schmidt inner product `tr(rho eta)`, real for Hermitian inputs.
pub fn hs_inner(rho: &DensityMatrix, eta: &DensityMatrix) -> Result<f64> {
    if rho.dim() != eta.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: eta.dim(),
        });
    }
    let n = rho.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            acc += rho.entry(i, k) * eta.entry(k, i);
        }
    }
    debug_assert!(acc.im.abs() < 1e-10);
    Ok(acc.re)
}

/// Affine combination `(1-t) rho0 + t rho1` for any real `t`. The trace
/// stays exactly 1; positivity is the caller's problem (that is the point
/// of affine extensions).
pub fn combine(
    rho0: &HermitianUnitTrace,
    rho1: &HermitianUnitTrace,
    t: f64,
) -> Result<HermitianUnitTrace> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimMismatch {
            left: rho0.dim(),
            right: rho1.dim(),
        });
    }
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    if t == 1.0 {
        return Ok(rho1.clone());
    }
    let entries = rho0
        .entries()
        .scale(1.0 - t)
        .add_scaled(rho1.entries(), t);
    Ok(HermitianUnitTrace { entries })
}

/// `tr(rho Pi_H)` for the projector onto the span of the given orthonormal
/// coefficient vectors. Equals 1 within tolerance exactly when `rho` is
/// supported on that span.
pub fn subspace_support(rho: &DensityMatrix, basis: &[Vec<Complex64>]) -> Result<f64> {
    let dim = rho.dim();
    let mut worst = 0.0f64;
    for (i, u) in basis.iter().enumerate() {
        if u.len() != dim {
            return Err(Error::DimMismatch {
                left: u.len(),
                right: dim,
            });
        }
        for (j, v) in basis.iter().enumerate() {
            let dot: Complex64 = u
                .iter()
                .zip(v.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - Complex64::new(expect, 0.0)).norm());
        }
    }
    if worst > 1e-10 {
        return Err(Error::NotOrthonormal { deviation: worst });
    }
    let mut acc = 0.0;
    for u in basis {
        // <u| rho |u>
        let mut val = Complex64::new(0.0, 0.0);
        for m in 0..dim {
            for n in 0..dim {
                val += u[m].conj() * rho.entry(m, n) * u[n];
            }
        }
        acc += val.re;
    }
    Ok(acc.clamp(0.0, 1.0 + 1e-12))
}
