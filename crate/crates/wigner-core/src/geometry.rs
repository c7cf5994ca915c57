//! Convex geometry of the Wigner-positive states: the boundary map
//! `F(rho1) = (1 - t0) rho0 + t0 rho1`, segment classification, interior
//! and boundary membership, affine generator decompositions, face
//! membership, and extreme-point screening.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cmatrix::{jacobi_hermitian, CMat};
use crate::error::{Error, Result};
use crate::fock::{combine, rank_default, spectral, DensityMatrix};
use crate::positivity::{
    certify_polynomial, is_wigner_positive, minimize_over_disk, nodal_set, search_radius,
    CertifyOptions, DiskObjective, PolyObjective, Verdict,
};
use crate::tol::{EPS_RANK, EPS_ZERO, SV_RANK_FACTOR};
use crate::wigner::{wigner_mn, wigner_polynomial, PhasePoint, WignerPolynomial};

/// Result of the boundary construction: the minimized Wigner ratio `k0`,
/// the crossing parameter `t0 = 1/(1 - k0)`, the boundary state, the phase
/// point witnessing the minimum, and the reference state used.
#[derive(Debug, Clone)]
pub struct BoundaryResult {
    pub k0: f64,
    pub t0: f64,
    pub rho_plus: DensityMatrix,
    pub witness: PhasePoint,
    pub reference: DensityMatrix,
}

/// Per-point label along a segment of states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentLabel {
    /// Strictly Wigner-positive, in the interior of the positive set
    /// relative to nodal states.
    InteriorPositive,
    /// Wigner function touches zero somewhere.
    Nodal,
    /// Wigner function is negative somewhere.
    NotPositive,
}

impl SegmentLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            SegmentLabel::InteriorPositive => "interior_positive",
            SegmentLabel::Nodal => "nodal",
            SegmentLabel::NotPositive => "not_positive",
        }
    }

    fn rank(&self) -> u8 {
        match self {
            SegmentLabel::InteriorPositive => 0,
            SegmentLabel::Nodal => 1,
            SegmentLabel::NotPositive => 2,
        }
    }
}

/// Labels along `(1 - t) rho0 + t rho1` for a grid of `t` values, plus the
/// estimated crossing parameter.
#[derive(Debug, Clone)]
pub struct SegmentClassification {
    pub t_values: Vec<f64>,
    pub labels: Vec<SegmentLabel>,
    pub crossing_t: f64,
}

/// Interior/boundary verdict relative to the full state set on an ambient
/// space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary(BoundaryBranch),
}

/// How a non-interior state sits on the boundary of the Wigner-positive
/// set: nodal but full rank, rank-deficient but positive, both, or outside
/// the set entirely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryBranch {
    NodalInteriorOfD,
    BoundaryOfD,
    Both,
    NotInDPlus,
}

impl BoundaryBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryBranch::NodalInteriorOfD => "nodal_interior_of_D",
            BoundaryBranch::BoundaryOfD => "boundary_of_D",
            BoundaryBranch::Both => "both",
            BoundaryBranch::NotInDPlus => "not_in_D_plus",
        }
    }
}

/// Necessary-condition screening for extreme points of the Wigner-positive
/// set. `tangent_face_dim` is the dimension of the space of traceless
/// Hermitian perturbations that keep every sampled nodal point at zero and
/// respect the state's null space; zero strengthens (but does not prove)
/// extremality.
#[derive(Debug, Clone)]
pub struct ExtremeCandidateReport {
    pub is_vacuum: bool,
    pub nodal_nonempty: bool,
    pub tangent_face_dim: usize,
    pub candidate: bool,
}

/// Quotient of two Wigner polynomials; the Gaussian weights cancel, so this
/// is the exact pointwise ratio of the two Wigner functions.
struct RatioObjective<'a> {
    numer: &'a WignerPolynomial,
    denom: &'a WignerPolynomial,
}

impl DiskObjective for RatioObjective<'_> {
    fn value(&self, z: PhasePoint) -> f64 {
        self.numer.eval(z) / self.denom.eval(z)
    }

    fn grad_hess(&self, z: PhasePoint) -> (f64, [f64; 2], [[f64; 2]; 2]) {
        let (u, gu, hu) = self.numer.eval_grad_hess(z);
        let (v, gv, hv) = self.denom.eval_grad_hess(z);
        let f = u / v;
        let mut g = [0.0; 2];
        for a in 0..2 {
            g[a] = (gu[a] - f * gv[a]) / v;
        }
        let mut h = [[0.0; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                h[a][b] = (hu[a][b] - f * hv[a][b] - g[a] * gv[b] - g[b] * gv[a]) / v;
            }
        }
        (f, g, h)
    }
}

fn pad_pair(rho1: &DensityMatrix, rho0: &DensityMatrix) -> (DensityMatrix, DensityMatrix) {
    let dim = rho1.dim().max(rho0.dim());
    (rho1.pad_to(dim), rho0.pad_to(dim))
}

fn is_vacuum_matrix(rho: &DensityMatrix) -> bool {
    let dim = rho.dim();
    if (rho.entry(0, 0) - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return false;
    }
    for i in 0..dim {
        for j in 0..dim {
            if (i, j) != (0, 0) && rho.entry(i, j).norm() > 1e-12 {
                return false;
            }
        }
    }
    true
}

/// Minimum of the Wigner ratio `W_rho1 / W_rho0`, clamped at zero, together
/// with the minimizing phase point.
///
/// The reference must be strictly Wigner-positive. With the vacuum
/// reference the ratio reduces exactly to the Wigner polynomial of `rho1`;
/// a general reference leads to a rational objective minimized over the
/// disk that provably contains the negative region of `rho1`.
pub fn k_zero(
    rho1: &DensityMatrix,
    reference: Option<&DensityMatrix>,
) -> Result<(f64, PhasePoint)> {
    let rho0_owned;
    let rho0 = match reference {
        Some(r) => r,
        None => {
            rho0_owned = DensityMatrix::vacuum(rho1.dim());
            &rho0_owned
        }
    };
    let (rho1, rho0) = pad_pair(rho1, rho0);
    let q1 = wigner_polynomial(&rho1);
    let scale = q1.l1_norm().max(1.0);
    let radius = search_radius(&q1, 0.0)?;

    let (min_value, witness) = if is_vacuum_matrix(&rho0) {
        let (v, z, _) = minimize_over_disk(
            &PolyObjective { q: &q1 },
            radius,
            crate::positivity::grid_resolution_for(radius),
        );
        (v, z)
    } else {
        let cert0 = is_wigner_positive(&rho0)?;
        if cert0.verdict != Verdict::StrictlyPositive {
            return Err(Error::Contract(format!(
                "reference state must be strictly Wigner-positive, got {}",
                cert0.verdict.as_str()
            )));
        }
        let q0 = wigner_polynomial(&rho0);
        let objective = RatioObjective {
            numer: &q1,
            denom: &q0,
        };
        let (v, z, _) = minimize_over_disk(
            &objective,
            radius,
            crate::positivity::grid_resolution_for(radius),
        );
        (v, z)
    };

    // Clamp within the nodal band: states certified positive or nodal get
    // k0 = 0 exactly, so the boundary map fixes them.
    if min_value >= -EPS_ZERO * scale {
        Ok((0.0, witness))
    } else {
        Ok((min_value, witness))
    }
}

/// The boundary map: `rho_plus = (1 - t0) rho0 + t0 rho1` with
/// `t0 = 1/(1 - k0)`. Wigner-positive inputs are fixed points (`t0 = 1`).
pub fn boundary_state(
    rho1: &DensityMatrix,
    reference: Option<&DensityMatrix>,
) -> Result<BoundaryResult> {
    let rho0_owned;
    let rho0 = match reference {
        Some(r) => r,
        None => {
            rho0_owned = DensityMatrix::vacuum(rho1.dim());
            &rho0_owned
        }
    };
    let (rho1, rho0) = pad_pair(rho1, rho0);
    let (k0, witness) = k_zero(&rho1, Some(&rho0))?;
    let t0 = 1.0 / (1.0 - k0);
    let rho_plus = if k0 == 0.0 {
        rho1.clone()
    } else {
        DensityMatrix::new(combine(&rho0, &rho1, t0)?)?
    };
    Ok(BoundaryResult {
        k0,
        t0,
        rho_plus,
        witness,
        reference: rho0,
    })
}

/// Certifies every state `(1 - t) rho0 + t rho1` on the given `t` grid and
/// reports the labels together with the crossing parameter from the
/// boundary construction. The grid is sorted ascending; the label sequence
/// must be monotone (positive, then nodal, then not positive) and the
/// function fails loudly if the certificates ever violate that order.
pub fn classify_segment(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    t_grid: &[f64],
) -> Result<SegmentClassification> {
    let cert0 = is_wigner_positive(rho0)?;
    if cert0.verdict != Verdict::StrictlyPositive {
        return Err(Error::Contract(format!(
            "segment start must be strictly Wigner-positive, got {}",
            cert0.verdict.as_str()
        )));
    }
    let (rho1, rho0) = pad_pair(rho1, rho0);
    let mut t_values: Vec<f64> = t_grid.to_vec();
    t_values.sort_by(|a, b| a.total_cmp(b));

    let labels: Vec<SegmentLabel> = t_values
        .par_iter()
        .map(|&t| {
            let state = combine(&rho0, &rho1, t)?;
            let q = wigner_polynomial(&state);
            let cert = certify_polynomial(&q, &CertifyOptions::default())?;
            Ok(match cert.verdict {
                Verdict::StrictlyPositive => SegmentLabel::InteriorPositive,
                Verdict::Nodal => SegmentLabel::Nodal,
                Verdict::Negative => SegmentLabel::NotPositive,
            })
        })
        .collect::<Result<_>>()?;

    for pair in labels.windows(2) {
        if pair[1].rank() < pair[0].rank() {
            return Err(Error::Contract(
                "segment labels are not monotone along t; certificates are inconsistent".into(),
            ));
        }
    }

    let crossing_t = boundary_state(&rho1, Some(&rho0))?.t0;
    Ok(SegmentClassification {
        t_values,
        labels,
        crossing_t,
    })
}

/// Restricts a state to the ambient space `span{|0>, ..., |ambient-1>}`,
/// checking that it is actually supported there.
fn embed_in_ambient(rho: &DensityMatrix, ambient_dim: usize) -> Result<DensityMatrix> {
    if ambient_dim == 0 {
        return Err(Error::Dimension { rows: 0, cols: 0 });
    }
    if rho.dim() <= ambient_dim {
        return Ok(rho.pad_to(ambient_dim));
    }
    let tail: f64 = (ambient_dim..rho.dim()).map(|i| rho.entry(i, i).re).sum();
    if tail.abs() > 1e-10 {
        return Err(Error::Contract(format!(
            "state leaks probability {tail:.3e} outside the ambient space of dimension {ambient_dim}"
        )));
    }
    let mut m = CMat::zeros(ambient_dim);
    for i in 0..ambient_dim {
        for j in 0..ambient_dim {
            m[(i, j)] = rho.entry(i, j);
        }
    }
    DensityMatrix::new(crate::fock::HermitianUnitTrace::new(m)?)
}

/// Interior test relative to the Wigner-positive set on the ambient space:
/// interior exactly when the state has maximal rank and a strictly positive
/// certificate. Everything else is classified by [`boundary_classification`].
pub fn interior_membership(rho: &DensityMatrix, ambient_dim: usize) -> Result<Membership> {
    let rho = embed_in_ambient(rho, ambient_dim)?;
    let full_rank = rank_default(&rho)? == ambient_dim;
    let cert = is_wigner_positive(&rho)?;
    if full_rank && cert.verdict == Verdict::StrictlyPositive {
        return Ok(Membership::Interior);
    }
    Ok(Membership::Boundary(classify_boundary(
        full_rank,
        cert.verdict,
    )?))
}

fn classify_boundary(full_rank: bool, verdict: Verdict) -> Result<BoundaryBranch> {
    Ok(match (full_rank, verdict) {
        (_, Verdict::Negative) => BoundaryBranch::NotInDPlus,
        (true, Verdict::Nodal) => BoundaryBranch::NodalInteriorOfD,
        (false, Verdict::StrictlyPositive) => BoundaryBranch::BoundaryOfD,
        (false, Verdict::Nodal) => BoundaryBranch::Both,
        (true, Verdict::StrictlyPositive) => {
            return Err(Error::Contract(
                "full-rank strictly positive state is interior, not on the boundary".into(),
            ))
        }
    })
}

/// Boundary branch of a non-interior state: nodal with full rank, positive
/// with deficient rank, both, or not Wigner-positive at all. Interior
/// states are a contract violation here.
pub fn boundary_classification(rho: &DensityMatrix, ambient_dim: usize) -> Result<BoundaryBranch> {
    let rho = embed_in_ambient(rho, ambient_dim)?;
    let full_rank = rank_default(&rho)? == ambient_dim;
    let cert = is_wigner_positive(&rho)?;
    classify_boundary(full_rank, cert.verdict)
}

/// Writes a Wigner-negative state as `(1 + s) rho_plus - s rho0` with
/// `rho_plus` on the positive boundary and `s = 1/t0 - 1 > 0`.
pub fn affine_generator_decomposition(
    rho: &DensityMatrix,
    reference: Option<&DensityMatrix>,
) -> Result<(DensityMatrix, f64)> {
    let cert = is_wigner_positive(rho)?;
    if cert.verdict != Verdict::Negative {
        return Err(Error::Contract(format!(
            "affine generator decomposition needs a Wigner-negative state, got {}",
            cert.verdict.as_str()
        )));
    }
    let result = boundary_state(rho, reference)?;
    let s = 1.0 / result.t0 - 1.0;
    Ok((result.rho_plus, s))
}

/// Does the state's Wigner function vanish on every point of `points`?
/// Needs a Wigner-positive state; the check is the nodal band on `Q`.
pub fn face_membership(rho: &DensityMatrix, points: &[PhasePoint]) -> Result<bool> {
    let cert = is_wigner_positive(rho)?;
    if cert.verdict == Verdict::Negative {
        return Err(Error::Contract(
            "face membership is defined for Wigner-positive states only".into(),
        ));
    }
    let q = wigner_polynomial(rho);
    let band = EPS_ZERO * q.l1_norm().max(1.0);
    Ok(points.iter().all(|&z| q.eval(z).abs() <= band))
}

/// Screens a Wigner-positive state against the necessary conditions for
/// extremality and reports the tangent-face dimension.
pub fn extreme_candidate_check(rho: &DensityMatrix) -> Result<ExtremeCandidateReport> {
    let cert = is_wigner_positive(rho)?;
    if cert.verdict == Verdict::Negative {
        return Err(Error::Contract(
            "extreme-point screening is defined for Wigner-positive states only".into(),
        ));
    }
    let is_vacuum = is_vacuum_matrix(rho);
    let report = nodal_set(rho)?;
    let nodal_nonempty = !report.empty;
    let tangent_face_dim = tangent_face_dimension(rho, &report.zeros)?;
    Ok(ExtremeCandidateReport {
        is_vacuum,
        nodal_nonempty,
        tangent_face_dim,
        candidate: is_vacuum || nodal_nonempty,
    })
}

const MAX_TANGENT_SAMPLES: usize = 64;

/// Dimension of the real solution space of Hermitian perturbations `sigma`
/// with zero trace, `W_sigma = 0` at every sampled nodal point, and
/// `sigma v = 0` for every null eigenvector `v` of the state.
///
/// Parameters are the `n` diagonal entries and the real/imaginary parts of
/// the upper triangle (`n^2` real unknowns); the rank of the constraint
/// matrix comes from singular-value thresholding.
fn tangent_face_dimension(rho: &DensityMatrix, zeros: &[PhasePoint]) -> Result<usize> {
    let n = rho.dim();
    let n_params = n * n;
    let mut rows: Vec<Vec<f64>> = Vec::new();

    // Trace constraint.
    let mut trace_row = vec![0.0; n_params];
    for v in trace_row.iter_mut().take(n) {
        *v = 1.0;
    }
    rows.push(trace_row);

    // Column index of the real / imaginary parameter of entry (i, j), i < j.
    let pair_base = |i: usize, j: usize| -> usize {
        // Pairs in lexicographic order, two parameters each.
        let before = i * n - i * (i + 1) / 2 + (j - i - 1);
        n + 2 * before
    };

    // One row per sampled nodal point: W_sigma(z) = 0.
    for z in zeros.iter().take(MAX_TANGENT_SAMPLES) {
        let mut row = vec![0.0; n_params];
        for i in 0..n {
            row[i] = wigner_mn(i as u32, i as u32, *z).re;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let w = wigner_mn(i as u32, j as u32, *z);
                let base = pair_base(i, j);
                row[base] = 2.0 * w.re;
                row[base + 1] = -2.0 * w.im;
            }
        }
        rows.push(row);
    }

    // Null-space constraints: sigma v = 0 for each negligible eigenvalue.
    let spec = spectral(rho)?;
    for (idx, &lambda) in spec.eigenvalues.iter().enumerate() {
        if lambda > EPS_RANK {
            continue;
        }
        let v: Vec<Complex64> = (0..n).map(|r| spec.eigenvectors[(r, idx)]).collect();
        for r in 0..n {
            // (sigma v)_r as a complex-linear form in the parameters; its
            // real and imaginary parts each contribute a row.
            let mut coeff = vec![Complex64::new(0.0, 0.0); n_params];
            coeff[r] = v[r];
            for c in 0..n {
                if c == r {
                    continue;
                }
                let (i, j) = if r < c { (r, c) } else { (c, r) };
                let base = pair_base(i, j);
                if r < c {
                    // sigma_rc = a + i b.
                    coeff[base] += v[c];
                    coeff[base + 1] += Complex64::new(0.0, 1.0) * v[c];
                } else {
                    // sigma_rc = conj(sigma_cr) = a - i b.
                    coeff[base] += v[c];
                    coeff[base + 1] += Complex64::new(0.0, -1.0) * v[c];
                }
            }
            rows.push(coeff.iter().map(|c| c.re).collect());
            rows.push(coeff.iter().map(|c| c.im).collect());
        }
    }

    // Numerical rank of the constraint matrix via the spectrum of A^T A.
    let mut gram = CMat::zeros(n_params);
    for row in &rows {
        for a in 0..n_params {
            if row[a] == 0.0 {
                continue;
            }
            for b in 0..n_params {
                gram[(a, b)] += Complex64::new(row[a] * row[b], 0.0);
            }
        }
    }
    let (eigenvalues, _) = jacobi_hermitian(&gram)?;
    let sigma_max = eigenvalues.first().copied().unwrap_or(0.0).max(0.0).sqrt();
    if sigma_max == 0.0 {
        return Ok(n_params);
    }
    let threshold = SV_RANK_FACTOR * sigma_max;
    let rank = eigenvalues
        .iter()
        .filter(|&&l| l.max(0.0).sqrt() > threshold)
        .count();
    Ok(n_params - rank)
}
