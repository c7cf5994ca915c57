//! Parameterized state families and sweep generators: the two-level
//! vacuum/|n> family with its closed-form boundary parameters, and the
//! three-dimensional cone families spanned by two orthonormal vectors over
//! the vacuum.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cmatrix::CMat;
use crate::error::{Error, Result};
use crate::fock::{DensityMatrix, HermitianUnitTrace};
use crate::geometry::k_zero;

/// Two-level family `(1-p)|0><0| + p|n><n| + s|0><n| + conj(s)|n><0|`.
///
/// The off-diagonal amplitude is constrained by positivity:
/// `|s|^2 <= p(1-p)`, with equality exactly on the pure states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelFamily {
    n: usize,
    p: f64,
    s: Complex64,
}

impl TwoLevelFamily {
    pub fn new(n: usize, p: f64, s: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Contract(
                "two-level family needs an excited level n >= 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Contract(format!(
                "population p must lie in [0, 1], got {p}"
            )));
        }
        // Slack of a few ulps so s = sqrt(p(1-p)) computed in floating
        // point is accepted as the pure boundary case.
        if s.norm_sqr() > p * (1.0 - p) + 1e-12 {
            return Err(Error::Contract(format!(
                "off-diagonal amplitude violates |s|^2 <= p(1-p): |s|^2 = {}, bound = {}",
                s.norm_sqr(),
                p * (1.0 - p)
            )));
        }
        Ok(TwoLevelFamily { n, p, s })
    }

    /// Pure member with `s = sqrt(p(1-p))` (positive branch).
    pub fn pure(n: usize, p: f64) -> Result<Self> {
        let s = (p * (1.0 - p)).sqrt();
        TwoLevelFamily::new(n, p, Complex64::new(s, 0.0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }
}

/// Builds the `(n+1)`-dimensional density matrix of a two-level family
/// member; only the four corner entries are populated.
pub fn family_2d(spec: &TwoLevelFamily) -> Result<DensityMatrix> {
    let dim = spec.n + 1;
    let mut m = CMat::zeros(dim);
    m[(0, 0)] = Complex64::new(1.0 - spec.p, 0.0);
    m[(spec.n, spec.n)] = Complex64::new(spec.p, 0.0);
    m[(0, spec.n)] = spec.s;
    m[(spec.n, 0)] = spec.s.conj();
    DensityMatrix::new(HermitianUnitTrace::new(m)?)
}

/// Closed-form boundary parameter `t0` for the pure two-level families
/// with `n = 1` or `n = 2`:
///
/// * `n = 1`: `t0 = 1 / (1 + p)`
/// * `n = 2`: `t0 = 1 / (1 + p + 2 sqrt(2 p (1-p)))`
///
/// Higher levels have no closed form here and must use the numeric path.
pub fn analytic_t0_2d(n: usize, p: f64) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Contract(format!(
            "closed-form t0 needs p in (0, 1], got {p}"
        )));
    }
    match n {
        1 => Ok(1.0 / (1.0 + p)),
        2 => Ok(1.0 / (1.0 + p + 2.0 * (2.0 * p * (1.0 - p)).sqrt())),
        _ => Err(Error::Domain(format!(
            "no closed-form t0 for level n = {n}; use the numeric boundary construction"
        ))),
    }
}

/// One row of a two-level boundary curve: the pure-family parameters, the
/// crossing value, and the mapped boundary coordinates `(t0 p, t0 s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint2D {
    pub p: f64,
    pub s: f64,
    pub t0: f64,
    pub p_plus: f64,
    pub s_plus: f64,
}

/// Sweeps the pure two-level family (positive real branch
/// `s = sqrt(p(1-p))`) over a uniform `p` grid on `[0, 1]` and maps each
/// member to the positive boundary. Because the boundary map is affine
/// with the vacuum as reference, the image is the family member with
/// parameters `(t0 p, t0 s)`.
pub fn boundary_curve_2d(n: usize, num_samples: usize) -> Result<Vec<CurvePoint2D>> {
    if n == 0 {
        return Err(Error::Contract(
            "boundary curve needs an excited level n >= 1".into(),
        ));
    }
    if num_samples < 2 {
        return Err(Error::Contract(format!(
            "boundary curve needs at least 2 samples, got {num_samples}"
        )));
    }
    (0..num_samples)
        .into_par_iter()
        .map(|i| {
            let p = i as f64 / (num_samples - 1) as f64;
            let s = (p * (1.0 - p)).sqrt();
            let rho = family_2d(&TwoLevelFamily::new(n, p, Complex64::new(s, 0.0))?)?;
            let (k0, _) = k_zero(&rho, None)?;
            let t0 = 1.0 / (1.0 - k0);
            Ok(CurvePoint2D {
                p,
                s,
                t0,
                p_plus: t0 * p,
                s_plus: t0 * s,
            })
        })
        .collect()
}

/// Three-dimensional cone specification: the parameters `(a, b, c, d)`
/// define the distinguished vector `v = bd|0> - ad|1> - bc|2>` and an
/// orthonormal basis `u, w` of its orthogonal complement inside
/// `span{|0>, |1>, |2>}`, with `u` along `a|0> + b|1>` and `w` obtained
/// from `c|0> + d|2>` by Gram-Schmidt against `u`.
#[derive(Debug, Clone)]
pub struct ConeSpec3D {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    u: [Complex64; 3],
    w: [Complex64; 3],
    v: [f64; 3],
}

impl ConeSpec3D {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if b == 0.0 || d == 0.0 {
            return Err(Error::Contract(
                "cone specification needs b != 0 and d != 0".into(),
            ));
        }
        let nu = (a * a + b * b).sqrt();
        let mut u = [
            Complex64::new(a / nu, 0.0),
            Complex64::new(b / nu, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        let nw = (c * c + d * d).sqrt();
        let mut w = [
            Complex64::new(c / nw, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(d / nw, 0.0),
        ];
        // Gram-Schmidt w against u; both stay orthogonal to v because u
        // and the raw w already are.
        let overlap: Complex64 = u.iter().zip(w.iter()).map(|(x, y)| x.conj() * y).sum();
        for i in 0..3 {
            w[i] -= overlap * u[i];
        }
        let norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in w.iter_mut() {
            *x /= norm;
        }
        let renorm = u.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in u.iter_mut() {
            *x /= renorm;
        }
        let spec = ConeSpec3D {
            a,
            b,
            c,
            d,
            u,
            w,
            v: [b * d, -a * d, -b * c],
        };
        let dev = spec.orthonormality_deviation();
        if dev > 1e-12 {
            return Err(Error::NotOrthonormal { deviation: dev });
        }
        Ok(spec)
    }

    pub fn params(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn u(&self) -> &[Complex64; 3] {
        &self.u
    }

    pub fn w(&self) -> &[Complex64; 3] {
        &self.w
    }

    /// The raw distinguished vector `(bd, -ad, -bc)` (not normalized).
    pub fn v(&self) -> &[f64; 3] {
        &self.v
    }

    fn orthonormality_deviation(&self) -> f64 {
        let dot = |x: &[Complex64; 3], y: &[Complex64; 3]| -> Complex64 {
            x.iter().zip(y.iter()).map(|(a, b)| a.conj() * b).sum()
        };
        let uu = (dot(&self.u, &self.u).re - 1.0).abs();
        let ww = (dot(&self.w, &self.w).re - 1.0).abs();
        let uw = dot(&self.u, &self.w).norm();
        let vn = self.v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let uv: Complex64 = self
            .u
            .iter()
            .zip(self.v.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        let wv: Complex64 = self
            .w
            .iter()
            .zip(self.v.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        uu.max(ww).max(uw).max(uv.norm() / vn).max(wv.norm() / vn)
    }
}

/// Builds the cone-family state
/// `(1-p-q)|0><0| + q|u><u| + p|w><w| + s(|u><w| + |w><u|)`
/// and validates it as a density matrix.
pub fn family_3d(cone: &ConeSpec3D, p: f64, q: f64, s: f64) -> Result<DensityMatrix> {
    if p < 0.0 || q < 0.0 || p + q > 1.0 + 1e-12 {
        return Err(Error::Contract(format!(
            "cone family needs p, q >= 0 and p + q <= 1, got p = {p}, q = {q}"
        )));
    }
    let mut m = CMat::zeros(3);
    m[(0, 0)] = Complex64::new(1.0 - p - q, 0.0);
    let u = cone.u();
    let w = cone.w();
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] += q * u[i] * u[j].conj()
                + p * w[i] * w[j].conj()
                + s * (u[i] * w[j].conj() + w[i] * u[j].conj());
        }
    }
    DensityMatrix::new(HermitianUnitTrace::new(m)?)
}

/// One row of a cone-frontier sweep along the base slice `p + q = 1`,
/// `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConePoint3D {
    pub p: f64,
    pub q: f64,
    pub t0: f64,
}

/// Sweeps the `s = 0` base slice of the cone (`q = 1 - p`) over a uniform
/// `p` grid and computes the boundary parameter `t0` of each state with
/// the vacuum as reference.
pub fn cone_sweep_3d(cone: &ConeSpec3D, num_samples: usize) -> Result<Vec<ConePoint3D>> {
    if num_samples < 2 {
        return Err(Error::Contract(format!(
            "cone sweep needs at least 2 samples, got {num_samples}"
        )));
    }
    (0..num_samples)
        .into_par_iter()
        .map(|i| {
            let p = i as f64 / (num_samples - 1) as f64;
            let q = 1.0 - p;
            let rho = family_3d(cone, p, q, 0.0)?;
            let (k0, _) = k_zero(&rho, None)?;
            Ok(ConePoint3D {
                p,
                q,
                t0: 1.0 / (1.0 - k0),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::{is_wigner_positive, Verdict};
    use crate::wigner::{wigner_eval, PhasePoint};
    use std::f64::consts::PI;

    #[test]
    fn family_validation_rejects_bad_parameters() {
        assert!(TwoLevelFamily::new(0, 0.5, Complex64::new(0.0, 0.0)).is_err());
        assert!(TwoLevelFamily::new(1, 1.2, Complex64::new(0.0, 0.0)).is_err());
        assert!(TwoLevelFamily::new(1, 0.5, Complex64::new(0.6, 0.0)).is_err());
        // Pure boundary case is accepted despite rounding.
        assert!(TwoLevelFamily::pure(1, 0.3).is_ok());
    }

    #[test]
    fn family_members_at_the_corners() {
        let vac = family_2d(&TwoLevelFamily::new(1, 0.0, Complex64::new(0.0, 0.0)).unwrap())
            .unwrap();
        assert_eq!(vac.entries(), DensityMatrix::vacuum(2).entries());

        let one = family_2d(&TwoLevelFamily::new(1, 1.0, Complex64::new(0.0, 0.0)).unwrap())
            .unwrap();
        assert_eq!(one.entries(), DensityMatrix::fock_state(1, 2).entries());
    }

    #[test]
    fn pure_members_have_rank_one() {
        let rho = family_2d(&TwoLevelFamily::pure(2, 0.5).unwrap()).unwrap();
        assert_eq!(crate::fock::rank_default(&rho).unwrap(), 1);
    }

    #[test]
    fn closed_form_t0_values() {
        assert!((analytic_t0_2d(1, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((analytic_t0_2d(2, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let expected = 1.0 / (1.5 + 2.0_f64.sqrt());
        assert!((analytic_t0_2d(2, 0.5).unwrap() - expected).abs() < 1e-15);
        assert!((expected - 0.34314575).abs() < 1e-7);
        assert!(matches!(analytic_t0_2d(3, 0.5), Err(Error::Domain(_))));
        assert!(analytic_t0_2d(1, 0.0).is_err());
    }

    #[test]
    fn numeric_t0_matches_closed_form() {
        for &(n, p) in &[(1, 0.3), (1, 0.7), (1, 1.0), (2, 0.5), (2, 1.0)] {
            let rho = family_2d(&TwoLevelFamily::pure(n, p).unwrap()).unwrap();
            let (k0, _) = k_zero(&rho, None).unwrap();
            let t0 = 1.0 / (1.0 - k0);
            let reference = analytic_t0_2d(n, p).unwrap();
            assert!(
                (t0 - reference).abs() < 1e-5,
                "n={n} p={p}: numeric {t0} vs closed form {reference}"
            );
        }
    }

    #[test]
    fn t0_is_invariant_under_sign_of_s() {
        let p: f64 = 0.4;
        let s = (p * (1.0 - p)).sqrt();
        let plus = family_2d(&TwoLevelFamily::new(1, p, Complex64::new(s, 0.0)).unwrap()).unwrap();
        let minus =
            family_2d(&TwoLevelFamily::new(1, p, Complex64::new(-s, 0.0)).unwrap()).unwrap();
        let (k_plus, _) = k_zero(&plus, None).unwrap();
        let (k_minus, _) = k_zero(&minus, None).unwrap();
        assert!((k_plus - k_minus).abs() < 1e-9);
    }

    #[test]
    fn boundary_curve_matches_closed_form_for_first_level() {
        let rows = boundary_curve_2d(1, 6).unwrap();
        assert_eq!(rows.len(), 6);
        let first = rows[0];
        assert_eq!(first.p, 0.0);
        assert_eq!(first.s, 0.0);
        assert!((first.t0 - 1.0).abs() < 1e-12);
        assert_eq!((first.p_plus, first.s_plus), (0.0, 0.0));
        for row in rows.iter().skip(1) {
            let expected = row.p / (1.0 + row.p);
            assert!(
                (row.p_plus - expected).abs() < 1e-5,
                "p={}: p_plus={} expected={}",
                row.p,
                row.p_plus,
                expected
            );
        }
    }

    #[test]
    fn curve_frontier_states_are_nodal() {
        let rows = boundary_curve_2d(1, 5).unwrap();
        let row = rows[2]; // p = 0.5
        let spec = TwoLevelFamily::new(1, row.p_plus, Complex64::new(row.s_plus, 0.0)).unwrap();
        let rho = family_2d(&spec).unwrap();
        let cert = is_wigner_positive(&rho).unwrap();
        assert_eq!(cert.verdict, Verdict::Nodal);
    }

    #[test]
    fn cone_spec_produces_orthonormal_frame() {
        let cone = ConeSpec3D::new(1.0, 2.0, 3.0, 4.0).unwrap();
        assert!(cone.orthonormality_deviation() <= 1e-12);
        assert!(ConeSpec3D::new(1.0, 0.0, 3.0, 4.0).is_err());
        assert!(ConeSpec3D::new(1.0, 2.0, 3.0, 0.0).is_err());
    }

    #[test]
    fn axis_cone_reproduces_fock_states() {
        let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let one = family_3d(&cone, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(one.entries(), DensityMatrix::fock_state(1, 3).entries());
        let two = family_3d(&cone, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(two.entries(), DensityMatrix::fock_state(2, 3).entries());
    }

    #[test]
    fn base_slice_matches_printed_two_level_wigner_form() {
        let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let (p, s) = (0.5, 0.3);
        let rho = family_3d(&cone, p, 1.0 - p, s).unwrap();
        for &(r, theta) in &[
            (1.0, 0.0),
            (0.3, 0.9),
            (0.8, -2.0),
            (1.7, 2.4),
            (0.0, 0.0),
        ] {
            let z = PhasePoint::new(r * f64::cos(theta), r * f64::sin(theta));
            let r2 = r * r;
            let expected = (-(1.0 - p) * (1.0 - 2.0 * r2)
                + p * (1.0 - 4.0 * r2 + 2.0 * r2 * r2)
                - 4.0 * s * r * f64::cos(theta) * (1.0 - r2))
                * (-r2).exp()
                / PI;
            assert!(
                (wigner_eval(&rho, z) - expected).abs() < 1e-12,
                "r={r} theta={theta}"
            );
        }
    }

    #[test]
    fn base_slice_reduces_to_fock_wigner_functions_at_the_corners() {
        let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let grid: Vec<PhasePoint> = (-4..=4)
            .flat_map(|i| (-4..=4).map(move |j| PhasePoint::new(i as f64 * 0.5, j as f64 * 0.5)))
            .collect();

        let at_zero = family_3d(&cone, 0.0, 1.0, 0.0).unwrap();
        let one = DensityMatrix::fock_state(1, 3);
        let at_one = family_3d(&cone, 1.0, 0.0, 0.0).unwrap();
        let two = DensityMatrix::fock_state(2, 3);
        for &z in &grid {
            assert!((wigner_eval(&at_zero, z) - wigner_eval(&one, z)).abs() < 1e-12);
            assert!((wigner_eval(&at_one, z) - wigner_eval(&two, z)).abs() < 1e-12);
        }
    }

    #[test]
    fn family_3d_rejects_indefinite_combinations() {
        let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        assert!(family_3d(&cone, 0.5, 0.5, 0.6).is_err());
        assert!(family_3d(&cone, 0.7, 0.7, 0.0).is_err());
    }

    #[test]
    fn cone_sweep_endpoints_hit_the_fock_values() {
        let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let rows = cone_sweep_3d(&cone, 5).unwrap();
        assert_eq!(rows.len(), 5);
        // p = 0: the state is |1><1|, p = 1: the state is |2><2|; both have
        // t0 = 1/2.
        assert!((rows[0].t0 - 0.5).abs() < 1e-5);
        assert!((rows[4].t0 - 0.5).abs() < 1e-5);
        for row in &rows {
            assert!((row.p + row.q - 1.0).abs() < 1e-15);
            assert!(row.t0 > 0.0 && row.t0 <= 1.0);
        }
    }

    #[test]
    fn skewed_cone_pure_states_are_not_wigner_positive() {
        let cone = ConeSpec3D::new(1.0, 1.0, 1.0, 1.0).unwrap();
        let rows = cone_sweep_3d(&cone, 3).unwrap();
        // Pure non-Gaussian endpoint states must leave the positive set.
        assert!(rows[0].t0 < 1.0);
        assert!(rows[2].t0 < 1.0);
    }
}
