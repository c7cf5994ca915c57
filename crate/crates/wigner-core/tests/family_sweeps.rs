//! Cross-checks of the sweep generators: nesting of the two-level
//! boundary regions across excitation levels, boundary verdicts of emitted
//! frontier states, and continuity of the cone sweep.

mod common;

use num_complex::Complex64;

use wigner_core::families::{
    analytic_t0_2d, boundary_curve_2d, cone_sweep_3d, family_2d, ConeSpec3D, TwoLevelFamily,
};
use wigner_core::fock::rank_default;
use wigner_core::geometry::{boundary_state, k_zero};
use wigner_core::positivity::{is_wigner_positive, Verdict};

fn numeric_t0_pure(n: usize, p: f64) -> f64 {
    let rho = family_2d(&TwoLevelFamily::pure(n, p).unwrap()).unwrap();
    let (k0, _) = k_zero(&rho, None).unwrap();
    1.0 / (1.0 - k0)
}

#[test]
fn boundary_regions_nest_with_increasing_level() {
    // Higher excitation numbers push the positive boundary inward, so the
    // crossing parameter decreases with n at matched (p, s) parameters.
    for &p in &[0.25, 0.5, 0.75, 1.0] {
        let t: Vec<f64> = (1..=4).map(|n| numeric_t0_pure(n, p)).collect();
        for w in t.windows(2) {
            assert!(
                w[0] >= w[1] - 1e-7,
                "p={p}: crossing parameters not nested: {t:?}"
            );
        }
    }
}

#[test]
fn curve_rows_match_per_point_boundary_construction() {
    let rows = boundary_curve_2d(3, 5).unwrap();
    for row in rows.iter().skip(1) {
        let rho = family_2d(
            &TwoLevelFamily::new(3, row.p, Complex64::new(row.s, 0.0)).unwrap(),
        )
        .unwrap();
        let result = boundary_state(&rho, None).unwrap();
        assert!(
            (result.t0 - row.t0).abs() < 1e-6,
            "p={}: {} vs {}",
            row.p,
            result.t0,
            row.t0
        );
    }
}

#[test]
fn emitted_frontier_states_are_nodal_or_on_the_state_set_boundary() {
    let rows = boundary_curve_2d(2, 6).unwrap();
    for row in &rows {
        let spec = TwoLevelFamily::new(2, row.p_plus, Complex64::new(row.s_plus, 0.0)).unwrap();
        let rho = family_2d(&spec).unwrap();
        let cert = is_wigner_positive(&rho).unwrap();
        let rank_deficient = rank_default(&rho).unwrap() < rho.dim();
        assert!(
            cert.verdict == Verdict::Nodal
                || (cert.verdict == Verdict::StrictlyPositive && rank_deficient),
            "p={}: verdict {:?}, rank deficient {rank_deficient}",
            row.p,
            cert.verdict
        );
    }
}

#[test]
fn cone_sweep_varies_continuously() {
    let cone = ConeSpec3D::new(1.0, 1.0, 1.0, 1.0).unwrap();
    let rows = cone_sweep_3d(&cone, 200).unwrap();
    for pair in rows.windows(2) {
        let step = (pair[1].t0 - pair[0].t0).abs();
        assert!(
            step < 0.05,
            "t0 jumps by {step} between p={} and p={}",
            pair[0].p,
            pair[1].p
        );
    }
}

#[test]
fn axis_cone_sweep_interpolates_the_analytic_endpoints() {
    let cone = ConeSpec3D::new(0.0, 1.0, 0.0, 1.0).unwrap();
    let rows = cone_sweep_3d(&cone, 11).unwrap();
    // Both endpoints are Fock states with closed-form t0 = 1/2.
    assert!((rows[0].t0 - analytic_t0_2d(1, 1.0).unwrap()).abs() < 1e-5);
    assert!((rows[10].t0 - analytic_t0_2d(2, 1.0).unwrap()).abs() < 1e-5);
}
