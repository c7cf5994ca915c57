//! Empirical verification of the certified search radius and the
//! negative-region bound: dense circle sampling outside the certified
//! radius must never find a violation.

mod common;

use wigner_core::fock::DensityMatrix;
use wigner_core::positivity::{is_wigner_positive, negative_region_bound, search_radius, Verdict};
use wigner_core::wigner::{wigner_eval, wigner_polynomial, PhasePoint};

const ANGLES: usize = 720;

fn circle_points(radius: f64) -> impl Iterator<Item = PhasePoint> {
    (0..ANGLES).map(move |k| {
        let theta = std::f64::consts::TAU * k as f64 / ANGLES as f64;
        PhasePoint::new(radius * theta.cos(), radius * theta.sin())
    })
}

#[test]
fn polynomial_exceeds_floor_outside_certified_radius() {
    let mut states: Vec<DensityMatrix> = (1..=4)
        .map(|n| DensityMatrix::fock_state(n, n + 1))
        .collect();
    let mut r = common::rng(31);
    for dim in 2..=6 {
        states.push(common::random_density(&mut r, dim));
        states.push(common::random_pure_density(&mut r, dim));
    }

    for (idx, rho) in states.iter().enumerate() {
        let q = wigner_polynomial(rho);
        for floor in [0.0, -1.0, q.coeff(0, 0) - 1.0] {
            let radius = search_radius(&q, floor).unwrap();
            for factor in [1.0, 1.25, 2.0, 4.0] {
                for z in circle_points(radius * factor) {
                    let value = q.eval(z);
                    assert!(
                        value > floor,
                        "state {idx}, floor {floor}: Q({}, {}) = {value} at radius factor {factor}",
                        z.x,
                        z.xi
                    );
                }
            }
        }
    }
}

#[test]
fn wigner_function_is_nonnegative_outside_negative_region_bound() {
    let mut r = common::rng(32);
    let mut states: Vec<DensityMatrix> = vec![
        DensityMatrix::fock_state(1, 2),
        DensityMatrix::fock_state(3, 4),
    ];
    for dim in 2..=5 {
        states.push(common::random_negative_state(&mut r, dim));
    }

    for (idx, rho) in states.iter().enumerate() {
        let bound = negative_region_bound(rho).unwrap();
        let q = wigner_polynomial(rho);
        let slack = -1e-12 * q.l1_norm().max(1.0);
        for factor in [1.0, 1.3, 1.8, 3.0] {
            for z in circle_points(bound * factor) {
                let w = wigner_eval(rho, z);
                assert!(
                    w >= slack,
                    "state {idx}: W({}, {}) = {w} inside claimed positive region",
                    z.x,
                    z.xi
                );
            }
        }
    }
}

#[test]
fn certificate_argmin_is_a_true_negative_witness() {
    let mut r = common::rng(33);
    for dim in 2..=5 {
        let rho = common::random_negative_state(&mut r, dim);
        let cert = is_wigner_positive(&rho).unwrap();
        assert_eq!(cert.verdict, Verdict::Negative);
        // The reported argmin actually exhibits a negative Wigner value.
        assert!(wigner_eval(&rho, cert.argmin) < 0.0);
        // And it lies inside the certified search disk.
        let q = wigner_polynomial(&rho);
        let radius = search_radius(&q, 0.0).unwrap();
        assert!(cert.argmin.r_squared() <= radius * radius * (1.0 + 1e-9));
    }
}
