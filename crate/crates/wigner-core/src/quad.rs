//! Gauss-Hermite quadrature and slow integral-based Wigner evaluators.
//!
//! These exist to cross-check the closed forms: `wigner_by_quadrature`
//! computes the defining integral directly from Hermite wavefunctions, and
//! the normalization/overlap integrals reduce to polynomial integrands that
//! the quadrature handles exactly at the dimensions used in tests.

use num_complex::Complex64;

use crate::cmatrix::{jacobi_hermitian, CMat};
use crate::error::Result;
use crate::fock::HermitianUnitTrace;
use crate::special::hermite_function;
use crate::wigner::{wigner_eval, PhasePoint};

use std::f64::consts::{FRAC_1_PI, PI, SQRT_2};

/// Nodes (ascending) and weights of the n-point Gauss-Hermite rule for the
/// weight `exp(-x^2)`, computed by diagonalizing the Jacobi tridiagonal
/// matrix (off-diagonal `sqrt(k/2)`); weights are `sqrt(pi)` times the
/// squared first eigenvector components.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut j = CMat::zeros(n);
    for k in 1..n {
        let b = (k as f64 / 2.0).sqrt();
        j[(k - 1, k)] = Complex64::new(b, 0.0);
        j[(k, k - 1)] = Complex64::new(b, 0.0);
    }
    let (vals, vecs) = jacobi_hermitian(&j)?;
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (vals[i], PI.sqrt() * vecs[(0, i)].norm_sqr()))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs.into_iter().unzip())
}

const ORACLE_NODES: usize = 64;

fn oracle_rule() -> (Vec<f64>, Vec<f64>) {
    gauss_hermite(ORACLE_NODES).expect("fixed-size quadrature rule")
}

/// Position wavefunction of a finite Fock superposition.
fn wavefunction(psi: &[Complex64], x: f64) -> Complex64 {
    psi.iter()
        .enumerate()
        .map(|(n, &c)| c * hermite_function(n as u32, x))
        .sum()
}

/// Wigner function of a pure state by direct quadrature of
/// `(1/2 pi) Int exp(-i xi y) psi(x + y/2) conj(psi)(x - y/2) dy`.
///
/// The substitution `y = 2u` turns the Gaussian tails of the wavefunctions
/// into the quadrature weight `exp(-u^2)`. Test oracle: slow and
/// independent of the Laguerre closed form.
pub fn wigner_by_quadrature(psi: &[Complex64], z: PhasePoint) -> f64 {
    let (nodes, weights) = oracle_rule();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&u, &w) in nodes.iter().zip(weights.iter()) {
        let left = wavefunction(psi, z.x + u);
        let right = wavefunction(psi, z.x - u).conj();
        let phase = Complex64::from_polar(1.0, -2.0 * z.xi * u);
        acc += w * (u * u).exp() * left * right * phase;
    }
    (FRAC_1_PI * acc).re
}

/// Matrix-element Wigner transform `W_{|m><n|}(z)` by direct quadrature of
/// `(1/pi) Int h_m(x + u) h_n(x - u) exp(-2 i xi u) du`. Test oracle for
/// the Laguerre closed form, off-diagonal elements included.
pub fn wigner_mn_by_quadrature(m: u32, n: u32, z: PhasePoint) -> Complex64 {
    let (nodes, weights) = oracle_rule();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&u, &w) in nodes.iter().zip(weights.iter()) {
        let left = hermite_function(m, z.x + u);
        let right = hermite_function(n, z.x - u);
        let phase = Complex64::from_polar(1.0, -2.0 * z.xi * u);
        acc += w * (u * u).exp() * left * right * phase;
    }
    FRAC_1_PI * acc
}

/// `Int Int W_a(z) dz` by tensor-product quadrature. Exact whenever the
/// polynomial degree stays below the rule order, which covers every
/// dimension this crate targets.
pub fn wigner_normalization(a: &HermitianUnitTrace) -> f64 {
    let (nodes, weights) = oracle_rule();
    let mut acc = 0.0;
    for (&x, &wx) in nodes.iter().zip(weights.iter()) {
        for (&xi, &wxi) in nodes.iter().zip(weights.iter()) {
            let reweight = (x * x + xi * xi).exp();
            acc += wx * wxi * reweight * wigner_eval(a, PhasePoint::new(x, xi));
        }
    }
    acc
}

/// `Int Int W_a(z) W_b(z) dz` by tensor-product quadrature on the scaled
/// grid `z = u / sqrt(2)`, which makes the reweighted integrand polynomial.
pub fn wigner_overlap(a: &HermitianUnitTrace, b: &HermitianUnitTrace) -> f64 {
    let (nodes, weights) = oracle_rule();
    let mut acc = 0.0;
    for (&u, &wu) in nodes.iter().zip(weights.iter()) {
        for (&v, &wv) in nodes.iter().zip(weights.iter()) {
            let z = PhasePoint::new(u / SQRT_2, v / SQRT_2);
            let reweight = (u * u + v * v).exp();
            acc += wu * wv * reweight * wigner_eval(a, z) * wigner_eval(b, z);
        }
    }
    0.5 * acc
}
