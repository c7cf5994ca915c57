//! Shared random-state generators for the integration suites. All
//! randomness is seeded, so every test run sees the same inputs.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wigner_core::cmatrix::CMat;
use wigner_core::fock::{DensityMatrix, HermitianUnitTrace};
use wigner_core::positivity::{is_wigner_positive, Verdict};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    // Box-Muller pair; unit-variance real and imaginary parts.
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * u2.cos(), r * u2.sin())
}

/// Random Hermitian matrix `(G + G^dag) / 2` with entries of the given
/// scale.
pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> CMat {
    let mut g = CMat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            g[(i, j)] = scale * standard_complex(rng);
        }
    }
    let adj = g.adjoint();
    let mut h = CMat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            h[(i, j)] = 0.5 * (g[(i, j)] + adj[(i, j)]);
        }
    }
    h
}

/// Random full-rank density matrix `G G^dag / tr`.
pub fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    let mut g = CMat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            g[(i, j)] = standard_complex(rng);
        }
    }
    let mut m = g.mul(&g.adjoint());
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    DensityMatrix::new(HermitianUnitTrace::new(m).expect("Gram matrix is Hermitian unit-trace"))
        .expect("Gram matrix is PSD")
}

/// Random normalized state vector.
pub fn random_pure(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim).map(|_| standard_complex(rng)).collect();
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for c in v.iter_mut() {
        *c /= norm;
    }
    v
}

/// Density matrix of a random pure state.
pub fn random_pure_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    DensityMatrix::pure_state(&random_pure(rng, dim)).expect("normalized vector")
}

/// Random state that is certifiably not Wigner-positive: a mostly-pure
/// mixture, redrawn until the certificate says negative.
pub fn random_negative_state(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    loop {
        let pure = random_pure_density(rng, dim);
        let w: f64 = rng.gen_range(0.0..0.3);
        let mixed = random_density(rng, dim);
        let state = DensityMatrix::new(
            wigner_core::fock::combine(&pure, &mixed, w).expect("same dimension"),
        )
        .expect("convex combination of states");
        let cert = is_wigner_positive(&state).expect("certification succeeds");
        if cert.verdict == Verdict::Negative {
            return state;
        }
    }
}

/// Largest entrywise deviation between two matrices of equal dimension.
pub fn max_entry_deviation(a: &CMat, b: &CMat) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            dev = dev.max((a[(i, j)] - b[(i, j)]).norm());
        }
    }
    dev
}
