//! Wigner functions of Fock-truncated quantum states, exactly represented
//! as Gaussian-weighted bivariate polynomials, plus certified positivity
//! analysis and the convex geometry of the Wigner-positive state set.
//!
//! The crate is organized bottom-up:
//!
//! - [`cmatrix`]: small dense complex matrices and a Jacobi eigensolver;
//! - [`fock`]: validated density matrices and linear-algebra operations;
//! - [`special`]: Laguerre polynomials and Hermite functions;
//! - [`wigner`]: closed-form Wigner evaluation and polynomial extraction;
//! - [`quad`]: Gauss-Hermite quadrature oracles;
//! - [`positivity`]: certified global minimization of Wigner polynomials;
//! - [`geometry`]: boundary map, membership tests, decompositions;
//! - [`families`]: parameterized state families and sweep generators;
//! - [`io`]: JSON/CSV interchange formats.

pub mod cmatrix;
pub mod error;
pub mod families;
pub mod fock;
pub mod geometry;
pub mod io;
pub mod quad;
pub mod positivity;
pub mod special;
pub mod tol;
pub mod wigner;

pub use error::{Error, Result};
