//! Small dense complex matrices and a Jacobi eigensolver for Hermitian ones.
//!
//! Dimensions in this crate are tiny (Fock truncations, typically <= 32), so
//! the representation is a flat row-major `Vec<Complex64>` and the eigensolver
//! is cyclic Jacobi with two-sided unitary rotations. No BLAS, no pivoting
//! drama, fully deterministic.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from a row-major slice; `data.len()` must equal `dim * dim`.
    pub fn from_slice(dim: usize, data: &[Complex64]) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::Dimension {
                rows: dim,
                cols: if dim == 0 { 0 } else { data.len() / dim },
            });
        }
        Ok(CMat {
            dim,
            data: data.to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> CMat {
        let mut out = CMat::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim, "matrix product needs equal dims");
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// `self + factor * rhs`, entrywise.
    pub fn add_scaled(&self, rhs: &CMat, factor: f64) -> CMat {
        assert_eq!(self.dim, rhs.dim, "matrix sum needs equal dims");
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o += factor * r;
        }
        out
    }

    pub fn scale(&self, factor: f64) -> CMat {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o *= factor;
        }
        out
    }

    /// Max entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Max entrywise |M - M^dagger|.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Embeds into a larger dimension with zero rows/columns appended.
    pub fn zero_padded(&self, dim: usize) -> CMat {
        assert!(dim >= self.dim, "padding cannot shrink a matrix");
        let mut out = CMat::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        let d = self.dim;
        &mut self.data[i * d + j]
    }
}

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues sorted descending (ties broken by ascending original
/// index, for determinism) and the matching orthonormal eigenvector columns.
/// The input is assumed Hermitian; only the upper triangle drives the
/// rotations but both triangles are updated.
pub fn jacobi_hermitian(h: &CMat) -> Result<(Vec<f64>, CMat)> {
    let n = h.dim;
    let mut a = h.clone();
    // Symmetrize defensively so tiny Hermiticity noise cannot bias sweeps.
    for i in 0..n {
        for j in (i + 1)..n {
            let m = 0.5 * (a[(i, j)] + a[(j, i)].conj());
            a[(i, j)] = m;
            a[(j, i)] = m.conj();
        }
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
    }
    let mut v = CMat::identity(n);
    let scale = a.frobenius().max(1.0);
    let stop = 1e-14 * scale;
    // Elements below this cannot push off(A) above the stop threshold even
    // all together; rotating on them would only churn rounding noise.
    let skip = stop / (4.0 * n as f64);

    let finish = |a: &CMat, v: &CMat| {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re).then(i.cmp(&j)));
        let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
        let mut vectors = CMat::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                vectors[(row, new_col)] = v[(row, old_col)];
            }
        }
        (eigenvalues, vectors)
    };

    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += a[(p, q)].norm_sqr();
                }
            }
            (2.0 * s).sqrt()
        };
        if off <= stop {
            return Ok(finish(&a, &v));
        }
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = a[(p, q)];
                let beta_abs = beta.norm();
                if beta_abs <= skip {
                    continue;
                }
                rotated = true;
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let phase = beta / beta_abs;
                let tau = (gamma - alpha) / (2.0 * beta_abs);
                // Stable root of t^2 - 2 tau t - 1 = 0, the annihilation
                // condition for this rotation convention.
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sigma = t * c;
                // U = [[c, -conj(s)], [s, c]] on coordinates (p, q) with
                // s = sigma * conj(phase); zeroes A[p][q] in U^dagger A U.
                let s = sigma * phase.conj();

                // Column update: A <- A U.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp + s * akq;
                    a[(k, q)] = -s.conj() * akp + c * akq;
                }
                // Row update: A <- U^dagger A.
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk + s.conj() * aqk;
                    a[(q, k)] = -s * apk + c * aqk;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                // Accumulate V <- V U.
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp + s * vkq;
                    v[(k, q)] = -s.conj() * vkp + c * vkq;
                }
            }
        }
        if !rotated {
            // Every remaining element is below the skip threshold, which
            // bounds off(A) under the stop level.
            return Ok(finish(&a, &v));
        }
    }

    let mut off = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            off += a[(p, q)].norm_sqr();
        }
    }
    Err(Error::EigenNoConvergence {
        sweeps: MAX_SWEEPS,
        off: (2.0 * off).sqrt(),
    })
}
