//! Wigner functions of Fock-basis states, evaluated exactly.
//!
//! Every state with finite Fock support has a Wigner function of the form
//! `W(x, xi) = (1/pi) exp(-x^2 - xi^2) Q(x, xi)` with `Q` a real bivariate
//! polynomial. This module evaluates the closed form for matrix-element
//! pairs `|m><n|`, assembles `Q` coefficient by coefficient, and applies
//! affine phase-space transforms.

use num_complex::Complex64;

use crate::cmatrix::CMat;
use crate::error::{Error, Result};
use crate::fock::HermitianUnitTrace;
use crate::special::{binomial, laguerre, laguerre_coeffs, sqrt_factorial_ratio};

use std::f64::consts::{FRAC_1_PI, SQRT_2};

/// A point `z = (x, xi)` of the phase plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub x: f64,
    pub xi: f64,
}

impl PhasePoint {
    pub fn new(x: f64, xi: f64) -> Self {
        PhasePoint { x, xi }
    }

    pub fn origin() -> Self {
        PhasePoint { x: 0.0, xi: 0.0 }
    }

    /// Squared distance from the origin.
    pub fn r_squared(&self) -> f64 {
        self.x * self.x + self.xi * self.xi
    }

    pub fn distance(&self, other: &PhasePoint) -> f64 {
        ((self.x - other.x).powi(2) + (self.xi - other.xi).powi(2)).sqrt()
    }
}

/// Linear symplectic transform plus translation: `z -> S (z - z0)` with
/// `det S = 1`.
#[derive(Debug, Clone, Copy)]
pub struct SymplecticMap {
    s: [[f64; 2]; 2],
    z0: PhasePoint,
}

impl SymplecticMap {
    pub fn new(s: [[f64; 2]; 2], z0: PhasePoint) -> Result<Self> {
        let det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
        let dev = (det - 1.0).abs();
        if dev >= 1e-12 {
            return Err(Error::NotSymplectic { deviation: dev });
        }
        Ok(SymplecticMap { s, z0 })
    }

    pub fn identity() -> Self {
        SymplecticMap {
            s: [[1.0, 0.0], [0.0, 1.0]],
            z0: PhasePoint::origin(),
        }
    }

    pub fn translation(z0: PhasePoint) -> Self {
        SymplecticMap {
            s: [[1.0, 0.0], [0.0, 1.0]],
            z0,
        }
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.s
    }

    pub fn offset(&self) -> PhasePoint {
        self.z0
    }

    /// Applies `z -> S (z - z0)`.
    pub fn apply(&self, z: PhasePoint) -> PhasePoint {
        let dx = z.x - self.z0.x;
        let dxi = z.xi - self.z0.xi;
        PhasePoint {
            x: self.s[0][0] * dx + self.s[0][1] * dxi,
            xi: self.s[1][0] * dx + self.s[1][1] * dxi,
        }
    }
}

/// The polynomial part `Q` of a Wigner function, stored as a dense table of
/// real monomial coefficients `c[j][k]` for `x^j xi^k`, total degree at most
/// `2 (dim - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerPolynomial {
    dim: usize,
    degree: usize,
    coeffs: Vec<f64>,
}

impl WignerPolynomial {
    fn zero(dim: usize, degree: usize) -> Self {
        WignerPolynomial {
            dim,
            degree,
            coeffs: vec![0.0; (degree + 1) * (degree + 1)],
        }
    }

    /// Builds directly from a coefficient table (row `j`, column `k` holds
    /// the `x^j xi^k` coefficient). Mostly useful in tests.
    pub fn from_coeffs(dim: usize, degree: usize, table: &[(usize, usize, f64)]) -> Self {
        let mut q = WignerPolynomial::zero(dim, degree);
        for &(j, k, c) in table {
            *q.at_mut(j, k) += c;
        }
        q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, j: usize, k: usize) -> f64 {
        if j > self.degree || k > self.degree {
            0.0
        } else {
            self.coeffs[j * (self.degree + 1) + k]
        }
    }

    fn at_mut(&mut self, j: usize, k: usize) -> &mut f64 {
        &mut self.coeffs[j * (self.degree + 1) + k]
    }

    /// Sum of absolute coefficient values; the scale used by tolerance bands.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// `Q(x, xi)` by nested Horner evaluation.
    pub fn eval(&self, z: PhasePoint) -> f64 {
        let n = self.degree + 1;
        let mut acc = 0.0;
        for j in (0..n).rev() {
            let row = &self.coeffs[j * n..(j + 1) * n];
            let mut row_val = 0.0;
            for &c in row.iter().rev() {
                row_val = row_val * z.xi + c;
            }
            acc = acc * z.x + row_val;
        }
        acc
    }

    /// Value, gradient, and Hessian of `Q` at a point, all from the exact
    /// coefficient table.
    pub fn eval_grad_hess(&self, z: PhasePoint) -> (f64, [f64; 2], [[f64; 2]; 2]) {
        let n = self.degree + 1;
        let mut q = 0.0;
        let mut qx = 0.0;
        let mut qxx = 0.0;
        let mut qxi = 0.0;
        let mut qxixi = 0.0;
        let mut qxxi = 0.0;
        // Row polynomials R_j(xi) and their first two derivatives.
        let mut xpow = 1.0; // x^j
        let mut xpow1 = 0.0; // j x^(j-1)
        let mut xpow2 = 0.0; // j (j-1) x^(j-2)
        for j in 0..n {
            let row = &self.coeffs[j * n..(j + 1) * n];
            let mut r = 0.0;
            let mut r1 = 0.0;
            let mut r2 = 0.0;
            for &c in row.iter().rev() {
                r2 = r2 * z.xi + 2.0 * r1;
                r1 = r1 * z.xi + r;
                r = r * z.xi + c;
            }
            q += xpow * r;
            qx += xpow1 * r;
            qxx += xpow2 * r;
            qxi += xpow * r1;
            qxixi += xpow * r2;
            qxxi += xpow1 * r1;
            xpow2 = xpow2 * z.x + 2.0 * xpow1;
            xpow1 = xpow1 * z.x + xpow;
            xpow *= z.x;
        }
        (q, [qx, qxi], [[qxx, qxxi], [qxxi, qxixi]])
    }

    /// Per-total-degree sums of absolute coefficients, index `D` holding
    /// `sum_{j+k=D} |c_jk|`. Drives the certified search-radius bound.
    pub fn degree_abs_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.degree + 1];
        for j in 0..=self.degree {
            for k in 0..=self.degree {
                let c = self.coeff(j, k);
                if j + k <= self.degree && c != 0.0 {
                    sums[j + k] += c.abs();
                }
            }
        }
        sums
    }

    /// Composes with an affine map: returns `Q'` with
    /// `Q'(z) = Q(S (z - z0))`. Only the polynomial factor is transformed;
    /// the Gaussian weight changes shape unless `S` is a rotation and
    /// `z0 = 0`, so the result is not itself a state polynomial in general.
    pub fn substitute_affine(&self, map: &SymplecticMap) -> WignerPolynomial {
        let s = map.s;
        let z0 = map.z0;
        // x' and xi' as linear polynomials [const, x-coeff, xi-coeff].
        let lin_x = [
            -s[0][0] * z0.x - s[0][1] * z0.xi,
            s[0][0],
            s[0][1],
        ];
        let lin_xi = [
            -s[1][0] * z0.x - s[1][1] * z0.xi,
            s[1][0],
            s[1][1],
        ];
        let deg = self.degree;
        let n = deg + 1;
        // Powers of the two linear forms as coefficient tables.
        let mut xpows: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut xipows: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut unit = vec![0.0; n * n];
        unit[0] = 1.0;
        xpows.push(unit.clone());
        xipows.push(unit);
        for p in 1..n {
            xpows.push(mul_linear(&xpows[p - 1], &lin_x, n));
            xipows.push(mul_linear(&xipows[p - 1], &lin_xi, n));
        }
        let mut out = WignerPolynomial::zero(self.dim, deg);
        for j in 0..n {
            for k in 0..n {
                let c = self.coeff(j, k);
                if c == 0.0 || j + k > deg {
                    continue;
                }
                let prod = mul_tables(&xpows[j], &xipows[k], n);
                for (idx, &v) in prod.iter().enumerate() {
                    if v != 0.0 {
                        out.coeffs[idx] += c * v;
                    }
                }
            }
        }
        out
    }
}

/// Multiplies a coefficient table by a linear form `a + b x + c xi`,
/// truncating at the table size (degrees never exceed it by construction).
fn mul_linear(table: &[f64], lin: &[f64; 3], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for j in 0..n {
        for k in 0..n {
            let v = table[j * n + k];
            if v == 0.0 {
                continue;
            }
            out[j * n + k] += v * lin[0];
            if j + 1 < n {
                out[(j + 1) * n + k] += v * lin[1];
            }
            if k + 1 < n {
                out[j * n + k + 1] += v * lin[2];
            }
        }
    }
    out
}

fn mul_tables(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for j1 in 0..n {
        for k1 in 0..n {
            let va = a[j1 * n + k1];
            if va == 0.0 {
                continue;
            }
            for j2 in 0..(n - j1) {
                for k2 in 0..(n - k1) {
                    let vb = b[j2 * n + k2];
                    if vb != 0.0 {
                        out[(j1 + j2) * n + k1 + k2] += va * vb;
                    }
                }
            }
        }
    }
    out
}

/// Wigner function of the matrix-element pair `|m><n|` at `z`, from the
/// closed form
/// `W(x, xi) = (1/pi) (-1)^m sqrt(m!/n!) (sqrt(2) z)^(n-m) L_m^{(n-m)}(2 r^2) e^{-r^2}`
/// for `m <= n` with `z = x + i xi`; the `m > n` case is its conjugate.
pub fn wigner_mn(m: u32, n: u32, z: PhasePoint) -> Complex64 {
    if m > n {
        return wigner_mn(n, m, z).conj();
    }
    let r2 = z.r_squared();
    let alpha = n - m;
    let zc = Complex64::new(z.x, z.xi);
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let pref = sign * sqrt_factorial_ratio(m, n) * FRAC_1_PI * (-r2).exp();
    let zpow = (SQRT_2 * zc).powu(alpha);
    pref * laguerre(m, alpha, 2.0 * r2) * zpow
}

/// Wigner function of a Hermitian unit-trace matrix at `z`, assembled by
/// linearity over matrix elements. Conjugate pairs are combined so the
/// result is real by construction.
pub fn wigner_eval(a: &HermitianUnitTrace, z: PhasePoint) -> f64 {
    let dim = a.dim();
    let mut acc = 0.0;
    for m in 0..dim {
        let diag = a.entry(m, m).re;
        if diag != 0.0 {
            acc += diag * wigner_mn(m as u32, m as u32, z).re;
        }
        for n in (m + 1)..dim {
            let amn = a.entry(m, n);
            if amn.norm_sqr() == 0.0 {
                continue;
            }
            let w = wigner_mn(m as u32, n as u32, z);
            // a_mn W_mn + a_nm W_nm = 2 Re(a_mn W_mn) for Hermitian input.
            acc += 2.0 * (amn * w).re;
        }
    }
    acc
}

/// Extracts the polynomial `Q` with
/// `wigner_eval(a, z) = (1/pi) exp(-r^2) Q(z)` for every `z`. Coefficients
/// are assembled from the integer-coefficient Laguerre expansions, pairing
/// each off-diagonal element with its conjugate so only real numbers are
/// ever accumulated.
pub fn wigner_polynomial(a: &HermitianUnitTrace) -> WignerPolynomial {
    let dim = a.dim();
    let degree = 2 * (dim - 1);
    let mut q = WignerPolynomial::zero(dim, degree);
    for m in 0..dim {
        for n in m..dim {
            let amn = a.entry(m, n);
            if amn.norm_sqr() == 0.0 {
                continue;
            }
            let alpha = (n - m) as u32;
            let lag = laguerre_coeffs(m as u32, alpha);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let weight = sign * sqrt_factorial_ratio(m as u32, n as u32) * SQRT_2.powi(alpha as i32);
            // (sqrt2 z)^alpha L_m^{(alpha)}(2 r^2) expanded into monomials:
            // i over the Laguerre series, a over (x^2 + xi^2)^i, b over z^alpha.
            for (i, &lag_i) in lag.iter().enumerate() {
                let radial = lag_i * 2f64.powi(i as i32);
                for ax in 0..=i {
                    let rad_coeff = radial * binomial(i as u32, ax as u32);
                    for b in 0..=alpha {
                        let base = weight * rad_coeff * binomial(alpha, b);
                        let j = (alpha - b) as usize + 2 * ax;
                        let k = b as usize + 2 * (i - ax);
                        // Real part of a_mn i^b, shared with the conjugate
                        // pair: diagonal terms enter once, off-diagonal twice.
                        let re_part = match b % 4 {
                            0 => amn.re,
                            1 => -amn.im,
                            2 => -amn.re,
                            _ => amn.im,
                        };
                        let mult = if n == m { 1.0 } else { 2.0 };
                        *q.at_mut(j, k) += mult * base * re_part;
                    }
                }
            }
        }
    }
    q
}

/// Evaluator for a Wigner function composed with an affine symplectic map:
/// `z -> wigner_eval(a, S (z - z0))`.
pub struct TransformedWigner {
    state: HermitianUnitTrace,
    map: SymplecticMap,
}

impl TransformedWigner {
    pub fn eval(&self, z: PhasePoint) -> f64 {
        wigner_eval(&self.state, self.map.apply(z))
    }

    pub fn map(&self) -> &SymplecticMap {
        &self.map
    }
}

/// Builds the transformed evaluator, rejecting non-symplectic matrices at
/// map construction. Use [`WignerPolynomial::substitute_affine`] for the
/// coefficient-level version.
pub fn transform_evaluator(a: &HermitianUnitTrace, map: SymplecticMap) -> TransformedWigner {
    TransformedWigner {
        state: a.clone(),
        map,
    }
}

/// Fock-basis matrix elements `<m|D(alpha)|n>` of the displacement operator,
/// truncated to `dim` levels. Exactly unitary only in the untruncated limit;
/// callers pad the dimension to control the error.
pub fn displacement_matrix(alpha: Complex64, dim: usize) -> CMat {
    let mut d = CMat::zeros(dim);
    let a2 = alpha.norm_sqr();
    let gauss = (-0.5 * a2).exp();
    for m in 0..dim {
        for n in 0..dim {
            let val = if m >= n {
                let pow = alpha.powu((m - n) as u32);
                gauss
                    * sqrt_factorial_ratio(n as u32, m as u32)
                    * laguerre(n as u32, (m - n) as u32, a2)
                    * pow
            } else {
                let pow = (-alpha.conj()).powu((n - m) as u32);
                gauss
                    * sqrt_factorial_ratio(m as u32, n as u32)
                    * laguerre(m as u32, (n - m) as u32, a2)
                    * pow
            };
            d[(m, n)] = val;
        }
    }
    d
}

/// Phase-space translation vector of `D(alpha)`: displacing by `alpha`
/// shifts the Wigner function by `z0 = (sqrt2 Re alpha, sqrt2 Im alpha)`.
pub fn displacement_offset(alpha: Complex64) -> PhasePoint {
    PhasePoint {
        x: SQRT_2 * alpha.re,
        xi: SQRT_2 * alpha.im,
    }
}
