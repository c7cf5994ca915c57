//! Generalized Laguerre polynomials, Hermite functions, and factorial-ratio
//! helpers shared by the phase-space evaluators.

/// Generalized Laguerre polynomial `L_k^{(alpha)}(t)` by the stable
/// three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + alpha - t) L_k - (k + alpha) L_{k-1}`.
///
/// `alpha` is a nonnegative integer here because it always arises as an index
/// offset `n - m` between Fock levels.
pub fn laguerre(k: u32, alpha: u32, t: f64) -> f64 {
    let a = alpha as f64;
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - t;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + a - t) * cur - (jf + a) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients of `L_k^{(alpha)}` in the monomial basis, index `i` holding
/// the coefficient of `t^i`:
/// `L_k^{(alpha)}(t) = sum_i (-1)^i / i! * C(k + alpha, k - i) * t^i`.
///
/// Exact for the small degrees used here (binomials stay well inside f64
/// integer range for Fock truncations up to a few dozen levels).
pub fn laguerre_coeffs(k: u32, alpha: u32) -> Vec<f64> {
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    let mut sign = 1.0;
    let mut inv_fact = 1.0;
    for i in 0..=k {
        if i > 0 {
            sign = -sign;
            inv_fact /= i as f64;
        }
        coeffs.push(sign * inv_fact * binomial(k + alpha, k - i));
    }
    coeffs
}

/// Binomial coefficient as f64, multiplicative form.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * ((n - i) as f64) / ((i + 1) as f64);
    }
    acc
}

/// `sqrt(m! / n!)` computed as a product of square roots so intermediate
/// values never overflow even when the raw factorials would.
pub fn sqrt_factorial_ratio(m: u32, n: u32) -> f64 {
    if m >= n {
        ((n + 1)..=m).map(|j| (j as f64).sqrt()).product()
    } else {
        1.0 / sqrt_factorial_ratio(n, m)
    }
}

/// Hermite function `h_n(x) = (2^n n! sqrt(pi))^(-1/2) H_n(x) e^(-x^2/2)`,
/// the n-th eigenfunction of the harmonic oscillator in these units.
///
/// Evaluated by the normalized recurrence
/// `h_{n+1} = x sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1}`, which keeps every
/// intermediate on the order of the function value itself.
pub fn hermite_function(n: u32, x: f64) -> f64 {
    let h0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = std::f64::consts::SQRT_2 * x * h0;
    for j in 1..n {
        let jf = j as f64;
        let next = x * (2.0 / (jf + 1.0)).sqrt() * cur - (jf / (jf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}
