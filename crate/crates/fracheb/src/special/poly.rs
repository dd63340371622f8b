//! Chebyshev, Gegenbauer and Jacobi polynomial evaluation by three-term
//! recurrence. Gegenbauer polynomials are normalized so G_n^{(λ)}(1) = 1;
//! in particular G_n^{(0)} = T_n.

use crate::error::{Error, Result};
use crate::special::gamma::pochhammer;

/// T_n(x) = cos(n arccos x) on [-1, 1].
pub fn chebyshev_t(n: u32, x: f64) -> f64 {
    if x.abs() <= 1.0 {
        (n as f64 * x.acos()).cos()
    } else {
        // fall back to the recurrence off the interval
        gegenbauer_unchecked(n, 0.0, x)
    }
}

/// Gegenbauer polynomial with G_n^{(λ)}(1) = 1, λ > -1/2, by the
/// recurrence (n+2λ) G_{n+1} = 2(n+λ) x G_n - n G_{n-1}.
pub fn gegenbauer(n: u32, lambda: f64, x: f64) -> Result<f64> {
    if !(lambda > -0.5) {
        return Err(Error::Domain(format!(
            "gegenbauer requires λ > -1/2, got {lambda}"
        )));
    }
    Ok(gegenbauer_unchecked(n, lambda, x))
}

pub(crate) fn gegenbauer_unchecked(n: u32, lambda: f64, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let mut gm1 = 1.0;
            let mut g = x;
            for k in 1..n {
                let kf = k as f64;
                let next = (2.0 * (kf + lambda) * x * g - kf * gm1) / (kf + 2.0 * lambda);
                gm1 = g;
                g = next;
            }
            g
        }
    }
}

/// All of G_0 .. G_{n_max} at one x, one recurrence sweep.
pub(crate) fn gegenbauer_sequence(n_max: u32, lambda: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(1.0);
    if n_max == 0 {
        return out;
    }
    out.push(x);
    for k in 1..n_max {
        let kf = k as f64;
        let next =
            (2.0 * (kf + lambda) * x * out[k as usize] - kf * out[k as usize - 1]) / (kf + 2.0 * lambda);
        out.push(next);
    }
    out
}

/// Jacobi polynomial P_n^{(α,β)}(x), Szegő normalization
/// P_n^{(α,β)}(1) = (α+1)_n / n!. Valid for all real α, β.
pub fn jacobi_p(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 0.5 * ((alpha + beta + 2.0) * x + alpha - beta),
        _ => {
            let mut pm1 = 1.0;
            let mut p = 0.5 * ((alpha + beta + 2.0) * x + alpha - beta);
            for k in 2..=n {
                let kf = k as f64;
                let q = 2.0 * kf + alpha + beta;
                let a1 = 2.0 * kf * (kf + alpha + beta) * (q - 2.0);
                if a1 == 0.0 {
                    return jacobi_series(n, alpha, beta, x);
                }
                let a2 = (q - 1.0) * (alpha * alpha - beta * beta);
                let a3 = (q - 2.0) * (q - 1.0) * q;
                let a4 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * q;
                let next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
                pm1 = p;
                p = next;
            }
            p
        }
    }
}

/// Hypergeometric fallback for parameter combinations that break the
/// recurrence (e.g. n + α + β = 0).
fn jacobi_series(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let mut fact = 1.0;
    for k in 1..=n {
        fact *= k as f64;
    }
    let lead = pochhammer(alpha + 1.0, n) / fact;
    let mut term = 1.0;
    let mut sum = 1.0;
    let z = 0.5 * (1.0 - x);
    for j in 0..n {
        let jf = j as f64;
        term *= (jf - n as f64) * (n as f64 + alpha + beta + 1.0 + jf)
            / ((alpha + 1.0 + jf) * (jf + 1.0))
            * z;
        sum += term;
    }
    lead * sum
}
