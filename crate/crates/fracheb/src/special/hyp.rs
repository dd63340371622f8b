//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real parameters and
//! z ∈ [-1, 1].
//!
//! Dispatch: terminating series when a or b is a non-positive integer,
//! the Gauss value at z = 1, a Pfaff transform onto (0, 1/2] for z < 0,
//! the defining series for z ≤ 1/2, and connection formulas in w = 1 - z
//! for z near 1 (with the logarithmic variants when c - a - b is an
//! integer, as happens for the Gegenbauer parameter family).

use crate::error::{Error, Result};
use crate::special::gamma::{digamma_any, is_nonpositive_integer, ln_gamma_signed};

/// Arguments of ₂F₁. `c` must not be a non-positive integer and |z| ≤ 1.
#[derive(Debug, Clone, Copy)]
pub struct Hyp2F1Args {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

/// Default relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_TERMS: usize = 1_000_000;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ₂F₁(a, b; c; z) to relative tolerance `tol`.
pub fn hyp2f1(args: &Hyp2F1Args, tol: f64) -> Result<f64> {
    let Hyp2F1Args { a, b, c, z } = *args;
    hyp2f1_zw(a, b, c, z, 1.0 - z, tol)
}

/// Dispatcher entry carrying the complement w = 1 - z exactly; callers
/// that know the distance to z = 1 directly (endpoint evaluations) pass
/// it here to avoid the 1 - z cancellation.
pub(crate) fn hyp2f1_zw(a: f64, b: f64, c: f64, z: f64, w: f64, tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite() && z.is_finite() && w.is_finite()) {
        return Err(Error::Domain("hyp2f1: non-finite argument".into()));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Domain(format!(
            "hyp2f1: c = {c} is a non-positive integer"
        )));
    }
    if z.abs() > 1.0 {
        return Err(Error::Domain(format!("hyp2f1: |z| = {} > 1", z.abs())));
    }
    dispatch(a, b, c, z, w, tol.max(1e-15))
}

fn dispatch(a: f64, b: f64, c: f64, z: f64, w: f64, tol: f64) -> Result<f64> {
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return terminating_zw(a, b, c, z, w, tol);
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z == 1.0 || w == 0.0 {
        return gauss_value(a, b, c);
    }
    if z < 0.0 {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)); use the
        // smaller of a, b as the exponent.
        let (p, q) = if a.abs() <= b.abs() { (a, b) } else { (b, a) };
        let zt = z / (z - 1.0);
        let f = dispatch(p, c - q, c, zt, 1.0 / w, tol)?;
        return Ok(w.powf(-p) * f);
    }
    if z <= 0.5 {
        return series(a, b, c, z, tol);
    }
    connection(a, b, c, z, w, tol)
}

/// Terminating series in the given argument; degree is the smallest
/// non-positive-integer slot. Returns the sum and a rounding estimate.
fn terminating_raw(a: f64, b: f64, c: f64, z: f64) -> Result<(f64, f64)> {
    let n = match (term_degree(a), term_degree(b)) {
        (Some(na), Some(nb)) => na.min(nb),
        (Some(na), None) => na,
        (None, Some(nb)) => nb,
        (None, None) => unreachable!(),
    };
    if n as usize > MAX_TERMS {
        return Err(Error::Accuracy(format!(
            "terminating hyp2f1 of degree {n} exceeds the term cap"
        )));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut max_term = 1.0f64;
    for j in 0..n {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
        max_term = max_term.max(term.abs());
    }
    let est = max_term * f64::EPSILON * ((n.max(1)) as f64).sqrt();
    Ok((sum, est))
}

fn term_degree(x: f64) -> Option<u64> {
    if is_nonpositive_integer(x) {
        Some((-x) as u64)
    } else {
        None
    }
}

/// Terminating series evaluated in whichever of z, w = 1 - z keeps the
/// polynomial better conditioned, via
/// F(-m, b; c; z) = ((c-b)_m/(c)_m) F(-m, b; b-c-m+1; w).
fn terminating_zw(a: f64, b: f64, c: f64, z: f64, w: f64, tol: f64) -> Result<f64> {
    let direct = terminating_raw(a, b, c, z)?;
    let (m, other) = match (term_degree(a), term_degree(b)) {
        (Some(na), Some(nb)) if nb < na => (nb, a),
        (Some(na), _) => (na, b),
        (None, Some(nb)) => (nb, a),
        (None, None) => unreachable!(),
    };
    let c2 = other - c - m as f64 + 1.0;
    // the transformed denominator must not vanish inside the sum
    let degenerate = (0..m).any(|j| c2 + j as f64 == 0.0);
    let best = if degenerate {
        direct
    } else {
        let mut pref = 1.0;
        for j in 0..m {
            pref *= (c - other + j as f64) / (c + j as f64);
        }
        let (s, e) = terminating_raw(-(m as f64), other, c2, w)?;
        let transformed = (pref * s, pref.abs() * e);
        if transformed.1 < direct.1 {
            transformed
        } else {
            direct
        }
    };
    reject_if_cancelled(best.0, best.1, tol)?;
    Ok(best.0)
}

fn reject_if_cancelled(sum: f64, est: f64, _tol: f64) -> Result<()> {
    if est > 1e-8 * sum.abs().max(1.0) {
        return Err(Error::Accuracy(format!(
            "hyp2f1 series lost too many digits (cancellation ≈ {est:.2e} on a result of {sum:.2e})"
        )));
    }
    Ok(())
}

/// F at z = 1: Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)), requiring c - a - b > 0.
fn gauss_value(a: f64, b: f64, c: f64) -> Result<f64> {
    let d = c - a - b;
    if d <= 0.0 {
        return Err(Error::Divergence(format!(
            "hyp2f1 at z = 1 needs c - a - b > 0, got {d}"
        )));
    }
    gamma_product(&[c, d], &[c - a, c - b])
}

/// Γ(num[0])Γ(num[1])···/(Γ(den[0])···) with sign tracking; a pole in the
/// denominator sends the product to 0, a pole in the numerator is an error.
fn gamma_product(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut ln = 0.0;
    let mut sign = 1i32;
    for &x in num {
        let (l, s) = ln_gamma_signed(x);
        if s == 0 {
            return Err(Error::Pole(format!("Γ({x}) in a numerator")));
        }
        ln += l;
        sign *= s;
    }
    for &x in den {
        let (l, s) = ln_gamma_signed(x);
        if s == 0 {
            return Ok(0.0);
        }
        ln -= l;
        sign *= s;
    }
    Ok(sign as f64 * ln.exp())
}

fn check_cancellation(sum: f64, max_term: f64, steps: usize, _tol: f64) -> Result<()> {
    let est = max_term * f64::EPSILON * (steps.max(1) as f64).sqrt();
    if est > 1e-8 * sum.abs().max(1.0) {
        return Err(Error::Accuracy(format!(
            "hyp2f1 series lost too many digits (cancellation ≈ {est:.2e} on a result of {sum:.2e})"
        )));
    }
    Ok(())
}

/// Defining power series, |z| ≤ 1/2 (also used on transformed arguments).
fn series(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<f64> {
    let r = z.abs();
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut max_term = 1.0f64;
    let mut small_streak = 0u32;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
        max_term = max_term.max(term.abs());
        let stop = 0.5 * tol * sum.abs().max(1e-300) * (1.0 - r);
        if term.abs() <= stop {
            small_streak += 1;
            if small_streak >= 2 {
                check_cancellation(sum, max_term, j + 1, tol)?;
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::Accuracy(
        "hyp2f1 series did not converge within the term cap".into(),
    ))
}

/// z near 1. Routes on d = c - a - b: generic two-series connection for
/// non-integer d, logarithmic expansions for integer d.
fn connection(a: f64, b: f64, c: f64, z: f64, w: f64, tol: f64) -> Result<f64> {
    // parameter differences inherit rounding from the caller's arithmetic;
    // within that noise an integer case must be taken as an integer, or
    // the generic split runs into near-pole Γ factors
    let scale = 1.0 + a.abs() + b.abs() + c.abs();
    let snap = |x: f64| -> f64 {
        let r = x.round();
        if (x - r).abs() <= 1e-12 * scale {
            r
        } else {
            x
        }
    };
    let ca = snap(c - a);
    let cb = snap(c - b);
    let d = snap(c - a - b);
    // degenerate parameters: the Euler transform terminates exactly
    if is_nonpositive_integer(ca) || is_nonpositive_integer(cb) {
        let f = terminating_zw(ca, cb, c, z, w, tol)?;
        return Ok(w.powf(d) * f);
    }
    let d_round = d.round();
    if d == d_round {
        let m = d_round as i64;
        if m == 0 {
            return log_series(a, b, w, tol);
        }
        if m > 0 {
            // c = a + b + m directly
            return log_series_m(a, b, m as u32, c, w, tol);
        }
        // c = a + b - |m|: Euler transform first, then c = A + B + |m|
        let mm = (-m) as u32;
        let f = log_series_m(ca, cb, mm, c, w, tol)?;
        return Ok(w.powi(m as i32) * f);
    }
    // DLMF-style two-series splitting
    let k1 = gamma_product(&[c, d], &[ca, cb])?;
    let k2 = gamma_product(&[c, -d], &[a, b])?;
    let s1 = if k1 != 0.0 {
        series(a, b, 1.0 - d, w, tol)?
    } else {
        0.0
    };
    let s2 = if k2 != 0.0 {
        series(ca, cb, d + 1.0, w, tol)?
    } else {
        0.0
    };
    let t1 = k1 * s1;
    let t2 = k2 * w.powf(d) * s2;
    let f = t1 + t2;
    let est = (t1.abs() + t2.abs()) * f64::EPSILON * 4.0;
    if est > 1e-8 * f.abs().max(1.0) {
        return Err(Error::Accuracy(format!(
            "hyp2f1 connection at z = {z} ill-conditioned (c-a-b = {d} too close to an integer)"
        )));
    }
    Ok(f)
}

/// F(a, b; a+b; z) near z = 1 (c - a - b = 0).
fn log_series(a: f64, b: f64, w: f64, tol: f64) -> Result<f64> {
    let pref = gamma_product(&[a + b], &[a, b])?;
    if pref == 0.0 {
        return Ok(0.0);
    }
    let ln_w = w.ln();
    let mut coef = 1.0;
    let mut psi_j1 = -EULER_GAMMA; // ψ(1)
    let mut psi_aj = digamma_any(a);
    let mut psi_bj = digamma_any(b);
    let mut sum = 0.0;
    let mut max_term = 0.0f64;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        let term = coef * (2.0 * psi_j1 - psi_aj - psi_bj - ln_w);
        sum += term;
        max_term = max_term.max(term.abs());
        if j > 2 && term.abs() <= 0.5 * tol * sum.abs().max(1e-300) * (1.0 - w) {
            check_cancellation(sum, max_term, j + 1, tol)?;
            return Ok(pref * sum);
        }
        coef *= (a + jf) * (b + jf) / ((jf + 1.0) * (jf + 1.0)) * w;
        psi_j1 += 1.0 / (jf + 1.0);
        psi_aj += 1.0 / (a + jf);
        psi_bj += 1.0 / (b + jf);
    }
    Err(Error::Accuracy(
        "hyp2f1 logarithmic series did not converge".into(),
    ))
}

/// F(a, b; a+b+m; z) near z = 1 with integer m ≥ 1. `c` = a + b + m is
/// passed explicitly to avoid re-rounding.
fn log_series_m(a: f64, b: f64, m: u32, c: f64, w: f64, tol: f64) -> Result<f64> {
    // a or b may be a non-positive integer after a transform; then the
    // series part dies (1/Γ = 0) and only the finite sum remains.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return terminating_zw(a, b, c, 1.0 - w, w, tol);
    }
    let mf = m as f64;
    let (ln_c, sign_c) = ln_gamma_signed(c);
    if sign_c == 0 {
        return Err(Error::Pole(format!("Γ({c})")));
    }

    // finite part: Γ(m)/(Γ(a+m)Γ(b+m)) Σ_{j<m} (a)_j (b)_j / (j! (1-m)_j) w^j
    let front = gamma_product(&[mf], &[a + mf, b + mf])?;
    let mut finite = 0.0;
    if front != 0.0 {
        let mut t = 1.0;
        for j in 0..m {
            let jf = j as f64;
            finite += t;
            if j + 1 < m {
                t *= (a + jf) * (b + jf) / ((jf + 1.0) * (1.0 - mf + jf)) * w;
            }
        }
        finite *= front;
    }

    // log part: -(-w)^m / (Γ(a)Γ(b)) Σ_j (a+m)_j (b+m)_j / (j! (j+m)!)
    //           [ln w - ψ(j+1) - ψ(j+m+1) + ψ(a+m+j) + ψ(b+m+j)] w^j
    let inv_gamma_ab = gamma_product(&[], &[a, b])?;
    let mut log_part = 0.0;
    if inv_gamma_ab != 0.0 {
        let ln_w = w.ln();
        let mut ln_mfact = 0.0; // ln m!
        for i in 1..=m {
            ln_mfact += (i as f64).ln();
        }
        let mut coef = (-ln_mfact).exp(); // 1/(0! m!)
        let mut psi_j1 = -EULER_GAMMA;
        let mut psi_jm1 = digamma_any(mf + 1.0);
        let mut psi_am = digamma_any(a + mf);
        let mut psi_bm = digamma_any(b + mf);
        let mut sum = 0.0;
        let mut max_term = 0.0f64;
        let mut converged = false;
        for j in 0..MAX_TERMS {
            let jf = j as f64;
            let term = coef * (ln_w - psi_j1 - psi_jm1 + psi_am + psi_bm);
            sum += term;
            max_term = max_term.max(term.abs());
            if j > 2 && term.abs() <= 0.5 * tol * sum.abs().max(1e-300) * (1.0 - w) {
                check_cancellation(sum, max_term, j + 1, tol)?;
                converged = true;
                break;
            }
            coef *= (a + mf + jf) * (b + mf + jf) / ((jf + 1.0) * (jf + mf + 1.0)) * w;
            psi_j1 += 1.0 / (jf + 1.0);
            psi_jm1 += 1.0 / (jf + mf + 1.0);
            psi_am += 1.0 / (a + mf + jf);
            psi_bm += 1.0 / (b + mf + jf);
        }
        if !converged {
            return Err(Error::Accuracy(
                "hyp2f1 logarithmic series did not converge".into(),
            ));
        }
        let sign_w = if m % 2 == 0 { 1.0 } else { -1.0 };
        log_part = sign_w * w.powi(m as i32) * inv_gamma_ab * sum;
    }

    Ok(sign_c as f64 * ln_c.exp() * (finite - log_part))
}
