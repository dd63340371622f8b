//! Evaluators for the coefficient and truncation bounds — the fractional
//! ones scaled by the semi-norm U^{m,s}_θ, the improved integer-order
//! ones scaled by V_L = ‖u^{(m+1)}‖_{L¹}, and the prior bounds scaled by
//! the Chebyshev-weighted V_T — plus the ratio tables comparing them.

use crate::error::{Error, Result};
use crate::special::gamma::{gamma_ratio, ln_double_factorial_odd};
use std::f64::consts::PI;

/// |û_n| bound in the fractional index (m, s) with semi-norm scale `u_norm`.
///
/// m ≥ 1:  U/(2^{σ-1}π) · Γ((n-σ+1)/2)/Γ((n+σ+1)/2), σ = m+s;
/// m = 0, s ∈ (1/2,1): U/(2^{s-1}π) · max of the two Gamma-ratio branches.
pub fn bound_frac_coeff(m: u32, s: f64, u_norm: f64, n: u32) -> Result<f64> {
    let sigma = m as f64 + s;
    let nf = n as f64;
    if u_norm < 0.0 {
        return Err(Error::Domain("semi-norm scale must be ≥ 0".into()));
    }
    if !(nf >= sigma) {
        return Err(Error::Domain(format!(
            "coefficient bound needs n ≥ m+s, got n = {n}, m+s = {sigma}"
        )));
    }
    if m == 0 {
        if !(s > 0.5 && s < 1.0) {
            return Err(Error::Domain(format!(
                "the m = 0 bound needs s ∈ (1/2, 1), got {s}"
            )));
        }
        let first = gamma_ratio(0.5 * (nf + 1.0), -0.5 * s, 0.5 * s)?;
        let second =
            2.0 / (nf * nf - s * s + s).sqrt() * gamma_ratio(0.5 * nf, 1.0 - 0.5 * s, 0.5 * s)?;
        Ok(u_norm / (2.0_f64.powf(s - 1.0) * PI) * first.max(second))
    } else {
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::Domain(format!("need s ∈ (0, 1], got {s}")));
        }
        let ratio = gamma_ratio(0.5 * (nf + 1.0), -0.5 * sigma, 0.5 * sigma)?;
        Ok(u_norm / (2.0_f64.powf(sigma - 1.0) * PI) * ratio)
    }
}

/// Norm in which a truncation bound is stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncNorm {
    LInf,
    L2ChebWeight,
}

/// ‖u - π_N u‖ bound in the fractional index (m, s):
///
/// L∞ (1 < σ ≤ N+1):  U/(2^{σ-2}(σ-1)π) · Γ((N-σ)/2+1)/Γ((N+σ)/2);
/// L²_ω (1/2 < σ < N+1): U · √(8/((2σ-1)π) · Γ(N-σ+1)/Γ(N+σ)).
pub fn bound_frac_trunc(
    m: u32,
    s: f64,
    u_norm: f64,
    n_trunc: u32,
    norm: TruncNorm,
) -> Result<f64> {
    let sigma = m as f64 + s;
    let nf = n_trunc as f64;
    match norm {
        TruncNorm::LInf => {
            if !(sigma > 1.0 && sigma <= nf + 1.0) {
                return Err(Error::Domain(format!(
                    "L∞ truncation bound needs 1 < m+s ≤ N+1, got m+s = {sigma}, N = {n_trunc}"
                )));
            }
            let ratio = gamma_ratio(0.5 * nf, 1.0 - 0.5 * sigma, 0.5 * sigma)?;
            Ok(u_norm / (2.0_f64.powf(sigma - 2.0) * (sigma - 1.0) * PI) * ratio)
        }
        TruncNorm::L2ChebWeight => {
            if !(sigma > 0.5 && sigma < nf + 1.0) {
                return Err(Error::Domain(format!(
                    "L² truncation bound needs 1/2 < m+s < N+1, got m+s = {sigma}, N = {n_trunc}"
                )));
            }
            let ratio = gamma_ratio(nf, 1.0 - sigma, sigma)?;
            Ok(u_norm * (8.0 / ((2.0 * sigma - 1.0) * PI) * ratio).sqrt())
        }
    }
}

/// Improved integer-order coefficient bound, parity-aware:
///
/// n-m odd:  (2V_L/π) ∏_{j=0}^m 1/(n-m+2j);
/// n-m even: (2V_L/(π√(n²-m²))) ∏_{j=0}^{m-1} 1/(n-m+2j+1).
pub fn bound_int_coeff(m: u32, v_l: f64, n: u32) -> Result<f64> {
    check_int_coeff(m, v_l, n)?;
    let nf = n as f64;
    let mf = m as f64;
    if (n + m) % 2 == 1 {
        let mut prod = 1.0;
        for j in 0..=m {
            prod *= nf - mf + 2.0 * j as f64;
        }
        Ok(2.0 * v_l / (PI * prod))
    } else {
        let mut prod = (nf * nf - mf * mf).sqrt();
        for j in 0..m {
            prod *= nf - mf + 2.0 * j as f64 + 1.0;
        }
        Ok(2.0 * v_l / (PI * prod))
    }
}

/// Unified improved bound (2V_L/π) ∏_{j=0}^m 1/(n-m+2j), valid for both
/// parities and never below the parity-specific value.
pub fn bound_int_coeff_unified(m: u32, v_l: f64, n: u32) -> Result<f64> {
    check_int_coeff(m, v_l, n)?;
    let nf = n as f64;
    let mf = m as f64;
    let mut prod = 1.0;
    for j in 0..=m {
        prod *= nf - mf + 2.0 * j as f64;
    }
    Ok(2.0 * v_l / (PI * prod))
}

fn check_int_coeff(m: u32, v_l: f64, n: u32) -> Result<()> {
    if v_l < 0.0 {
        return Err(Error::Domain("norm scale must be ≥ 0".into()));
    }
    if n < m + 1 {
        return Err(Error::Domain(format!(
            "integer coefficient bound needs n ≥ m+1, got n = {n}, m = {m}"
        )));
    }
    Ok(())
}

/// Small-mode bound for 0 ≤ n ≤ m+1: (2/π) ‖u^{(n)}‖_{L¹} / (2n-1)!!.
pub fn bound_int_coeff_small_n(n: u32, norm_n: f64) -> f64 {
    2.0 / PI * norm_n * (-ln_double_factorial_odd(n)).exp()
}

/// Improved integer-order truncation bound. `norms[k]` is ‖u^{(k)}‖_{L¹}.
///
/// 1 ≤ m ≤ N: (2/(mπ)) ∏_{j=1}^m 1/(N-m+2j-1) · `norms[m+1]`;
/// m = 0:     `norms[1]` for every N ≥ 1;
/// m ≥ N+1:   (2/π) Σ_{n=N}^m c_n `norms[n+1]`/(2n+1)!!, c_n = 1, c_m = 2.
pub fn bound_int_trunc(m: u32, norms: &[f64], n_trunc: u32) -> Result<f64> {
    let need = |k: u32| -> Result<f64> {
        norms.get(k as usize).copied().ok_or_else(|| {
            Error::InvalidInput(format!(
                "truncation bound needs ‖u^({k})‖_L¹ at norms[{k}], got only {} entries",
                norms.len()
            ))
        })
    };
    let nf = n_trunc as f64;
    if m == 0 {
        if n_trunc < 1 {
            return Err(Error::Domain("stability bound needs N ≥ 1".into()));
        }
        return need(1);
    }
    if m <= n_trunc {
        let mf = m as f64;
        let mut prod = 1.0;
        for j in 1..=m {
            prod *= nf - mf + 2.0 * j as f64 - 1.0;
        }
        Ok(2.0 / (mf * PI * prod) * need(m + 1)?)
    } else {
        let mut acc = 0.0;
        for n in n_trunc..=m {
            let c = if n == m { 2.0 } else { 1.0 };
            acc += c * need(n + 1)? * (-ln_double_factorial_odd(n + 1)).exp();
        }
        Ok(2.0 / PI * acc)
    }
}

/// Prior coefficient bounds used for comparison, both scaled by
/// V_T = ‖u^{(m+1)}‖_{L¹_ω}: the falling-factorial form and the
/// centered-product sharpening of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorBound {
    /// 2V_T / (π n(n-1)···(n-m))
    Trefethen,
    /// (2V_T/π) ∏_{j=0}^m 1/(n-m+2j)
    Majidian,
}

pub fn bound_prior(kind: PriorBound, m: u32, v_t: f64, n: u32) -> Result<f64> {
    check_int_coeff(m, v_t, n)?;
    let nf = n as f64;
    let mf = m as f64;
    let prod = match kind {
        PriorBound::Trefethen => {
            let mut p = 1.0;
            for j in 0..=m {
                p *= nf - j as f64;
            }
            p
        }
        PriorBound::Majidian => {
            let mut p = 1.0;
            for j in 0..=m {
                p *= nf - mf + 2.0 * j as f64;
            }
            p
        }
    };
    Ok(2.0 * v_t / (PI * prod))
}

/// One row of the bound-comparison table for u = |x-θ| (m = 1, V_L = 2,
/// V_T = 2(1-θ²)^{-1/2}): prior bound over improved parity-aware bound.
#[derive(Debug, Clone, Copy)]
pub struct RatioRow {
    pub n: u32,
    pub ratio_falling: f64,
    pub ratio_product: f64,
}

/// Ratio series over n ∈ [n_lo, n_hi] for the kink family |x-θ|.
pub fn bound_ratios(theta: f64, n_lo: u32, n_hi: u32) -> Result<Vec<RatioRow>> {
    if !(theta > -1.0 && theta < 1.0) {
        return Err(Error::Domain(format!("ratio table needs θ ∈ (-1,1), got {theta}")));
    }
    if n_lo < 2 || n_hi < n_lo {
        return Err(Error::Domain("ratio table needs 2 ≤ n_lo ≤ n_hi".into()));
    }
    let v_l = 2.0;
    let v_t = 2.0 / (1.0 - theta * theta).sqrt();
    let mut rows = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let improved = bound_int_coeff(1, v_l, n)?;
        rows.push(RatioRow {
            n,
            ratio_falling: bound_prior(PriorBound::Trefethen, 1, v_t, n)? / improved,
            ratio_product: bound_prior(PriorBound::Majidian, 1, v_t, n)? / improved,
        });
    }
    Ok(rows)
}
