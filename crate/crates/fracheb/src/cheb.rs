//! Chebyshev expansion coefficients û_n of singular-function families:
//! a quadrature oracle, exact closed forms, leading asymptotics, partial
//! sums with the halved-first-term convention, measured truncation
//! errors, and the fractional semi-norms U^{m,s}_θ.
//!
//! Closed-form signs are pinned to the quadrature oracle; see
//! [`sign_calibration_report`] for the per-family calibration record.

use crate::error::{Error, Result};
use crate::fractional::{rl_power_log_derivative, RlSide, RlSpec};
use crate::ggf::{ggf_eval, ggf_sequence, omega, GgfParams, Side};
use crate::quad::{adaptive, adaptive_oscillatory};
use crate::special::gamma::{
    cos_pi, digamma_any, gamma_ratio, ln_gamma, pochhammer, sin_pi,
};
use crate::special::poly::gegenbauer_sequence;
use std::f64::consts::{LN_2, PI};

pub use crate::ggf::End;

/// Tagged description of an analyzed singular function on [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub enum SingularFamily {
    /// |x-θ|^α with an interior singular point θ ∈ (-1, 1); α > -1/2 and
    /// not an even integer (those are plain polynomials).
    PowerInterior { alpha: f64, theta: f64 },
    /// |x-θ|^α ln|x-θ|, α ≥ 0, θ ∈ (-1, 1).
    PowerLogInterior { alpha: f64, theta: f64 },
    /// (1±x)^α singular at one endpoint, α > -1/2.
    PowerEndpoint { alpha: f64, end: End },
    /// (1±x)^α ln(1±x), α > -1/2.
    PowerLogEndpoint { alpha: f64, end: End },
    /// (1±x)^α g(x) with g given by its Taylor coefficients
    /// g^{(l)}(end)/l! at the singular endpoint.
    PowerTimesSmooth { alpha: f64, end: End, taylor: Vec<f64> },
}

impl SingularFamily {
    pub fn validate(&self) -> Result<()> {
        let check_alpha = |alpha: f64, lo_open: f64| -> Result<()> {
            if !(alpha > lo_open && alpha.is_finite()) {
                return Err(Error::Domain(format!(
                    "family exponent must exceed {lo_open}, got {alpha}"
                )));
            }
            Ok(())
        };
        match self {
            SingularFamily::PowerInterior { alpha, theta } => {
                check_alpha(*alpha, -0.5)?;
                if *alpha == alpha.floor() && (*alpha as i64) % 2 == 0 {
                    return Err(Error::Unsupported(format!(
                        "|x-θ|^α with even integer α = {alpha} is a polynomial"
                    )));
                }
                check_theta(*theta)
            }
            SingularFamily::PowerLogInterior { alpha, theta } => {
                if !(*alpha >= 0.0) {
                    return Err(Error::Domain(format!(
                        "power-log interior family needs α ≥ 0, got {alpha}"
                    )));
                }
                check_theta(*theta)
            }
            SingularFamily::PowerEndpoint { alpha, .. }
            | SingularFamily::PowerLogEndpoint { alpha, .. } => check_alpha(*alpha, -0.5),
            SingularFamily::PowerTimesSmooth { alpha, taylor, .. } => {
                check_alpha(*alpha, -0.5)?;
                if taylor.is_empty() {
                    return Err(Error::InvalidInput(
                        "power-times-smooth needs at least one Taylor coefficient".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Point value of the family member.
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            SingularFamily::PowerInterior { alpha, theta } => (x - theta).abs().powf(*alpha),
            SingularFamily::PowerLogInterior { alpha, theta } => {
                let t = (x - theta).abs();
                if t == 0.0 && *alpha > 0.0 {
                    0.0
                } else {
                    t.powf(*alpha) * t.ln()
                }
            }
            SingularFamily::PowerEndpoint { alpha, end } => dist_from(*end, x).powf(*alpha),
            SingularFamily::PowerLogEndpoint { alpha, end } => {
                let t = dist_from(*end, x);
                if t == 0.0 && *alpha > 0.0 {
                    0.0
                } else {
                    t.powf(*alpha) * t.ln()
                }
            }
            SingularFamily::PowerTimesSmooth { alpha, end, taylor } => {
                let t = dist_from(*end, x);
                let signed = match end {
                    End::Minus => t,
                    End::Plus => -t,
                };
                let mut g = 0.0;
                let mut p = 1.0;
                for c in taylor {
                    g += c * p;
                    p *= signed;
                }
                t.powf(*alpha) * g
            }
        }
    }

    /// Abscissa of the singular point.
    pub fn singular_point(&self) -> f64 {
        match self {
            SingularFamily::PowerInterior { theta, .. }
            | SingularFamily::PowerLogInterior { theta, .. } => *theta,
            SingularFamily::PowerEndpoint { end, .. }
            | SingularFamily::PowerLogEndpoint { end, .. }
            | SingularFamily::PowerTimesSmooth { end, .. } => end.x(),
        }
    }

    fn label(&self) -> String {
        match self {
            SingularFamily::PowerInterior { alpha, theta } => {
                format!("power-interior(α={alpha}, θ={theta})")
            }
            SingularFamily::PowerLogInterior { alpha, theta } => {
                format!("power-log-interior(α={alpha}, θ={theta})")
            }
            SingularFamily::PowerEndpoint { alpha, end } => {
                format!("power-endpoint(α={alpha}, end={})", end.x())
            }
            SingularFamily::PowerLogEndpoint { alpha, end } => {
                format!("power-log-endpoint(α={alpha}, end={})", end.x())
            }
            SingularFamily::PowerTimesSmooth { alpha, end, .. } => {
                format!("power-times-smooth(α={alpha}, end={})", end.x())
            }
        }
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > -1.0 && theta < 1.0) {
        return Err(Error::Domain(format!(
            "interior singular point needs θ ∈ (-1, 1), got {theta}"
        )));
    }
    Ok(())
}

fn dist_from(end: End, x: f64) -> f64 {
    match end {
        End::Minus => 1.0 + x,
        End::Plus => 1.0 - x,
    }
}

/// Fractional regularity index (m, s, θ) with σ = m + s.
#[derive(Debug, Clone, Copy)]
pub struct FracIndex {
    pub m: u32,
    pub s: f64,
    pub theta: f64,
}

impl FracIndex {
    pub fn new(m: u32, s: f64, theta: f64) -> Result<Self> {
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::Domain(format!("fractional order needs s ∈ (0, 1], got {s}")));
        }
        if m == 0 && !(s > 0.5 && s < 1.0) {
            return Err(Error::Domain(format!(
                "the m = 0 index is only defined for s ∈ (1/2, 1), got s = {s}"
            )));
        }
        check_theta(theta)?;
        Ok(Self { m, s, theta })
    }

    pub fn sigma(&self) -> f64 {
        self.m as f64 + self.s
    }
}

/// Provenance of a coefficient series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffMethod {
    Exact,
    Quadrature,
    Asymptotic,
}

/// Indexed Chebyshev coefficients û_0 .. û_{n_max}. Partial sums always
/// use the primed convention (first term halved).
#[derive(Debug, Clone)]
pub struct CoeffSeries {
    pub values: Vec<f64>,
    pub method: CoeffMethod,
    pub first_term_halved: bool,
}

impl CoeffSeries {
    pub fn new(values: Vec<f64>, method: CoeffMethod) -> Self {
        Self { values, method, first_term_halved: true }
    }

    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// û_n = (2/π) ∫₀^π f(cos φ) cos(nφ) dφ by composite panel-refined
/// quadrature; `nodes` is clamped up to the 8(n+1) resolution floor.
pub fn coeff_quadrature<F: Fn(f64) -> f64 + ?Sized>(f: &F, n: u32, nodes: usize) -> Result<f64> {
    let nodes = nodes.max(8 * (n as usize + 1)).max(64);
    let panels = nodes.div_ceil(15);
    let g = |phi: f64| f(phi.cos()) * (n as f64 * phi).cos();
    let v = adaptive_oscillatory(&g, 0.0, PI, panels, 1e-9, 1 << 21)?;
    Ok(2.0 / PI * v)
}

/// Family-aware quadrature oracle: the φ-integral is split at the
/// singular abscissa and the φ = φ* + t² substitution flattens the
/// algebraic singularity before the panels see it.
pub fn coeff_quadrature_family(fam: &SingularFamily, n: u32) -> Result<f64> {
    fam.validate()?;
    let tol = 1e-12;
    let nf = n as f64;
    let g = |phi: f64| fam.eval(phi.cos()) * (nf * phi).cos();
    let x_s = fam.singular_point();
    let phi_s = x_s.clamp(-1.0, 1.0).acos();
    let mut total = 0.0;
    // piece below the singular abscissa: φ = φ_s - t²
    if phi_s > 0.0 {
        let t_max = phi_s.sqrt();
        let piece = move |t: f64| 2.0 * t * g(phi_s - t * t);
        total += adaptive_oscillatory(&piece, 0.0, t_max, (n as usize + 2).max(16), tol, 1 << 21)?;
    }
    // piece above: φ = φ_s + t²
    if phi_s < PI {
        let t_max = (PI - phi_s).sqrt();
        let piece = move |t: f64| 2.0 * t * g(phi_s + t * t);
        total += adaptive_oscillatory(&piece, 0.0, t_max, (n as usize + 2).max(16), tol, 1 << 21)?;
    }
    Ok(2.0 / PI * total)
}

fn c_sigma(sigma: f64) -> Result<f64> {
    Ok(1.0 / (PI.sqrt() * 2.0_f64.powf(sigma - 1.0) * (ln_gamma(sigma + 0.5)?).exp()))
}

fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Exact coefficient û_n of the family, from the closed forms. Refuses
/// (tag, n) combinations outside the formulas' validity ranges.
pub fn coeff_exact(fam: &SingularFamily, n: u32) -> Result<f64> {
    fam.validate()?;
    match fam {
        SingularFamily::PowerInterior { alpha, theta } => {
            power_interior_exact(*alpha, *theta, n)
        }
        SingularFamily::PowerLogInterior { alpha, theta } => {
            if *theta != 0.0 {
                return Err(Error::Unsupported(
                    "power-log interior closed form is only available at θ = 0".into(),
                ));
            }
            power_log_origin_exact(*alpha, n)
        }
        SingularFamily::PowerEndpoint { alpha, end } => {
            Ok(end_sign(*end, n) * power_endpoint_exact(*alpha, n)?)
        }
        SingularFamily::PowerLogEndpoint { alpha, end } => {
            Ok(end_sign(*end, n) * power_log_endpoint_exact(*alpha, n)?)
        }
        SingularFamily::PowerTimesSmooth { alpha, end, taylor } => {
            let mut acc = 0.0;
            for (l, c) in taylor.iter().enumerate().take(13) {
                if *c == 0.0 {
                    continue;
                }
                let term = c * power_endpoint_exact(alpha + l as f64, n)?;
                acc += term;
                if term.abs() < 1e-16 * acc.abs().max(1.0) && l > 0 {
                    break;
                }
            }
            Ok(end_sign(*end, n) * acc)
        }
    }
}

fn end_sign(end: End, n: u32) -> f64 {
    match end {
        End::Minus => 1.0,
        End::Plus => parity(n as i64),
    }
}

/// û_n of |x-θ|^α for n ≥ α+1:
///   C_σ Γ(α+1) ω_{α+1}(θ) [ ʳG_{n-α-1}^{(α+1)}(θ) + (-1)^{⌊α⌋} ˡG_{n-α-1}^{(α+1)}(θ) ],
/// σ = α+1. The relative sign between the two families is the one fixed by
/// the quadrature oracle (and by continuity in α across odd integers).
fn power_interior_exact(alpha: f64, theta: f64, n: u32) -> Result<f64> {
    let nf = n as f64;
    if nf < alpha + 1.0 {
        return Err(Error::Unsupported(format!(
            "interior closed form needs n ≥ α+1 = {}, got n = {n}",
            alpha + 1.0
        )));
    }
    let sigma = alpha + 1.0;
    let gamma_a1 = (ln_gamma(alpha + 1.0)?).exp();
    if alpha == alpha.floor() {
        // odd integer α: u^{(α+1)} is a Dirac mass and the two families
        // coalesce into one Gegenbauer polynomial
        let deg = (nf - alpha - 1.0) as u32;
        let seq = gegenbauer_sequence(deg, sigma, theta);
        let coef = gamma_a1 * 2.0 / (PI.sqrt() * 2.0_f64.powf(alpha) * (ln_gamma(sigma + 0.5)?).exp());
        return Ok(coef * seq[deg as usize] * omega(sigma, theta));
    }
    let nu = nf - sigma;
    let right = ggf_eval(&GgfParams::right(nu, sigma)?, theta, 1e-13)?;
    let left = ggf_eval(&GgfParams::left(nu, sigma)?, theta, 1e-13)?;
    let sign_a = parity(alpha.floor() as i64);
    Ok(c_sigma(sigma)? * gamma_a1 * omega(sigma, theta) * (right + sign_a * left))
}

/// û_{2k} of |x|^α ln|x| (odd coefficients vanish):
/// (-1)^{k+1} Γ(α+1)/(2^{α-1}π) Γ(k-α/2)/Γ(k+α/2+1)
///   [ π/2 cos(απ/2) + sin(απ/2)(ψ(α+1) - ln 2 - (ψ(k-α/2)+ψ(k+α/2+1))/2) ].
fn power_log_origin_exact(alpha: f64, n: u32) -> Result<f64> {
    let nf = n as f64;
    if nf < alpha + 1.0 {
        return Err(Error::Unsupported(format!(
            "power-log closed form needs n ≥ α+1 = {}, got n = {n}",
            alpha + 1.0
        )));
    }
    if n % 2 == 1 {
        return Ok(0.0);
    }
    let k = (n / 2) as f64;
    let ratio = gamma_ratio(k, -0.5 * alpha, 0.5 * alpha + 1.0)?;
    let scale = parity(n as i64 / 2 + 1)
        * (ln_gamma(alpha + 1.0)?).exp()
        * ratio
        / (2.0_f64.powf(alpha - 1.0) * PI);
    let bracket = 0.5 * PI * cos_pi(0.5 * alpha)
        + sin_pi(0.5 * alpha)
            * (digamma_any(alpha + 1.0)
                - LN_2
                - 0.5 * (digamma_any(k - 0.5 * alpha) + digamma_any(k + 0.5 * alpha + 1.0)));
    Ok(scale * bracket)
}

/// û_n of (1+x)^α: the large-n form for n ≥ α+1, the Beta-function form
/// below it.
fn power_endpoint_exact(alpha: f64, n: u32) -> Result<f64> {
    let nf = n as f64;
    if nf >= alpha + 1.0 {
        // (-1)^{n+1} sin(πα) Γ(2α+1)/(2^{α-1}π) Γ(n-α)/Γ(n+α+1)
        let ratio = gamma_ratio(nf, -alpha, alpha + 1.0)?;
        Ok(parity(n as i64 + 1) * sin_pi(alpha) * (ln_gamma(2.0 * alpha + 1.0)?).exp()
            / (2.0_f64.powf(alpha - 1.0) * PI)
            * ratio)
    } else {
        // 2^{α+1} Γ(α+1) Γ(α+1/2) / (√π Γ(α-n+1) Γ(α+n+1))
        let ln = (alpha + 1.0) * LN_2 + ln_gamma(alpha + 1.0)? + ln_gamma(alpha + 0.5)?
            - 0.5 * PI.ln()
            - ln_gamma(alpha - nf + 1.0)?
            - ln_gamma(alpha + nf + 1.0)?;
        Ok(ln.exp())
    }
}

/// û_n of (1+x)^α ln(1+x): α-derivative of the power-endpoint forms.
fn power_log_endpoint_exact(alpha: f64, n: u32) -> Result<f64> {
    let nf = n as f64;
    if nf >= alpha + 1.0 {
        let ratio = gamma_ratio(nf, -alpha, alpha + 1.0)?;
        let scale = parity(n as i64 + 1) * (ln_gamma(2.0 * alpha + 1.0)?).exp()
            / (2.0_f64.powf(alpha - 1.0) * PI)
            * ratio;
        let bracket = PI * cos_pi(alpha)
            + sin_pi(alpha)
                * (2.0 * digamma_any(2.0 * alpha + 1.0)
                    - LN_2
                    - digamma_any(nf + alpha + 1.0)
                    - digamma_any(nf - alpha));
        Ok(scale * bracket)
    } else {
        let base = power_endpoint_exact(alpha, n)?;
        let bracket = LN_2 + digamma_any(alpha + 1.0) + digamma_any(alpha + 0.5)
            - digamma_any(alpha - nf + 1.0)
            - digamma_any(alpha + nf + 1.0);
        Ok(base * bracket)
    }
}

/// Leading-order asymptotic coefficient for large n.
pub fn coeff_asymptotic(fam: &SingularFamily, n: u32) -> Result<f64> {
    fam.validate()?;
    if n == 0 {
        return Err(Error::Unsupported("asymptotics start at mode n = 1".into()));
    }
    let nf = n as f64;
    match fam {
        SingularFamily::PowerInterior { alpha, theta } => {
            if *theta != 0.0 {
                return Err(Error::Unsupported(
                    "interior asymptotics are only available at θ = 0".into(),
                ));
            }
            if n % 2 == 1 {
                return Ok(0.0);
            }
            let k = nf / 2.0;
            Ok(parity(n as i64 / 2 + 1) * sin_pi(0.5 * alpha) * (ln_gamma(alpha + 1.0)?).exp()
                / (2.0_f64.powf(alpha - 1.0) * PI)
                * k.powf(-alpha - 1.0))
        }
        SingularFamily::PowerLogInterior { alpha, theta } => {
            if *theta != 0.0 {
                return Err(Error::Unsupported(
                    "interior asymptotics are only available at θ = 0".into(),
                ));
            }
            if n % 2 == 1 {
                return Ok(0.0);
            }
            let k = nf / 2.0;
            let scale = parity(n as i64 / 2 + 1) * (ln_gamma(alpha + 1.0)?).exp()
                / (2.0_f64.powf(alpha - 1.0) * PI)
                * k.powf(-alpha - 1.0);
            let bracket = 0.5 * PI * cos_pi(0.5 * alpha)
                + sin_pi(0.5 * alpha) * (digamma_any(alpha + 1.0) - LN_2 - k.ln());
            Ok(scale * bracket)
        }
        SingularFamily::PowerEndpoint { alpha, end } => {
            let v = parity(n as i64 + 1) * sin_pi(*alpha) * (ln_gamma(2.0 * alpha + 1.0)?).exp()
                / (2.0_f64.powf(alpha - 1.0) * PI)
                * nf.powf(-2.0 * alpha - 1.0);
            Ok(end_sign(*end, n) * v)
        }
        SingularFamily::PowerLogEndpoint { alpha, end } => {
            let scale = parity(n as i64 + 1) * (ln_gamma(2.0 * alpha + 1.0)?).exp()
                / (2.0_f64.powf(alpha - 1.0) * PI)
                * nf.powf(-2.0 * alpha - 1.0);
            let bracket = PI * cos_pi(*alpha)
                + sin_pi(*alpha) * (2.0 * digamma_any(2.0 * alpha + 1.0) - LN_2 - 2.0 * nf.ln());
            Ok(end_sign(*end, n) * scale * bracket)
        }
        SingularFamily::PowerTimesSmooth { alpha, end, taylor } => {
            let v = taylor[0] * parity(n as i64 + 1) * sin_pi(*alpha)
                * (ln_gamma(2.0 * alpha + 1.0)?).exp()
                / (2.0_f64.powf(alpha - 1.0) * PI)
                * nf.powf(-2.0 * alpha - 1.0);
            Ok(end_sign(*end, n) * v)
        }
    }
}

/// Coefficients 0..=n_max for the family by the requested method. Exact
/// series backfill the few modes below each formula's validity range
/// from the quadrature oracle so partial sums are always complete.
pub fn coeff_series(fam: &SingularFamily, n_max: u32, method: CoeffMethod) -> Result<CoeffSeries> {
    fam.validate()?;
    let mut values = Vec::with_capacity(n_max as usize + 1);
    match method {
        CoeffMethod::Quadrature => {
            for n in 0..=n_max {
                values.push(coeff_quadrature_family(fam, n)?);
            }
        }
        CoeffMethod::Asymptotic => {
            for n in 0..=n_max {
                values.push(coeff_asymptotic(fam, n).unwrap_or(f64::NAN));
            }
        }
        CoeffMethod::Exact => {
            if let SingularFamily::PowerInterior { alpha, theta } = fam {
                return power_interior_exact_series(*alpha, *theta, n_max);
            }
            let floor = exact_floor(fam)?;
            for n in 0..=n_max {
                if n < floor {
                    values.push(coeff_quadrature_family(fam, n)?);
                } else {
                    values.push(coeff_exact(fam, n)?);
                }
            }
        }
    }
    Ok(CoeffSeries::new(values, method))
}

/// First mode covered by the family's closed form; quadrature fills below.
fn exact_floor(fam: &SingularFamily) -> Result<u32> {
    match fam {
        SingularFamily::PowerInterior { alpha, .. } => Ok((alpha + 1.0).ceil() as u32),
        SingularFamily::PowerLogInterior { alpha, theta } => {
            if *theta != 0.0 {
                return Err(Error::Unsupported(
                    "power-log interior closed form is only available at θ = 0".into(),
                ));
            }
            Ok((alpha + 1.0).ceil() as u32)
        }
        _ => Ok(0),
    }
}

/// One degree-ladder sweep per side instead of per-coefficient ladders.
fn power_interior_exact_series(alpha: f64, theta: f64, n_max: u32) -> Result<CoeffSeries> {
    let sigma = alpha + 1.0;
    let n_min = (alpha + 1.0).ceil() as u32;
    let mut values = Vec::with_capacity(n_max as usize + 1);
    for n in 0..n_min.min(n_max + 1) {
        values.push(coeff_quadrature_family(
            &SingularFamily::PowerInterior { alpha, theta },
            n,
        )?);
    }
    if n_max >= n_min {
        let count = (n_max - n_min + 1) as usize;
        let gamma_a1 = (ln_gamma(alpha + 1.0)?).exp();
        if alpha == alpha.floor() {
            let deg0 = n_min as f64 - alpha - 1.0;
            let seq = gegenbauer_sequence(deg0 as u32 + count as u32 - 1, sigma, theta);
            let coef =
                gamma_a1 * 2.0 / (PI.sqrt() * 2.0_f64.powf(alpha) * (ln_gamma(sigma + 0.5)?).exp());
            for j in 0..count {
                values.push(coef * seq[deg0 as usize + j] * omega(sigma, theta));
            }
        } else {
            let nu0 = n_min as f64 - sigma;
            let right = ggf_sequence(Side::Right, nu0, sigma, theta, count, 1e-13)?;
            let left = ggf_sequence(Side::Left, nu0, sigma, theta, count, 1e-13)?;
            let sign_a = parity(alpha.floor() as i64);
            let cs = c_sigma(sigma)? * gamma_a1 * omega(sigma, theta);
            for j in 0..count {
                values.push(cs * (right[j] + sign_a * left[j]));
            }
        }
    }
    Ok(CoeffSeries::new(values, CoeffMethod::Exact))
}

/// Clenshaw evaluation of the primed partial sum Σ'_{n≤N} û_n T_n(x).
pub fn partial_sum(series: &CoeffSeries, n_trunc: usize, x: f64) -> Result<f64> {
    if n_trunc > series.n_max() {
        return Err(Error::InvalidInput(format!(
            "partial sum through n = {n_trunc} needs coefficients 0..={n_trunc}, have 0..={}",
            series.n_max()
        )));
    }
    let c = &series.values;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for k in (1..=n_trunc).rev() {
        let b = c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    Ok(0.5 * c[0] + x * b1 - b2)
}

/// Norm in which a truncation error is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorNorm {
    SupGrid,
    L2ChebWeight,
}

/// Measured truncation error of π_N. The sup norm walks a 4096-point
/// Chebyshev-clustered grid; the L²_ω norm sums the reference tail
/// (π/2) Σ_{n>N} û_n² from the longer series provided.
pub fn measured_error<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    series: &CoeffSeries,
    n_trunc: usize,
    norm: ErrorNorm,
) -> Result<f64> {
    if n_trunc > series.n_max() {
        return Err(Error::InvalidInput(
            "truncation order exceeds the series length".into(),
        ));
    }
    match norm {
        ErrorNorm::SupGrid => {
            let m = 4096;
            let mut worst = 0.0f64;
            for j in 0..m {
                let x = (PI * j as f64 / (m - 1) as f64).cos();
                let e = (f(x) - partial_sum(series, n_trunc, x)?).abs();
                worst = worst.max(e);
            }
            Ok(worst)
        }
        ErrorNorm::L2ChebWeight => {
            let mut acc = 0.0;
            for n in (n_trunc + 1)..=series.n_max() {
                acc += series.values[n] * series.values[n];
            }
            Ok((0.5 * PI * acc).sqrt())
        }
    }
}

/// Side-wise fractional data of a function u around θ: the RL fractional
/// derivatives of u^{(m)} on each side and the boundary values of the
/// (1-s)-integrals at θ∓.
pub struct FracData<'a> {
    pub index: FracIndex,
    pub d_left: Option<&'a dyn Fn(f64) -> f64>,
    pub d_right: Option<&'a dyn Fn(f64) -> f64>,
    pub c_left: f64,
    pub c_right: f64,
}

/// Coefficient identity: for u described by `data`,
/// û_n = -C_σ { ∫_{-1}^θ D_l ˡG ω dx + C_l (ˡG ω)(θ)
///              - ∫_θ^1 D_r ʳG ω dx - C_r (ʳG ω)(θ) },
/// with G = G_{n-σ}^{(σ)} and C_σ = 1/(√π 2^{σ-1} Γ(σ+1/2)).
pub fn coeff_identity_frac(data: &FracData, n: u32, tol: f64) -> Result<f64> {
    let sigma = data.index.sigma();
    let nf = n as f64;
    if !(nf >= sigma && sigma > 0.5) {
        return Err(Error::Domain(format!(
            "identity needs n ≥ m+s > 1/2, got n = {n}, m+s = {sigma}"
        )));
    }
    let theta = data.index.theta;
    let nu = nf - sigma;
    let right = GgfParams::right(nu, sigma)?;
    let left = GgfParams::left(nu, sigma)?;
    let g_left = |x: f64| omega(sigma, x) * ggf_eval(&left, x, 1e-12).unwrap_or(f64::NAN);
    let g_right = |x: f64| omega(sigma, x) * ggf_eval(&right, x, 1e-12).unwrap_or(f64::NAN);

    let mut brace = data.c_left * g_left(theta) - data.c_right * g_right(theta);
    if let Some(d) = data.d_left {
        let f = |x: f64| d(x) * g_left(x);
        brace += adaptive(&f, -1.0, theta, tol, 1 << 20)?;
    }
    if let Some(d) = data.d_right {
        let f = |x: f64| d(x) * g_right(x);
        brace -= adaptive(&f, theta, 1.0, tol, 1 << 20)?;
    }
    Ok(-c_sigma(sigma)? * brace)
}

/// Input to [`seminorm`]: a catalogued family or explicit fractional data.
pub enum SeminormInput<'a> {
    Family(&'a SingularFamily),
    Data(&'a FracData<'a>),
}

/// Semi-norm U^{m,s}_θ: L¹ norms of the side-wise RL fractional
/// derivatives of u^{(m)} plus the two boundary values of the
/// (1-s)-integrals (Gegenbauer-weighted variant for m = 0).
pub fn seminorm(input: &SeminormInput, m: u32, s: f64) -> Result<f64> {
    if m == 0 {
        if !(s > 0.5 && s < 1.0) {
            return Err(Error::Domain(format!(
                "the m = 0 semi-norm needs s ∈ (1/2, 1), got {s}"
            )));
        }
    } else if !(s > 0.0 && s <= 1.0) {
        return Err(Error::Domain(format!("semi-norm needs s ∈ (0, 1], got {s}")));
    }
    let sigma = m as f64 + s;
    match input {
        SeminormInput::Data(d) => {
            let theta = d.index.theta;
            let w = |x: f64| -> f64 {
                if m == 0 {
                    omega(0.5 * s, x)
                } else {
                    1.0
                }
            };
            let mut u = (d.c_left.abs() + d.c_right.abs()) * w(theta);
            if let Some(f) = d.d_left {
                let g = |x: f64| f(x).abs() * w(x);
                u += adaptive(&g, -1.0, theta, 1e-10, 1 << 20)?;
            }
            if let Some(f) = d.d_right {
                let g = |x: f64| f(x).abs() * w(x);
                u += adaptive(&g, theta, 1.0, 1e-10, 1 << 20)?;
            }
            Ok(u)
        }
        SeminormInput::Family(fam) => seminorm_family(fam, m, s, sigma),
    }
}

/// ∫₀^len |g(t)| dt where |g| ~ t^p (p > -1) at t = 0; the substitution
/// t = len·u^K flattens the singular end before the panels see it.
fn abs_integral_from_singularity<F: Fn(f64) -> f64>(
    g: F,
    len: f64,
    p: f64,
    tol: f64,
) -> Result<f64> {
    let k = (2.0 / (1.0 + p)).ceil().clamp(1.0, 64.0);
    let f = |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        g(len * u.powf(k)).abs() * len * k * u.powf(k - 1.0)
    };
    adaptive(&f, 0.0, 1.0, tol, 1 << 20)
}

fn seminorm_family(fam: &SingularFamily, m: u32, s: f64, sigma: f64) -> Result<f64> {
    fam.validate()?;
    match fam {
        SingularFamily::PowerInterior { alpha, theta } => {
            let gamma_a1 = (ln_gamma(alpha + 1.0)?).exp();
            if (sigma - (alpha + 1.0)).abs() < 1e-12 {
                // the fractional derivatives vanish; only the two
                // boundary constants Γ(α+1) remain
                if m == 0 {
                    return Ok(2.0 * (1.0 - theta * theta).powf(0.5 * alpha) * gamma_a1);
                }
                return Ok(2.0 * gamma_a1);
            }
            if sigma > alpha + 1.0 {
                return Err(Error::Domain(format!(
                    "|x-θ|^α lies outside the index m+s = {sigma} > α+1"
                )));
            }
            // D^s u^{(m)} = ±Γ(α+1)/Γ(α+1-σ) |x-θ|^{α-σ}; boundary terms vanish
            let coef = gamma_ratio(*alpha, 1.0, 1.0 - sigma)?.abs();
            if m == 0 {
                let right = abs_integral_from_singularity(
                    |t| t.powf(alpha - sigma) * omega(0.5 * s, theta + t),
                    1.0 - theta,
                    alpha - sigma,
                    1e-9,
                )?;
                let left = abs_integral_from_singularity(
                    |t| t.powf(alpha - sigma) * omega(0.5 * s, theta - t),
                    1.0 + theta,
                    alpha - sigma,
                    1e-9,
                )?;
                Ok(coef * (left + right))
            } else {
                let p = alpha + 1.0 - sigma;
                Ok(coef * ((1.0 - theta).powf(p) + (1.0 + theta).powf(p)) / p)
            }
        }
        SingularFamily::PowerLogInterior { alpha, theta } => {
            if !(sigma < alpha + 1.0) {
                return Err(Error::Domain(format!(
                    "|x-θ|^α ln|x-θ| needs m+s < α+1, got {sigma}"
                )));
            }
            let mf = m as f64;
            let d_am = gamma_ratio(*alpha, 1.0, 1.0 - mf)?;
            let f_am = log_derivative_tail(*alpha, m)?;
            let spec = RlSpec::new(RlSide::LeftFromA, s, 0.0)?;
            // |D^s u^{(m)}| as a function of the distance t from θ
            let a_of = move |t: f64| -> f64 {
                let log_part = rl_power_log_derivative(&spec, alpha - mf, t).unwrap_or(f64::NAN);
                let pow_part = gamma_ratio(alpha - mf, 1.0, 1.0 - s).unwrap_or(f64::NAN)
                    * t.powf(alpha - mf - s);
                (d_am * log_part + f_am * pow_part).abs()
            };
            // ω_{1/2} ≡ 1, so the m ≥ 1 case rides the same expression
            let wexp = if m == 0 { 0.5 * s } else { 0.5 };
            let right = abs_integral_from_singularity(
                |t| a_of(t) * omega(wexp, theta + t),
                1.0 - theta,
                alpha - mf - s,
                1e-9,
            )?;
            let left = abs_integral_from_singularity(
                |t| a_of(t) * omega(wexp, theta - t),
                1.0 + theta,
                alpha - mf - s,
                1e-9,
            )?;
            Ok(left + right)
        }
        SingularFamily::PowerEndpoint { alpha, end } => {
            let gamma_a1 = (ln_gamma(alpha + 1.0)?).exp();
            if (sigma - (alpha + 1.0)).abs() < 1e-12 {
                // single boundary constant; the m = 0 weight ω_{s/2}
                // vanishes at the endpoint where it is taken
                return Ok(if m == 0 { 0.0 } else { gamma_a1 });
            }
            if sigma > alpha + 1.0 {
                return Err(Error::Domain(format!(
                    "(1±x)^α lies outside the index m+s = {sigma} > α+1"
                )));
            }
            let coef = gamma_ratio(*alpha, 1.0, 1.0 - sigma)?.abs();
            if m == 0 {
                let x_of = |t: f64| match end {
                    End::Minus => -1.0 + t,
                    End::Plus => 1.0 - t,
                };
                let v = abs_integral_from_singularity(
                    |t| t.powf(alpha - sigma) * omega(0.5 * s, x_of(t)),
                    2.0,
                    alpha - sigma,
                    1e-9,
                )?;
                Ok(coef * v)
            } else {
                let p = alpha + 1.0 - sigma;
                Ok(coef * 2.0_f64.powf(p) / p)
            }
        }
        SingularFamily::PowerLogEndpoint { alpha, end } => {
            if !(sigma < alpha + 1.0) {
                return Err(Error::Domain(format!(
                    "(1±x)^α ln needs m+s < α+1, got {sigma}"
                )));
            }
            let mf = m as f64;
            let d_am = gamma_ratio(*alpha, 1.0, 1.0 - mf)?;
            let f_am = log_derivative_tail(*alpha, m)?;
            let spec = RlSpec::new(RlSide::LeftFromA, s, 0.0)?;
            let a_of = move |t: f64| -> f64 {
                let log_part = rl_power_log_derivative(&spec, alpha - mf, t).unwrap_or(f64::NAN);
                let pow_part = gamma_ratio(alpha - mf, 1.0, 1.0 - s).unwrap_or(f64::NAN)
                    * t.powf(alpha - mf - s);
                (d_am * log_part + f_am * pow_part).abs()
            };
            let x_of = |t: f64| match end {
                End::Minus => -1.0 + t,
                End::Plus => 1.0 - t,
            };
            abs_integral_from_singularity(
                |t| {
                    let w = if m == 0 { omega(0.5 * s, x_of(t)) } else { 1.0 };
                    a_of(t) * w
                },
                2.0,
                alpha - mf - s,
                1e-9,
            )
        }
        SingularFamily::PowerTimesSmooth { alpha, end, taylor } => {
            if sigma > alpha + 1.0 + 1e-12 {
                return Err(Error::Domain(format!(
                    "(1±x)^α g lies outside the index m+s = {sigma} > α+1"
                )));
            }
            let mf = m as f64;
            let exact_sigma = (sigma - (alpha + 1.0)).abs() < 1e-12;
            // only the l = 0 term leaves a boundary value when σ = α+1;
            // with the m = 0 weight it is taken where ω_{s/2} vanishes
            let boundary = if exact_sigma && m >= 1 {
                taylor[0].abs() * (ln_gamma(alpha + 1.0)?).exp()
            } else {
                0.0
            };
            // D^s u^{(m)} = Σ_l c_l · d_{α+l}^m · Γ(η+1)/Γ(η+1-s) t^{η-s},
            // η = α+l-m; the l = 0 term drops out when σ = α+1
            let coefs: Vec<f64> = taylor
                .iter()
                .enumerate()
                .take(13)
                .map(|(l, c)| {
                    let al = alpha + l as f64;
                    let eta = al - mf;
                    c * gamma_ratio(al, 1.0, 1.0 - mf).unwrap_or(0.0)
                        * gamma_ratio(eta, 1.0, 1.0 - s).unwrap_or(0.0)
                })
                .collect();
            let x_of = |t: f64| match end {
                End::Minus => -1.0 + t,
                End::Plus => 1.0 - t,
            };
            let v = abs_integral_from_singularity(
                |t| {
                    let mut acc = 0.0;
                    for (l, c) in coefs.iter().enumerate() {
                        let eta = alpha + l as f64 - mf;
                        acc += c * t.powf(eta - s);
                    }
                    let w = if m == 0 { omega(0.5 * s, x_of(t)) } else { 1.0 };
                    acc.abs() * w
                },
                2.0,
                alpha - mf - s,
                1e-9,
            )?;
            Ok(boundary + v)
        }
    }
}

/// f_α^m = Σ_{j=1}^m (-1)^{j-1} Γ(m+1) Γ(α+1) / (j Γ(m-j+1) Γ(α-m+j+1)),
/// the non-log companion coefficient in d^m/dx^m [t^α ln t].
fn log_derivative_tail(alpha: f64, m: u32) -> Result<f64> {
    let mut acc = 0.0;
    for j in 1..=m {
        let jf = j as f64;
        let falling = pochhammer(m as f64 - jf + 1.0, j); // m!/(m-j)!
        let ratio = gamma_ratio(alpha, 1.0, jf + 1.0 - m as f64)?;
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        acc += sign / jf * falling * ratio;
    }
    Ok(acc)
}


/// One row of the sign-calibration record for a family's closed form.
#[derive(Debug, Clone)]
pub struct SignCalibration {
    pub family: String,
    pub probe_n: u32,
    pub exact: f64,
    pub oracle: f64,
    pub signs_agree: bool,
    pub display_corrected: bool,
    pub note: &'static str,
}

/// Re-derives the per-family sign calibration against the quadrature
/// oracle at a small probe mode and reports where the implemented form
/// departs from the display convention it was taken from.
pub fn sign_calibration_report() -> Result<Vec<SignCalibration>> {
    let entries: Vec<(SingularFamily, u32, bool, &'static str)> = vec![
        (
            SingularFamily::PowerInterior { alpha: 1.0, theta: 0.0 },
            2,
            true,
            "origin reduction carries (-1)^{k+1}, not (-1)^k; oracle gives +4/(3π) at n = 2",
        ),
        (
            SingularFamily::PowerInterior { alpha: 1.5, theta: 0.3 },
            4,
            true,
            "relative sign between the right and left functions flipped to match the oracle",
        ),
        (
            SingularFamily::PowerLogInterior { alpha: 0.5, theta: 0.0 },
            4,
            true,
            "implemented as the α-derivative of the corrected power form",
        ),
        (
            SingularFamily::PowerEndpoint { alpha: 0.5, end: End::Minus },
            2,
            false,
            "sign convention confirmed by the oracle",
        ),
        (
            SingularFamily::PowerLogEndpoint { alpha: 0.5, end: End::Minus },
            3,
            false,
            "sign convention confirmed by the oracle",
        ),
        (
            SingularFamily::PowerTimesSmooth { alpha: 0.5, end: End::Minus, taylor: vec![1.0, 0.5] },
            3,
            false,
            "sign convention confirmed by the oracle",
        ),
    ];
    let mut out = Vec::new();
    for (fam, n, corrected, note) in entries {
        let exact = coeff_exact(&fam, n)?;
        let oracle = coeff_quadrature_family(&fam, n)?;
        out.push(SignCalibration {
            family: fam.label(),
            probe_n: n,
            exact,
            oracle,
            signs_agree: exact.signum() == oracle.signum(),
            display_corrected: corrected,
            note,
        });
    }
    Ok(out)
}
