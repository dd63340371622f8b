//! Generalised Gegenbauer functions of fractional degree (GGF-Fs).
//!
//! The right function of degree ν ≥ 0 and parameter λ > -1/2 is
//!   ʳG_ν^{(λ)}(x) = ₂F₁(-ν, ν+2λ; λ+1/2; (1-x)/2),
//! the left function is ˡG_ν^{(λ)}(x) = (-1)^{⌊ν⌋} ₂F₁(-ν, ν+2λ; λ+1/2; (1+x)/2).
//! Integer degrees reduce to Gegenbauer polynomials normalized to 1 at x = 1.
//!
//! Evaluation: integer degrees go through the polynomial recurrence; a
//! fractional degree ν = k + μ is reached by the same degree recurrence
//! (ν+2λ) G_{ν+1} = 2(ν+λ) x G_ν - ν G_{ν-1}
//! started from the two hypergeometric seeds of degrees μ and μ+1, which
//! keeps large degrees cheap and avoids the cancellation of the raw series.

use crate::error::{Error, Result};
use crate::special::gamma::{cos_pi, gamma_ratio, ln_gamma, sin_pi};
use crate::special::hyp::hyp2f1_zw;
use crate::special::poly::{gegenbauer_sequence, gegenbauer_unchecked};
use std::f64::consts::PI;

/// Which of the two GGF-F families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// An interval endpoint of [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Minus,
    Plus,
}

impl End {
    pub fn x(self) -> f64 {
        match self {
            End::Minus => -1.0,
            End::Plus => 1.0,
        }
    }
}

/// Parameters (side, ν, λ) of a GGF-F evaluation.
#[derive(Debug, Clone, Copy)]
pub struct GgfParams {
    pub side: Side,
    pub nu: f64,
    pub lambda: f64,
}

impl GgfParams {
    pub fn new(side: Side, nu: f64, lambda: f64) -> Result<Self> {
        if !(nu >= 0.0 && nu.is_finite()) {
            return Err(Error::Domain(format!("GGF-F degree must satisfy ν ≥ 0, got {nu}")));
        }
        if !(lambda > -0.5 && lambda.is_finite()) {
            return Err(Error::Domain(format!(
                "GGF-F parameter must satisfy λ > -1/2, got {lambda}"
            )));
        }
        Ok(Self { side, nu, lambda })
    }

    pub fn right(nu: f64, lambda: f64) -> Result<Self> {
        Self::new(Side::Right, nu, lambda)
    }

    pub fn left(nu: f64, lambda: f64) -> Result<Self> {
        Self::new(Side::Left, nu, lambda)
    }

    /// ⌊ν⌋ as used in the left-family sign.
    pub fn floor_nu(&self) -> i64 {
        self.nu.floor() as i64
    }
}

fn parity_sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Kernel F(ν, λ; (1-x̃)/2) = ₂F₁(-ν, ν+2λ; λ+1/2; (1-x̃)/2), with both
/// the argument and its complement formed directly from x̃ so endpoint
/// distances survive intact.
fn kernel(nu: f64, lambda: f64, x_tilde: f64, tol: f64) -> Result<f64> {
    if nu == nu.floor() {
        return Ok(gegenbauer_unchecked(nu as u32, lambda, x_tilde));
    }
    let k = nu.floor();
    let mu = nu - k;
    let z = 0.5 * (1.0 - x_tilde);
    let w = 0.5 * (1.0 + x_tilde);
    let seed = |deg: f64| -> Result<f64> {
        hyp2f1_zw(-deg, deg + 2.0 * lambda, lambda + 0.5, z, w, tol)
    };
    if k == 0.0 {
        return seed(mu);
    }
    let mut gm1 = seed(mu)?;
    let mut g = seed(mu + 1.0)?;
    let mut d = mu + 1.0;
    while d < nu - 0.5 {
        let next = (2.0 * (d + lambda) * x_tilde * g - d * gm1) / (d + 2.0 * lambda);
        gm1 = g;
        g = next;
        d += 1.0;
    }
    Ok(g)
}

/// ʳG or ˡG at a strictly interior point, |x| < 1.
pub fn ggf_eval(p: &GgfParams, x: f64, tol: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "ggf_eval needs |x| < 1 (endpoints via ggf_endpoint), got {x}"
        )));
    }
    match p.side {
        Side::Right => kernel(p.nu, p.lambda, x, tol),
        Side::Left => {
            let f = kernel(p.nu, p.lambda, -x, tol)?;
            Ok(parity_sign(p.floor_nu()) * f)
        }
    }
}

/// Values of the whole degree ladder ν₀, ν₀+1, ..., ν₀+count-1 at one x.
/// One recurrence sweep; the workhorse behind coefficient sweeps.
pub fn ggf_sequence(
    side: Side,
    nu0: f64,
    lambda: f64,
    x: f64,
    count: usize,
    tol: f64,
) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if !(nu0 >= 0.0) || !(lambda > -0.5) {
        return Err(Error::Domain("ggf_sequence: need ν₀ ≥ 0 and λ > -1/2".into()));
    }
    if !(x.abs() < 1.0) {
        return Err(Error::Domain("ggf_sequence: need |x| < 1".into()));
    }
    let xr = match side {
        Side::Right => x,
        Side::Left => -x,
    };
    let z = 0.5 * (1.0 - xr);
    let w = 0.5 * (1.0 + xr);
    let raw: Vec<f64> = if nu0 == nu0.floor() {
        let start = nu0 as u32;
        let seq = gegenbauer_sequence(start + count as u32 - 1, lambda, xr);
        seq[start as usize..].to_vec()
    } else {
        let mut out = Vec::with_capacity(count);
        let seed = |deg: f64| -> Result<f64> {
            hyp2f1_zw(-deg, deg + 2.0 * lambda, lambda + 0.5, z, w, tol)
        };
        let mut gm1 = seed(nu0)?;
        out.push(gm1);
        if count > 1 {
            let mut g = seed(nu0 + 1.0)?;
            out.push(g);
            let mut d = nu0 + 1.0;
            for _ in 2..count {
                let next = (2.0 * (d + lambda) * xr * g - d * gm1) / (d + 2.0 * lambda);
                gm1 = g;
                g = next;
                out.push(g);
                d += 1.0;
            }
        }
        out
    };
    match side {
        Side::Right => Ok(raw),
        Side::Left => Ok(raw
            .into_iter()
            .enumerate()
            .map(|(j, v)| parity_sign((nu0 + j as f64).floor() as i64) * v)
            .collect()),
    }
}

/// Closed-form value at x = 0 (requires λ ≥ 0):
/// ʳG_ν^{(λ)}(0) = sin(π(ν+1)/2) Γ(λ+1/2) Γ(ν/2+1/2) / (√π Γ(ν/2+λ+1/2)).
pub fn ggf_at_zero(p: &GgfParams) -> Result<f64> {
    if p.lambda < 0.0 {
        return Err(Error::Domain("ggf_at_zero requires λ ≥ 0".into()));
    }
    let nu = p.nu;
    let ratio = gamma_ratio(0.5 * nu, 0.5, 0.5 + p.lambda)?;
    let right = sin_pi(0.5 * (nu + 1.0)) * (ln_gamma(p.lambda + 0.5)?).exp() / PI.sqrt() * ratio;
    Ok(match p.side {
        Side::Right => right,
        Side::Left => parity_sign(p.floor_nu()) * right,
    })
}

/// How a GGF-F behaves at an endpoint of [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndpointKind {
    Finite,
    LogDivergent,
    AlgebraicDivergent,
}

/// Endpoint classification. For the finite kind `coefficient` is the limit
/// value itself; for the log kind it multiplies ln(1∓x); for the algebraic
/// kind it is lim ((1∓x)/2)^{λ-1/2} G(x) and `exponent` = λ - 1/2.
#[derive(Debug, Clone, Copy)]
pub struct EndpointBehavior {
    pub kind: EndpointKind,
    pub coefficient: f64,
    pub exponent: Option<f64>,
}

/// Endpoint behaviour of the requested family member at x = ±1.
pub fn ggf_endpoint(p: &GgfParams, at: End) -> Result<EndpointBehavior> {
    let (nu, lambda) = (p.nu, p.lambda);
    if nu == nu.floor() {
        // polynomial case
        let value = match at {
            End::Plus => 1.0,
            End::Minus => parity_sign(nu as i64),
        };
        return Ok(EndpointBehavior {
            kind: EndpointKind::Finite,
            coefficient: value,
            exponent: None,
        });
    }
    // the end where the hypergeometric argument is 0: value ±1 exactly
    let regular = match p.side {
        Side::Right => End::Plus,
        Side::Left => End::Minus,
    };
    if at == regular {
        let value = match p.side {
            Side::Right => 1.0,
            Side::Left => parity_sign(p.floor_nu()),
        };
        return Ok(EndpointBehavior {
            kind: EndpointKind::Finite,
            coefficient: value,
            exponent: None,
        });
    }
    // singular end; left-family values carry the (-1)^{⌊ν⌋} factor
    let side_sign = match p.side {
        Side::Right => 1.0,
        Side::Left => parity_sign(p.floor_nu()),
    };
    if lambda < 0.5 {
        // cos((ν+λ)π)/cos(λπ); on the set ν+λ-1/2 ∈ ℕ₀ this is exactly 0,
        // which agrees with the Gauss value (1/Γ of a pole), so the same
        // expression covers that set too
        Ok(EndpointBehavior {
            kind: EndpointKind::Finite,
            coefficient: side_sign * cos_pi(nu + lambda) / cos_pi(lambda),
            exponent: None,
        })
    } else if lambda == 0.5 {
        Ok(EndpointBehavior {
            kind: EndpointKind::LogDivergent,
            coefficient: side_sign * sin_pi(nu) / PI,
            exponent: None,
        })
    } else {
        // lim ((1∓x)/2)^{λ-1/2} G = -sin(πν)/π Γ(λ-1/2)Γ(λ+1/2)Γ(ν+1)/Γ(ν+2λ)
        let ln = ln_gamma(lambda - 0.5)? + ln_gamma(lambda + 0.5)? + ln_gamma(nu + 1.0)?
            - ln_gamma(nu + 2.0 * lambda)?;
        Ok(EndpointBehavior {
            kind: EndpointKind::AlgebraicDivergent,
            coefficient: side_sign * (-sin_pi(nu) / PI) * ln.exp(),
            exponent: Some(lambda - 0.5),
        })
    }
}

/// Uniform-bound constant κ_ν^{(λ)} for ω_λ |G|, λ ≥ 1:
/// (Γ(λ+1/2)/√π) [cos²(πν/2) r₁² + 4 sin²(πν/2)/(2λ-1+ν(ν+2λ)) r₂²]^{1/2}
/// with r₁ = Γ((ν+1)/2)/Γ((ν+1)/2+λ), r₂ = Γ(ν/2+1)/Γ(ν/2+λ).
pub fn kappa(nu: f64, lambda: f64) -> Result<f64> {
    if !(lambda >= 1.0) {
        return Err(Error::Domain(format!("kappa requires λ ≥ 1, got {lambda}")));
    }
    if !(nu >= 0.0) {
        return Err(Error::Domain(format!("kappa requires ν ≥ 0, got {nu}")));
    }
    let r1 = gamma_ratio(0.5 * (nu + 1.0), 0.0, lambda)?;
    let r2 = gamma_ratio(0.5 * nu, 1.0, lambda)?;
    let rho = 2.0 * lambda - 1.0 + nu * (nu + 2.0 * lambda);
    let c = cos_pi(0.5 * nu);
    let s = sin_pi(0.5 * nu);
    let inner = c * c * r1 * r1 + 4.0 * s * s / rho * (r2 * r2);
    Ok((ln_gamma(lambda + 0.5)?).exp() / PI.sqrt() * inner.sqrt())
}

/// Uniform-bound constant κ̂_ν^{(λ)} for (1-x²)^{λ/2} |G|, 0 < λ < 1.
pub fn kappa_hat(nu: f64, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain(format!(
            "kappa_hat requires 0 < λ < 1, got {lambda}"
        )));
    }
    if !(nu >= 0.0) {
        return Err(Error::Domain(format!("kappa_hat requires ν ≥ 0, got {nu}")));
    }
    let r1 = gamma_ratio(0.5 * nu, 0.5, 0.5 + lambda)?;
    let r2 = gamma_ratio(0.5 * nu, 1.0, lambda)?;
    let rho = nu * nu + 2.0 * lambda * nu + lambda;
    let c = cos_pi(0.5 * nu);
    let s = sin_pi(0.5 * nu);
    let inner = c * c * r1 * r1 + 4.0 * s * s / rho * (r2 * r2);
    Ok((ln_gamma(lambda + 0.5)?).exp() / PI.sqrt() * inner.sqrt())
}

/// Weight attached to a GGF-F evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// ω_λ(x) = (1-x²)^{λ-1/2}
    GegenbauerWLambda,
    /// (1-x²)^{λ/2}
    HalfPower,
}

impl Weight {
    fn power(self, lambda: f64) -> f64 {
        match self {
            Weight::GegenbauerWLambda => lambda - 0.5,
            Weight::HalfPower => 0.5 * lambda,
        }
    }
}

/// Weighted evaluation w(x)·G(x) on the closed interval; endpoint values
/// are the appropriate limits (0 whenever the weight dominates).
pub fn weighted_ggf(p: &GgfParams, x: f64, weight: Weight, tol: f64) -> Result<f64> {
    if x.abs() > 1.0 {
        return Err(Error::Domain(format!("weighted_ggf needs |x| ≤ 1, got {x}")));
    }
    let wp = weight.power(p.lambda);
    if x.abs() < 1.0 {
        let one_minus_x2 = (1.0 - x) * (1.0 + x);
        return Ok(one_minus_x2.powf(wp) * ggf_eval(p, x, tol)?);
    }
    let end = if x > 0.0 { End::Plus } else { End::Minus };
    let behavior = ggf_endpoint(p, end)?;
    let limit = match behavior.kind {
        EndpointKind::Finite => {
            let v = behavior.coefficient;
            if wp > 0.0 {
                0.0
            } else if wp == 0.0 {
                v
            } else {
                v.signum() * f64::INFINITY
            }
        }
        EndpointKind::LogDivergent => {
            if wp > 0.0 {
                0.0
            } else {
                // coefficient · ln(dist) -> -∞ side
                -behavior.coefficient.signum() * f64::INFINITY
            }
        }
        EndpointKind::AlgebraicDivergent => {
            let e = behavior.exponent.unwrap_or(0.0);
            // w·G ~ coefficient · 2^{wp+e} · dist^{wp-e}
            if wp > e {
                0.0
            } else if wp == e {
                behavior.coefficient * 2.0_f64.powf(wp + e)
            } else {
                behavior.coefficient.signum() * f64::INFINITY
            }
        }
    };
    Ok(limit)
}

/// d/dx of the requested GGF-F. For ν ≥ 1 this is
/// ν(ν+2λ)/(2λ+1) · G_{ν-1}^{(λ+1)} of the same family; below degree 1 it
/// falls back to the term-wise derivative of the defining series.
pub fn ggf_derivative(p: &GgfParams, x: f64, tol: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Domain("ggf_derivative needs |x| < 1".into()));
    }
    let (nu, lambda) = (p.nu, p.lambda);
    if nu == 0.0 {
        return Ok(0.0);
    }
    let factor = nu * (nu + 2.0 * lambda) / (2.0 * lambda + 1.0);
    if nu >= 1.0 {
        let shifted = GgfParams { side: p.side, nu: nu - 1.0, lambda: lambda + 1.0 };
        return Ok(factor * ggf_eval(&shifted, x, tol)?);
    }
    let (z, w) = match p.side {
        Side::Right => (0.5 * (1.0 - x), 0.5 * (1.0 + x)),
        Side::Left => (0.5 * (1.0 + x), 0.5 * (1.0 - x)),
    };
    let f = hyp2f1_zw(1.0 - nu, nu + 2.0 * lambda + 1.0, lambda + 1.5, z, w, tol)?;
    Ok(match p.side {
        Side::Right => factor * f,
        // d/dx ˡG_ν = -(-1)^{⌊ν⌋} (chain rule on (1+x)/2); ⌊ν⌋ = 0 here
        Side::Left => -factor * f,
    })
}

/// h_λ^{(β)} = 2^β Γ(λ+1/2)/Γ(λ-β+1/2), the transform constant shared by
/// the fractional integral/derivative identities.
pub fn h_lambda(lambda: f64, beta: f64) -> Result<f64> {
    Ok(2.0_f64.powf(beta) * gamma_ratio(lambda, 0.5, 0.5 - beta)?)
}

/// Test/verification grid: `n` Chebyshev-distributed points plus `cluster`
/// points geometrically clustered within `dist` of each endpoint.
pub fn sup_grid(n: usize, cluster: usize, dist: f64) -> Vec<f64> {
    let mut g = Vec::with_capacity(n + 2 * cluster);
    for i in 0..n {
        g.push(-(PI * i as f64 / (n - 1) as f64).cos());
    }
    let mut d = dist;
    for _ in 0..cluster {
        g.push(-1.0 + d);
        g.push(1.0 - d);
        d *= 0.25;
    }
    g
}

pub(crate) fn omega(lambda: f64, x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).powf(lambda - 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::gamma;
    use crate::special::hyp::{hyp2f1, Hyp2F1Args};
    use crate::special::poly::gegenbauer;

    const TOL: f64 = 1e-12;

    #[test]
    fn polynomial_reduction() {
        // integer degrees reduce to recurrence Gegenbauer on a grid
        for &lam in &[0.0, 0.5, 1.0, 1.7] {
            for n in [0u32, 1, 2, 5, 11, 20] {
                let p = GgfParams::right(n as f64, lam).unwrap();
                for i in 0..=100 {
                    let x = -0.999 + 1.998 * i as f64 / 100.0;
                    let e = ggf_eval(&p, x, TOL).unwrap();
                    let g = gegenbauer(n, lam, x).unwrap();
                    assert!((e - g).abs() < 1e-10, "n={n} λ={lam} x={x}: {e} vs {g}");
                }
            }
        }
    }

    #[test]
    fn fractional_recurrence_consistent_with_series() {
        // ladder value at degree μ+k vs the direct hypergeometric series
        for &(nu, lam, x) in &[(2.3, 0.7, 0.4), (3.9, 0.0, -0.3), (5.5, 1.25, 0.1)] {
            let p = GgfParams::right(nu, lam).unwrap();
            let ladder = ggf_eval(&p, x, TOL).unwrap();
            let direct = hyp2f1(
                &Hyp2F1Args { a: -nu, b: nu + 2.0 * lam, c: lam + 0.5, z: 0.5 * (1.0 - x) },
                1e-13,
            )
            .unwrap();
            assert!(
                (ladder - direct).abs() < 1e-11 * direct.abs().max(1.0),
                "ν={nu} λ={lam} x={x}: {ladder} vs {direct}"
            );
        }
    }

    #[test]
    fn reflection_identity() {
        // ʳG_ν^{(λ)}(-x) = (-1)^{⌊ν⌋} ˡG_ν^{(λ)}(x)
        for &(nu, lam) in &[(0.5, 0.0), (1.7, 0.9), (4.2, 2.0)] {
            let r = GgfParams::right(nu, lam).unwrap();
            let l = GgfParams::left(nu, lam).unwrap();
            for &x in &[-0.8, -0.2, 0.3, 0.77] {
                let lhs = ggf_eval(&r, -x, TOL).unwrap();
                let rhs = parity_sign(nu.floor() as i64) * ggf_eval(&l, x, TOL).unwrap();
                assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn value_at_one_and_minus_one() {
        let p = GgfParams::right(0.5, 0.0).unwrap();
        // ʳG_{1/2}^{(0)} at -1: cos(0.5π)/cos(0) = 0. The approach is
        // O(√(1+x)), so the limit is read off by extrapolating in
        // √((1+x)/2) through the stated anchor x = -1 + 1e-10.
        let w1 = 0.5e-10_f64;
        let w2 = 0.25e-10_f64;
        let g1 = ggf_eval(&p, -1.0 + 2.0 * w1, TOL).unwrap();
        let g2 = ggf_eval(&p, -1.0 + 2.0 * w2, TOL).unwrap();
        let limit = (g2 * w1.sqrt() - g1 * w2.sqrt()) / (w1.sqrt() - w2.sqrt());
        assert!(limit.abs() < 1e-9, "{limit}");
        // point values decay at the √ rate
        assert!(g1.abs() < 2e-5 && g2.abs() < g1.abs(), "{g1} {g2}");
        // at the regular end a first-order extrapolation pins the value 1
        let z1 = 0.5e-10_f64;
        let f1 = ggf_eval(&p, 1.0 - 2.0 * z1, TOL).unwrap();
        let f2 = ggf_eval(&p, 1.0 - z1, TOL).unwrap();
        let limit = 2.0 * f2 - f1;
        assert!((limit - 1.0).abs() < 1e-9, "{limit}");
    }

    #[test]
    fn at_zero_closed_form() {
        for &(nu, lam) in &[(0.5, 0.0), (0.5, 0.5), (2.7, 1.3), (5.5, 0.2)] {
            let p = GgfParams::right(nu, lam).unwrap();
            let closed = ggf_at_zero(&p).unwrap();
            let direct = ggf_eval(&p, 0.0, TOL).unwrap();
            assert!(
                (closed - direct).abs() < 1e-12 * direct.abs().max(1.0),
                "ν={nu} λ={lam}: {closed} vs {direct}"
            );
        }
        // ν = 1 is an odd polynomial: value 0
        let p = GgfParams::right(1.0, 0.7).unwrap();
        assert!(ggf_at_zero(&p).unwrap().abs() < 1e-15);
        // ν = 0 is the constant 1
        let p = GgfParams::right(0.0, 1.3).unwrap();
        assert!((ggf_at_zero(&p).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn at_zero_half_parameter_example() {
        // ν = 1/2, λ = 1/2: sin(3π/4) Γ(1) Γ(3/4) / (√π Γ(5/4))
        let p = GgfParams::right(0.5, 0.5).unwrap();
        let got = ggf_at_zero(&p).unwrap();
        let want = (0.75 * PI).sin() * gamma(0.75).unwrap()
            / (PI.sqrt() * gamma(1.25).unwrap());
        assert!((got - want).abs() < 1e-14);
    }

    #[test]
    fn endpoint_classification() {
        // finite: ν=0.5, λ=0 at -1 -> cos(0.5π)/cos(0) = 0
        let p = GgfParams::right(0.5, 0.0).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        assert_eq!(e.kind, EndpointKind::Finite);
        assert!(e.coefficient.abs() < 1e-15);

        // log: ν=0.5, λ=0.5 at -1 -> sin(0.5π)/π = 1/π
        let p = GgfParams::right(0.5, 0.5).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        assert_eq!(e.kind, EndpointKind::LogDivergent);
        assert!((e.coefficient - 1.0 / PI).abs() < 1e-14);

        // polynomial: integer ν
        let p = GgfParams::right(3.0, 0.9).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        assert_eq!(e.kind, EndpointKind::Finite);
        assert_eq!(e.coefficient, -1.0);

        // on the set ν+λ-1/2 ∈ ℕ₀ the finite value is exactly 0
        let p = GgfParams::right(0.7, -0.2).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        assert_eq!(e.kind, EndpointKind::Finite);
        assert!(e.coefficient.abs() < 1e-15);
        // and the evaluation indeed sinks toward 0 near the endpoint
        let v = ggf_eval(&p, -1.0 + 1e-8, TOL).unwrap();
        assert!(v.abs() < 1e-4, "{v}");
    }

    #[test]
    fn endpoint_log_limit_matches_evaluation() {
        // near x = -1 with λ = 1/2: G ~ c·ln(1+x) + const, so the slope
        // between two near-endpoint samples pins the log coefficient
        let nu = 1.5;
        let p = GgfParams::right(nu, 0.5).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        let (x1, x2) = (-1.0 + 1e-8, -1.0 + 1e-10);
        let g1 = ggf_eval(&p, x1, TOL).unwrap();
        let g2 = ggf_eval(&p, x2, TOL).unwrap();
        let slope = (g1 - g2) / ((1.0 + x1).ln() - (1.0 + x2).ln());
        assert!(
            (slope - e.coefficient).abs() < 1e-6 * e.coefficient.abs(),
            "{slope} vs {}",
            e.coefficient
        );
    }

    #[test]
    fn endpoint_algebraic_limit_matches_evaluation() {
        let nu = 1.5_f64;
        let lam = 1.3_f64;
        let p = GgfParams::right(nu, lam).unwrap();
        let e = ggf_endpoint(&p, End::Minus).unwrap();
        assert_eq!(e.kind, EndpointKind::AlgebraicDivergent);
        let x = -1.0_f64 + 1e-10;
        let scaled = (0.5 * (1.0 + x)).powf(lam - 0.5) * ggf_eval(&p, x, TOL).unwrap();
        assert!(
            (scaled - e.coefficient).abs() < 1e-6 * e.coefficient.abs(),
            "{scaled} vs {}",
            e.coefficient
        );
    }

    #[test]
    fn kappa_examples() {
        assert!((kappa(0.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        // even integer degree: only the cosine branch survives
        let k = kappa(4.0, 1.7).unwrap();
        let first = (ln_gamma(1.7 + 0.5).unwrap()).exp() / PI.sqrt()
            * gamma_ratio(2.5, 0.0, 1.7).unwrap();
        assert!((k - first).abs() < 1e-14);
        assert!(kappa(1.0, 0.7).is_err());
        assert!(kappa_hat(1.0, 1.2).is_err());
    }

    #[test]
    fn uniform_bound_holds_on_grid() {
        let grid = sup_grid(2000, 10, 1e-8);
        for &(nu, lam) in &[(0.3, 1.0), (1.7, 1.3), (5.5, 2.0), (20.2, 3.5)] {
            let cap = kappa(nu, lam).unwrap() * (1.0 + 1e-10);
            let p = GgfParams::right(nu, lam).unwrap();
            for &x in &grid {
                let v = weighted_ggf(&p, x, Weight::GegenbauerWLambda, TOL).unwrap();
                assert!(v.abs() <= cap, "ν={nu} λ={lam} x={x}: {v} vs {cap}");
            }
        }
        for &(nu, lam) in &[(0.3, 0.2), (1.7, 0.5), (5.5, 0.9)] {
            let cap = kappa_hat(nu, lam).unwrap() * (1.0 + 1e-10);
            let p = GgfParams::right(nu, lam).unwrap();
            for &x in &grid {
                let v = weighted_ggf(&p, x, Weight::HalfPower, TOL).unwrap();
                assert!(v.abs() <= cap, "ν={nu} λ={lam} x={x}: {v} vs {cap}");
            }
        }
    }

    #[test]
    fn weighted_endpoint_limits() {
        // weight vanishes, function finite
        let p = GgfParams::right(1.3, 1.5).unwrap();
        assert_eq!(weighted_ggf(&p, 1.0, Weight::GegenbauerWLambda, TOL).unwrap(), 0.0);
        // (1-x²)^{1/2}·G_0^{(1)} at 0 is 1
        let p = GgfParams::right(0.0, 1.0).unwrap();
        assert!((weighted_ggf(&p, 0.0, Weight::GegenbauerWLambda, TOL).unwrap() - 1.0).abs() < 1e-15);
        // algebraic divergence balanced by the Gegenbauer weight: finite limit
        let p = GgfParams::right(1.5, 1.3).unwrap();
        let at = weighted_ggf(&p, -1.0, Weight::GegenbauerWLambda, TOL).unwrap();
        let near = weighted_ggf(&p, -1.0 + 1e-9, Weight::GegenbauerWLambda, TOL).unwrap();
        assert!((at - near).abs() < 1e-6 * at.abs().max(1e-6), "{at} vs {near}");
    }

    #[test]
    fn derivative_cases() {
        // T_1' = 1
        let p = GgfParams::right(1.0, 0.0).unwrap();
        assert!((ggf_derivative(&p, 0.4, TOL).unwrap() - 1.0).abs() < 1e-13);
        // T_2'(0.3) = 4·0.3
        let p = GgfParams::right(2.0, 0.0).unwrap();
        assert!((ggf_derivative(&p, 0.3, TOL).unwrap() - 1.2).abs() < 1e-12);
        // fractional degree against central differences
        for &(nu, lam, x) in &[(1.5, 0.5, 0.0), (0.7, 0.9, 0.25), (2.3, 0.0, -0.4)] {
            let p = GgfParams::right(nu, lam).unwrap();
            let d = ggf_derivative(&p, x, TOL).unwrap();
            let h = 1e-5;
            let fd = (ggf_eval(&p, x + h, TOL).unwrap() - ggf_eval(&p, x - h, TOL).unwrap())
                / (2.0 * h);
            assert!((d - fd).abs() < 1e-6 * d.abs().max(1.0), "ν={nu}: {d} vs {fd}");
        }
        // left family too
        let p = GgfParams::left(1.5, 0.5).unwrap();
        let d = ggf_derivative(&p, 0.2, TOL).unwrap();
        let h = 1e-5;
        let fd =
            (ggf_eval(&p, 0.2 + h, TOL).unwrap() - ggf_eval(&p, 0.2 - h, TOL).unwrap()) / (2.0 * h);
        assert!((d - fd).abs() < 1e-6 * d.abs().max(1.0));
    }

    #[test]
    fn jacobi_relation() {
        // P_n^{(λ*,-λ*)}(x)/P_n^{(λ*,-λ*)}(1) = ((1+x)/2)^{λ*} ʳG_{n-λ*}^{(λ)}(x)
        use crate::special::poly::jacobi_p;
        for &(lam, n) in &[(0.8, 3u32), (1.2, 5), (0.6, 8)] {
            let ls = lam - 0.5;
            let p = GgfParams::right(n as f64 - ls, lam).unwrap();
            for &x in &[-0.6, 0.0, 0.4, 0.9] {
                let lhs = jacobi_p(n, ls, -ls, x) / jacobi_p(n, ls, -ls, 1.0);
                let rhs = (0.5 * (1.0 + x)).powf(ls) * ggf_eval(&p, x, TOL).unwrap();
                assert!(
                    (lhs - rhs).abs() < 1e-9 * lhs.abs().max(1.0),
                    "λ={lam} n={n} x={x}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn kappa_component_inequality() {
        // 2/sqrt(2λ-1+ν(ν+2λ)) Γ(ν/2+1)/Γ(ν/2+λ) ≤ Γ((ν+1)/2)/Γ((ν+1)/2+λ)
        for &nu in &[0.0_f64, 0.3, 1.7, 5.5, 20.2, 77.0] {
            for &lam in &[1.0_f64, 1.3, 2.0, 3.5] {
                let lhs = 2.0 / (2.0 * lam - 1.0 + nu * (nu + 2.0 * lam)).sqrt()
                    * gamma_ratio(0.5 * nu, 1.0, lam).unwrap();
                let rhs = gamma_ratio(0.5 * (nu + 1.0), 0.0, lam).unwrap();
                assert!(lhs <= rhs * (1.0 + 1e-13), "ν={nu} λ={lam}");
            }
        }
    }
}
