//! Riemann–Liouville fractional integrals and derivatives: closed forms
//! on the power and power-log families, a kernel-aware numerical RL
//! integral for general integrands, and the GGF-F transform identities
//! as checkable (lhs, rhs) pairs.

use crate::error::{Error, Result};
use crate::ggf::{ggf_eval, h_lambda, omega, GgfParams, Side};
use crate::quad::adaptive;
use crate::special::gamma::{digamma_any, gamma_ratio, ln_gamma};

/// Which side the operator anchors on: ₐI_x (left) integrates from the
/// anchor a up to x, ₓI_b (right) from x up to the anchor b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlSide {
    LeftFromA,
    RightToB,
}

/// Riemann–Liouville operator description: side, order s > 0, anchor.
#[derive(Debug, Clone, Copy)]
pub struct RlSpec {
    pub side: RlSide,
    pub order: f64,
    pub anchor: f64,
}

impl RlSpec {
    pub fn new(side: RlSide, order: f64, anchor: f64) -> Result<Self> {
        if !(order >= 0.0 && order.is_finite()) {
            return Err(Error::Domain(format!("RL order must be ≥ 0, got {order}")));
        }
        Ok(Self { side, order, anchor })
    }

    /// Signed distance from the anchor, positive inside the domain.
    fn dist(&self, x: f64) -> Result<f64> {
        let d = match self.side {
            RlSide::LeftFromA => x - self.anchor,
            RlSide::RightToB => self.anchor - x,
        };
        if d <= 0.0 {
            return Err(Error::Domain(format!(
                "x = {x} is not strictly on the operator side of the anchor {}",
                self.anchor
            )));
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlMode {
    Integral,
    Derivative,
}

/// RL integral/derivative of the pure power (x-a)^η (or (b-x)^η):
///   I^s: Γ(η+1)/Γ(η+s+1) (x-a)^{η+s}
///   D^s: Γ(η+1)/Γ(η-s+1) (x-a)^{η-s}, exactly 0 when η-s+1 ∈ {0,-1,...}.
pub fn rl_power(spec: &RlSpec, mode: RlMode, eta: f64, x: f64) -> Result<f64> {
    if !(eta > -1.0) {
        return Err(Error::Domain(format!("rl_power requires η > -1, got {eta}")));
    }
    let d = spec.dist(x)?;
    let s = spec.order;
    match mode {
        RlMode::Integral => Ok(gamma_ratio(eta, 1.0, s + 1.0)? * d.powf(eta + s)),
        RlMode::Derivative => {
            let ratio = gamma_ratio(eta, 1.0, 1.0 - s)?;
            if ratio == 0.0 {
                return Ok(0.0);
            }
            Ok(ratio * d.powf(eta - s))
        }
    }
}

/// RL integral of the power-log function (x-a)^η ln(x-a):
/// Γ(η+1)/Γ(η+s+1) [ln(x-a) + ψ(η+1) - ψ(η+s+1)] (x-a)^{η+s}, s ≥ 0.
pub fn rl_power_log(spec: &RlSpec, eta: f64, x: f64) -> Result<f64> {
    if !(eta > -1.0) {
        return Err(Error::Domain(format!("rl_power_log requires η > -1, got {eta}")));
    }
    let s = spec.order;
    let d = spec.dist(x)?;
    let ratio = gamma_ratio(eta, 1.0, s + 1.0)?;
    let bracket = d.ln() + digamma_any(eta + 1.0) - digamma_any(eta + s + 1.0);
    Ok(ratio * bracket * d.powf(eta + s))
}

/// RL derivative of (x-a)^η ln(x-a); same shape with s ↦ -s:
/// Γ(η+1)/Γ(η+1-s) [ln(x-a) + ψ(η+1) - ψ(η+1-s)] (x-a)^{η-s}.
/// Used by the semi-norm evaluation of the power-log families.
pub(crate) fn rl_power_log_derivative(spec: &RlSpec, eta: f64, x: f64) -> Result<f64> {
    if !(eta > -1.0) {
        return Err(Error::Domain(format!("η > -1 required, got {eta}")));
    }
    let s = spec.order;
    let d = spec.dist(x)?;
    if eta + 1.0 - s <= 0.0 && (eta + 1.0 - s) == (eta + 1.0 - s).floor() {
        return Err(Error::Pole(format!("ψ/Γ pole at η+1-s = {}", eta + 1.0 - s)));
    }
    let ratio = gamma_ratio(eta, 1.0, 1.0 - s)?;
    let bracket = d.ln() + digamma_any(eta + 1.0) - digamma_any(eta + 1.0 - s);
    Ok(ratio * bracket * d.powf(eta - s))
}

/// Numerical RL fractional integral of order s for a general integrand.
///
/// The substitution y = x ∓ d·t^{1/s} absorbs the (x-y)^{s-1} kernel
/// exactly, leaving (d^s/Γ(s+1)) ∫₀¹ f(x ∓ d t^{1/s}) dt; any remaining
/// algebraic singularity of f sits at t = 1 where the adaptive pass
/// bisects geometrically.
pub fn rl_numeric<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    spec: &RlSpec,
    x: f64,
    tol: f64,
) -> Result<f64> {
    let s = spec.order;
    if s == 0.0 {
        return Err(Error::Domain("numerical RL integral needs order s > 0".into()));
    }
    let d = spec.dist(x)?;
    let inv_s = 1.0 / s;
    let anchor = spec.anchor;
    // rounding can push the node onto the anchor itself, where f may be
    // singular; the sliver it represents has vanishing mass
    let g: Box<dyn Fn(f64) -> f64> = match spec.side {
        RlSide::LeftFromA => Box::new(move |t: f64| {
            let y = x - d * t.powf(inv_s);
            if y <= anchor {
                0.0
            } else {
                f(y)
            }
        }),
        RlSide::RightToB => Box::new(move |t: f64| {
            let y = x + d * t.powf(inv_s);
            if y >= anchor {
                0.0
            } else {
                f(y)
            }
        }),
    };
    let scale = d.powf(s) / (ln_gamma(s + 1.0)?).exp();
    let inner_tol = (tol / scale.max(1e-300)).min(1e-6).max(1e-14);
    let v = adaptive(g.as_ref(), 0.0, 1.0, inner_tol, 1 << 20)?;
    Ok(scale * v)
}

/// Which of the two transform identities to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityForm {
    Integral,
    Derivative,
}

/// GGF-F fractional transform identity as a checkable pair.
///
/// Integral form (ν ≥ s > 0, λ > -1/2):
///   lhs = RL s-integral toward the regular endpoint of ω_λ·G_ν^{(λ)},
///   rhs = ±h_λ^{(-s)} ω_{λ+s} G_{ν-s}^{(λ+s)},
/// with the sign (-1)^{⌊ν⌋+⌊ν-s⌋} on the left family.
///
/// Derivative form (λ > s - 1/2, ν ≥ 0):
///   lhs = RL s-derivative of the same product (finite differences of the
///   numerical (1-s)-integral), rhs = ±h_λ^{(s)} ω_{λ-s} G_{ν+s}^{(λ-s)}.
pub fn ggf_frac_identity(
    side: Side,
    nu: f64,
    lambda: f64,
    s: f64,
    x: f64,
    form: IdentityForm,
    tol: f64,
) -> Result<(f64, f64)> {
    if !(x.abs() < 1.0) {
        return Err(Error::Domain("identity point must satisfy |x| < 1".into()));
    }
    match form {
        IdentityForm::Integral => {
            if !(nu >= s && s > 0.0) {
                return Err(Error::Domain(format!(
                    "integral form needs ν ≥ s > 0, got ν = {nu}, s = {s}"
                )));
            }
            if !(lambda > -0.5) {
                return Err(Error::Domain("integral form needs λ > -1/2".into()));
            }
        }
        IdentityForm::Derivative => {
            if !(lambda > s - 0.5 && nu >= 0.0) {
                return Err(Error::Domain(format!(
                    "derivative form needs λ > s - 1/2 and ν ≥ 0, got λ = {lambda}, s = {s}"
                )));
            }
        }
    }
    let p = GgfParams::new(side, nu, lambda)?;
    let integrand = move |y: f64| -> f64 {
        if y.abs() >= 1.0 {
            return 0.0;
        }
        omega(lambda, y) * ggf_eval(&p, y, 1e-12).unwrap_or(f64::NAN)
    };
    let rl_side = match side {
        Side::Right => RlSide::RightToB,
        Side::Left => RlSide::LeftFromA,
    };
    let anchor = match side {
        Side::Right => 1.0,
        Side::Left => -1.0,
    };

    match form {
        IdentityForm::Integral => {
            let spec = RlSpec::new(rl_side, s, anchor)?;
            let lhs = rl_numeric(&integrand, &spec, x, tol)?;
            let shifted = GgfParams::new(side, nu - s, lambda + s)?;
            let mut rhs = h_lambda(lambda, -s)? * omega(lambda + s, x) * ggf_eval(&shifted, x, tol)?;
            if side == Side::Left {
                let k = nu.floor() as i64 + (nu - s).floor() as i64;
                if k.rem_euclid(2) == 1 {
                    rhs = -rhs;
                }
            }
            Ok((lhs, rhs))
        }
        IdentityForm::Derivative => {
            let lhs = if s == 1.0 {
                // ᴿD¹ is ∓d/dx of the product itself
                let h = 1e-6;
                let slope = (integrand(x + h) - integrand(x - h)) / (2.0 * h);
                match side {
                    Side::Right => -slope,
                    Side::Left => slope,
                }
            } else {
                let spec = RlSpec::new(rl_side, 1.0 - s, anchor)?;
                let h = 1e-5;
                let fp = rl_numeric(&integrand, &spec, x + h, (tol * 1e-2).max(1e-13))?;
                let fm = rl_numeric(&integrand, &spec, x - h, (tol * 1e-2).max(1e-13))?;
                let slope = (fp - fm) / (2.0 * h);
                match side {
                    Side::Right => -slope,
                    Side::Left => slope,
                }
            };
            let shifted = GgfParams::new(side, nu + s, lambda - s)?;
            let mut rhs = h_lambda(lambda, s)? * omega(lambda - s, x) * ggf_eval(&shifted, x, tol)?;
            if side == Side::Left {
                let k = nu.floor() as i64 + (nu + s).floor() as i64;
                if k.rem_euclid(2) == 1 {
                    rhs = -rhs;
                }
            }
            Ok((lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::gamma;

    #[test]
    fn power_formulas() {
        let spec = RlSpec::new(RlSide::LeftFromA, 0.5, 0.0).unwrap();
        // I^{1/2} of 1 at x = 1: Γ(1)/Γ(3/2) = 2/sqrt(π)
        let v = rl_power(&spec, RlMode::Integral, 0.0, 1.0).unwrap();
        assert!((v - 2.0 / std::f64::consts::PI.sqrt()).abs() < 1e-14);

        // D^s (x-a)^{s-1} = 0
        let v = rl_power(&spec, RlMode::Derivative, -0.5, 0.7).unwrap();
        assert_eq!(v, 0.0);

        // I^{1-s} (x-a)^{s-1} = Γ(s), constant in x
        let s = 0.3;
        let spec = RlSpec::new(RlSide::LeftFromA, 1.0 - s, 0.0).unwrap();
        for &x in &[0.2, 0.5, 0.9] {
            let v = rl_power(&spec, RlMode::Integral, s - 1.0, x).unwrap();
            assert!((v - gamma(s).unwrap()).abs() < 1e-13 * gamma(s).unwrap());
        }

        assert!(rl_power(&spec, RlMode::Integral, -1.2, 0.5).is_err());
    }

    #[test]
    fn power_log_formulas() {
        // s=1, η=0, a=0: ∫₀ˣ ln t dt = x(ln x - 1)
        let spec = RlSpec::new(RlSide::LeftFromA, 1.0, 0.0).unwrap();
        for &x in &[0.3, 0.8] {
            let v = rl_power_log(&spec, 0.0, x).unwrap();
            assert!((v - x * (x.ln() - 1.0)).abs() < 1e-14);
        }
        // s = 0 is the identity operator
        let spec = RlSpec::new(RlSide::LeftFromA, 0.0, 0.0).unwrap();
        let v = rl_power_log(&spec, 0.6, 0.5).unwrap();
        let expect = 0.5f64.powf(0.6) * 0.5f64.ln();
        assert!((v - expect).abs() < 1e-15);
    }

    #[test]
    fn power_log_matches_epsilon_limit() {
        // I^s {x^η ln x} = lim (I^s x^{η+ε} - I^s x^η)/ε, Richardson in ε
        let spec = RlSpec::new(RlSide::LeftFromA, 0.5, 0.0).unwrap();
        let (eta, x) = (0.5, 0.7);
        let closed = rl_power_log(&spec, eta, x).unwrap();
        let diff = |eps: f64| -> f64 {
            let up = rl_power(&spec, RlMode::Integral, eta + eps, x).unwrap();
            let dn = rl_power(&spec, RlMode::Integral, eta - eps, x).unwrap();
            (up - dn) / (2.0 * eps)
        };
        let d1 = diff(1e-4);
        let d2 = diff(5e-5);
        let richardson = (4.0 * d2 - d1) / 3.0;
        assert!((closed - richardson).abs() < 1e-6, "{closed} vs {richardson}");
    }

    #[test]
    fn power_log_derivative_closed_form() {
        // D^s (x^η ln x) computed two ways: closed form vs d/dx of I^{1-s}
        let s = 0.4;
        let eta = 0.9;
        let spec_d = RlSpec::new(RlSide::LeftFromA, s, 0.0).unwrap();
        let spec_i = RlSpec::new(RlSide::LeftFromA, 1.0 - s, 0.0).unwrap();
        let x = 0.6;
        let closed = rl_power_log_derivative(&spec_d, eta, x).unwrap();
        let h = 1e-6;
        let fd = (rl_power_log(&spec_i, eta, x + h).unwrap()
            - rl_power_log(&spec_i, eta, x - h).unwrap())
            / (2.0 * h);
        assert!((closed - fd).abs() < 1e-7 * closed.abs().max(1.0), "{closed} vs {fd}");
    }

    #[test]
    fn semigroup_on_powers() {
        // I^{s1} I^{s2} (x-a)^η = I^{s1+s2} (x-a)^η via the closed forms
        let (s1, s2, eta, x) = (0.3, 0.9, 0.25, 0.8);
        let then = RlSpec::new(RlSide::LeftFromA, s1, 0.0).unwrap();
        let combined = RlSpec::new(RlSide::LeftFromA, s1 + s2, 0.0).unwrap();
        // I^{s2} maps x^η to c·x^{η+s2}; apply I^{s1} to that power
        let c = gamma_ratio(eta, 1.0, s2 + 1.0).unwrap();
        let lhs = c * rl_power(&then, RlMode::Integral, eta + s2, x).unwrap();
        let rhs = rl_power(&combined, RlMode::Integral, eta, x).unwrap();
        assert!((lhs - rhs).abs() < 1e-14 * rhs.abs());
    }

    #[test]
    fn derivative_undoes_integral_on_powers() {
        let (s, eta, x) = (0.45, 0.3, 0.6);
        let spec = RlSpec::new(RlSide::LeftFromA, s, 0.0).unwrap();
        let c = gamma_ratio(eta, 1.0, s + 1.0).unwrap();
        let back = c * rl_power(&spec, RlMode::Derivative, eta + s, x).unwrap();
        let orig = x.powf(eta);
        assert!((back - orig).abs() < 1e-14 * orig.abs());
    }

    #[test]
    fn numeric_matches_closed_forms() {
        // f ≡ 1: (x-a)^s / Γ(s+1)
        for &s in &[0.25, 0.5, 0.9, 1.5] {
            let spec = RlSpec::new(RlSide::LeftFromA, s, 0.0).unwrap();
            let x = 0.8;
            let v = rl_numeric(&|_| 1.0, &spec, x, 1e-11).unwrap();
            let want = rl_power(&spec, RlMode::Integral, 0.0, x).unwrap();
            assert!((v - want).abs() < 1e-9, "s={s}: {v} vs {want}");
        }
        // f = (y-a)^{s-1} with order 1-s: Γ(s), constant in x
        let s = 0.6;
        let spec = RlSpec::new(RlSide::LeftFromA, 1.0 - s, 0.0).unwrap();
        let f = move |y: f64| y.powf(s - 1.0);
        for &x in &[0.4, 0.9] {
            let v = rl_numeric(&f, &spec, x, 1e-10).unwrap();
            assert!((v - gamma(s).unwrap()).abs() < 1e-8, "{v}");
        }
        // right-sided variant
        let spec = RlSpec::new(RlSide::RightToB, 0.5, 1.0).unwrap();
        let v = rl_numeric(&|_| 1.0, &spec, 0.2, 1e-11).unwrap();
        let want = rl_power(&spec, RlMode::Integral, 0.0, 0.2).unwrap();
        assert!((v - want).abs() < 1e-9);
    }

    #[test]
    fn transform_identity_integral_form() {
        for &(nu, lam, s, x) in &[
            (1.5, 0.3, 0.5, 0.0),
            (0.7, 1.0, 0.25, -0.5),
            (3.2, 2.0, 0.9, 0.6),
            (1.5, 1.0, 0.5, 0.3),
        ] {
            for &side in &[Side::Right, Side::Left] {
                let (lhs, rhs) =
                    ggf_frac_identity(side, nu, lam, s, x, IdentityForm::Integral, 1e-10).unwrap();
                assert!(
                    (lhs - rhs).abs() < 1e-8,
                    "side={side:?} ν={nu} λ={lam} s={s} x={x}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn transform_identity_floor_boundary_sign() {
        // ν - s an exact integer exercises the ⌊ν⌋+⌊ν-s⌋ sign resolution
        let (lhs, rhs) =
            ggf_frac_identity(Side::Left, 1.5, 1.0, 0.5, 0.2, IdentityForm::Integral, 1e-10)
                .unwrap();
        assert!((lhs - rhs).abs() < 1e-8, "{lhs} vs {rhs}");
        assert!(lhs.abs() > 1e-3, "test point should be nontrivial");
    }

    #[test]
    fn transform_identity_derivative_form() {
        // s = 1 reproduces the first-derivative relation
        let (lhs, rhs) =
            ggf_frac_identity(Side::Right, 1.5, 1.2, 1.0, 0.3, IdentityForm::Derivative, 1e-9)
                .unwrap();
        assert!((lhs - rhs).abs() < 1e-5 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
        // fractional order
        let (lhs, rhs) =
            ggf_frac_identity(Side::Right, 1.0, 1.0, 0.5, 0.2, IdentityForm::Derivative, 1e-9)
                .unwrap();
        assert!((lhs - rhs).abs() < 2e-5 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn boundary_degree_identity() {
        // ν = s: the shifted degree is 0 and the shifted function is 1
        let (nu, lam, s, x) = (0.5, 0.8, 0.5, 0.1);
        let (lhs, rhs) =
            ggf_frac_identity(Side::Right, nu, lam, s, x, IdentityForm::Integral, 1e-10).unwrap();
        let direct = h_lambda(lam, -s).unwrap() * omega(lam + s, x);
        assert!((rhs - direct).abs() < 1e-12 * direct.abs());
        assert!((lhs - rhs).abs() < 1e-8);
    }
}
