//! Property tests for the identities that hold over ranges of
//! parameters rather than at hand-picked points.

use fracheb::cheb::{partial_sum, CoeffMethod, CoeffSeries};
use fracheb::ggf::{ggf_eval, GgfParams};
use fracheb::special::gamma::{gamma_ratio, ln_gamma, pochhammer};
use fracheb::special::hyp::{hyp2f1, Hyp2F1Args};
use fracheb::special::poly::chebyshev_t;
use proptest::prelude::*;

fn not_near_nonpositive_integer(x: f64) -> bool {
    x > 0.0 || (x - x.round()).abs() > 0.05
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hyp2f1_symmetric_in_a_b(
        a in -2.5f64..2.5,
        b in -2.5f64..2.5,
        c in 0.3f64..4.0,
        z in -0.9f64..0.9,
    ) {
        prop_assume!(not_near_nonpositive_integer(a) && not_near_nonpositive_integer(b));
        let lhs = hyp2f1(&Hyp2F1Args { a, b, c, z }, 1e-12).unwrap();
        let rhs = hyp2f1(&Hyp2F1Args { a: b, b: a, c, z }, 1e-12).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0));
    }

    #[test]
    fn hyp2f1_euler_transform(
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
        c in 0.4f64..3.5,
        z in 0.01f64..0.9,
    ) {
        prop_assume!(not_near_nonpositive_integer(a) && not_near_nonpositive_integer(b));
        prop_assume!(not_near_nonpositive_integer(c - a) && not_near_nonpositive_integer(c - b));
        let lhs = hyp2f1(&Hyp2F1Args { a, b, c, z }, 1e-12).unwrap();
        let rhs = (1.0 - z).powf(c - a - b)
            * hyp2f1(&Hyp2F1Args { a: c - a, b: c - b, c, z }, 1e-12).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
    }

    #[test]
    fn duplication_formula(z in 0.05f64..150.0) {
        let lhs = ln_gamma(2.0 * z).unwrap();
        let rhs = -0.5 * std::f64::consts::PI.ln()
            + (2.0 * z - 1.0) * std::f64::consts::LN_2
            + ln_gamma(z).unwrap()
            + ln_gamma(z + 0.5).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn pochhammer_recurrence(a in -5.0f64..5.0, j in 0u32..12) {
        let lhs = pochhammer(a, j + 1);
        let rhs = pochhammer(a, j) * (a + j as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn gamma_ratio_composes(z in 0.5f64..80.0, a in 0.0f64..2.0, b in 0.0f64..2.0) {
        let lhs = gamma_ratio(z, a, b).unwrap();
        let rhs = gamma_ratio(z, a, 0.0).unwrap() * gamma_ratio(z, 0.0, b).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1e-30));
    }

    #[test]
    fn ggf_reflection(nu in 0.05f64..8.0, lambda in -0.4f64..3.0, x in -0.95f64..0.95) {
        let right = GgfParams::right(nu, lambda).unwrap();
        let left = GgfParams::left(nu, lambda).unwrap();
        let lhs = ggf_eval(&right, -x, 1e-12).unwrap();
        let sign = if (nu.floor() as i64) % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = sign * ggf_eval(&left, x, 1e-12).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
    }

    #[test]
    fn clenshaw_matches_naive_sum(
        coeffs in proptest::collection::vec(-2.0f64..2.0, 1..12),
        x in -1.0f64..1.0,
    ) {
        let series = CoeffSeries::new(coeffs.clone(), CoeffMethod::Exact);
        let n = coeffs.len() - 1;
        let clenshaw = partial_sum(&series, n, x).unwrap();
        let naive: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let t = c * chebyshev_t(k as u32, x);
                if k == 0 { 0.5 * t } else { t }
            })
            .sum();
        prop_assert!((clenshaw - naive).abs() <= 1e-12 * naive.abs().max(1.0));
    }
}
