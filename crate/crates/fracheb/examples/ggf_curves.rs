//! Evaluate Gegenbauer functions of fractional degree along the interval
//! and classify their endpoint behaviour.
//!
//! Run with: cargo run --release --example ggf_curves

use fracheb::ggf::{ggf_endpoint, ggf_eval, End, EndpointKind, GgfParams};

fn main() -> fracheb::Result<()> {
    // generalized Chebyshev functions (λ = 0): finite at both endpoints,
    // non-polynomial for fractional degree
    println!("degree ν = 1/2 and 3/2 alongside the degree-1 and -2 polynomials (λ = 0):");
    println!("{:>8} {:>14} {:>14} {:>14} {:>14}", "x", "ν=0.5", "ν=1", "ν=1.5", "ν=2");
    for i in 0..=10 {
        let x = -0.99 + 1.98 * i as f64 / 10.0;
        let mut row = format!("{x:>8.3}");
        for nu in [0.5, 1.0, 1.5, 2.0] {
            let p = GgfParams::right(nu, 0.0)?;
            row += &format!(" {:>14.8}", ggf_eval(&p, x, 1e-12)?);
        }
        println!("{row}");
    }

    // endpoint classification across the λ ranges
    println!("\nendpoint behaviour of ʳG_ν^(λ) at x = -1:");
    for (nu, lambda) in [(0.5, 0.0), (0.5, 0.25), (1.5, 0.5), (1.5, 1.3), (3.0, 1.3)] {
        let p = GgfParams::right(nu, lambda)?;
        let b = ggf_endpoint(&p, End::Minus)?;
        let kind = match b.kind {
            EndpointKind::Finite => format!("finite, value {:.6}", b.coefficient),
            EndpointKind::LogDivergent => {
                format!("~ {:.6} · ln(1+x)", b.coefficient)
            }
            EndpointKind::AlgebraicDivergent => format!(
                "~ {:.6} · ((1+x)/2)^({:.2})",
                b.coefficient,
                -b.exponent.unwrap_or(0.0)
            ),
        };
        println!("  ν = {nu:<4} λ = {lambda:<5} {kind}");
    }

    // the value at the regular endpoint is exactly 1
    let p = GgfParams::right(2.7, 0.9)?;
    println!(
        "\nʳG_2.7^(0.9) near x = 1: {:.12} (limit 1)",
        ggf_eval(&p, 1.0 - 1e-10, 1e-12)?
    );
    Ok(())
}
