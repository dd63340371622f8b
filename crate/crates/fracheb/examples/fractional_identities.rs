//! Riemann–Liouville fractional integrals of weighted GGF-Fs reduce to
//! parameter-shifted GGF-Fs; both sides of that transform are evaluated
//! independently and compared.
//!
//! Run with: cargo run --release --example fractional_identities

use fracheb::fractional::{
    ggf_frac_identity, rl_numeric, rl_power, rl_power_log, IdentityForm, RlMode, RlSide, RlSpec,
};
use fracheb::ggf::Side;

fn main() -> fracheb::Result<()> {
    println!("closed forms on the power family:");
    let spec = RlSpec::new(RlSide::LeftFromA, 0.5, 0.0)?;
    println!(
        "  I^(1/2) of 1 at x = 1:        {:.12}  (2/√π = {:.12})",
        rl_power(&spec, RlMode::Integral, 0.0, 1.0)?,
        2.0 / std::f64::consts::PI.sqrt()
    );
    println!(
        "  D^(1/2) of x^(-1/2):          {:.12}  (annihilated, like a constant)",
        rl_power(&spec, RlMode::Derivative, -0.5, 0.7)?
    );
    println!(
        "  I^(1/2) of x^(1/2) ln x at 0.7: {:.12}",
        rl_power_log(&spec, 0.5, 0.7)?
    );

    println!("\nkernel-aware quadrature vs the closed forms:");
    for s in [0.25, 0.5, 0.9] {
        let spec = RlSpec::new(RlSide::LeftFromA, s, 0.0)?;
        let numeric = rl_numeric(&|_| 1.0, &spec, 0.8, 1e-11)?;
        let closed = rl_power(&spec, RlMode::Integral, 0.0, 0.8)?;
        println!("  s = {s:<5} numeric {numeric:.12}  closed {closed:.12}");
    }

    println!("\ntransform pairs (lhs: RL quadrature, rhs: shifted GGF-F):");
    println!(
        "{:>6} {:>6} {:>6} {:>6} {:>16} {:>16} {:>10}",
        "side", "ν", "λ", "s", "lhs", "rhs", "|lhs-rhs|"
    );
    for (side, tag) in [(Side::Right, "right"), (Side::Left, "left")] {
        for (nu, lambda, s) in [(1.5, 0.3, 0.5), (0.7, 1.0, 0.25), (3.2, 2.0, 0.9)] {
            let (lhs, rhs) =
                ggf_frac_identity(side, nu, lambda, s, 0.2, IdentityForm::Integral, 1e-10)?;
            println!(
                "{tag:>6} {nu:>6} {lambda:>6} {s:>6} {lhs:>16.10} {rhs:>16.10} {:>10.2e}",
                (lhs - rhs).abs()
            );
        }
    }

    println!("\nderivative form at s = 1 (the classical derivative relation):");
    let (lhs, rhs) =
        ggf_frac_identity(Side::Right, 1.5, 1.2, 1.0, 0.3, IdentityForm::Derivative, 1e-9)?;
    println!("  lhs {lhs:.10}  rhs {rhs:.10}");
    Ok(())
}
