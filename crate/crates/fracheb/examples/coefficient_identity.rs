//! The exact coefficient identity: û_n assembled from side-wise
//! fractional data (RL derivatives of u^(m) plus two boundary constants)
//! agrees with the closed form, and the fractional semi-norm that scales
//! the bounds comes from the same data.
//!
//! Run with: cargo run --release --example coefficient_identity

use fracheb::bounds::bound_frac_coeff;
use fracheb::cheb::{
    coeff_exact, coeff_identity_frac, seminorm, FracData, FracIndex, SeminormInput,
    SingularFamily,
};
use fracheb::special::gamma::ln_gamma;

fn main() -> fracheb::Result<()> {
    let alpha = 1.5;
    let theta = 0.3;
    let fam = SingularFamily::PowerInterior { alpha, theta };

    // |x-θ|^α has vanishing fractional derivatives of u^(m) on both sides
    // of θ; all that remains are the boundary constants ±Γ(α+1)
    let m = 2u32;
    let s = alpha + 1.0 - m as f64;
    let gamma_a1 = (ln_gamma(alpha + 1.0)?).exp();
    let data = FracData {
        index: FracIndex::new(m, s, theta)?,
        d_left: None,
        d_right: None,
        c_left: gamma_a1, // (-1)^m Γ(α+1) with even m
        c_right: gamma_a1,
    };

    println!("|x - 0.3|^(3/2): identity route vs closed form:");
    println!("{:>4} {:>18} {:>18}", "n", "identity", "closed form");
    for n in [3u32, 4, 8, 16, 33] {
        let via_identity = coeff_identity_frac(&data, n, 1e-10)?;
        let closed = coeff_exact(&fam, n)?;
        println!("{n:>4} {via_identity:>18.12} {closed:>18.12}");
    }

    let u = seminorm(&SeminormInput::Family(&fam), m, s)?;
    println!("\nsemi-norm U^(m,s) = {u:.12} (analytic value 2Γ(α+1) = {:.12})", 2.0 * gamma_a1);

    println!("\ncoefficient bound from that semi-norm:");
    println!("{:>4} {:>14} {:>14} {:>8}", "n", "|û_n|", "bound", "ratio");
    for n in [3u32, 8, 32, 128] {
        let v = coeff_exact(&fam, n)?.abs();
        let b = bound_frac_coeff(m, s, u, n)?;
        println!("{n:>4} {v:>14.6e} {b:>14.6e} {:>8.4}", v / b);
    }
    Ok(())
}
