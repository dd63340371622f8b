//! The improved coefficient bound (plain-L¹ scale, parity-aware product)
//! against the two prior bounds (Chebyshev-weighted scale), for the kink
//! family |x-θ|.
//!
//! Run with: cargo run --release --example bound_comparison

use fracheb::bounds::{bound_int_coeff, bound_prior, bound_ratios, PriorBound};
use fracheb::cheb::{coeff_exact, SingularFamily};

fn main() -> fracheb::Result<()> {
    let theta = 0.5;
    let fam = SingularFamily::PowerInterior { alpha: 1.0, theta };
    let v_l = 2.0;
    let v_t = 2.0 / (1.0f64 - theta * theta).sqrt();

    println!("u = |x - 1/2| (m = 1, V_L = 2, V_T = 4/√3):");
    println!(
        "{:>4} {:>14} {:>14} {:>14} {:>14}",
        "n", "|û_n|", "improved", "product-form", "falling-fact."
    );
    for n in [2u32, 3, 4, 5, 10, 20, 50, 100] {
        let u = coeff_exact(&fam, n)?.abs();
        let imp = bound_int_coeff(1, v_l, n)?;
        let maj = bound_prior(PriorBound::Majidian, 1, v_t, n)?;
        let tre = bound_prior(PriorBound::Trefethen, 1, v_t, n)?;
        println!("{n:>4} {u:>14.6e} {imp:>14.6e} {maj:>14.6e} {tre:>14.6e}");
    }

    println!("\nratio curves (prior bound / improved bound):");
    for theta in [0.5, 0.8] {
        let rows = bound_ratios(theta, 2, 100)?;
        let first = &rows[0];
        let last = &rows[rows.len() - 1];
        println!(
            "  θ = {theta}: ratio₁ runs {:.4} → {:.4}, ratio₂ runs {:.4} → {:.4} (all > 1)",
            first.ratio_falling, last.ratio_falling, first.ratio_product, last.ratio_product
        );
    }
    println!("\nfull tables and SVG panels: fracheb figure --id 2");
    Ok(())
}
