//! Measured truncation errors of Chebyshev partial sums against the
//! certified bounds: the sup-norm bound scaled by ‖u''‖_L¹, the weighted
//! L² bound scaled by the fractional semi-norm, and the N-independent
//! stability bound.
//!
//! Run with: cargo run --release --example truncation_bounds

use fracheb::bounds::{bound_frac_trunc, bound_int_trunc, TruncNorm};
use fracheb::cheb::{
    coeff_series, measured_error, partial_sum, seminorm, CoeffMethod, ErrorNorm, SeminormInput,
    SingularFamily,
};

fn main() -> fracheb::Result<()> {
    let theta = 0.5;
    let fam = SingularFamily::PowerInterior { alpha: 1.0, theta };
    let series = coeff_series(&fam, 600, CoeffMethod::Exact)?;
    let f = |x: f64| fam.eval(x);

    println!("|x - 1/2|, sup-norm error of the partial sum vs the certified bound:");
    println!("{:>6} {:>16} {:>16} {:>10}", "N", "measured", "bound", "ratio");
    for n in [16u32, 32, 64, 128, 256] {
        let e = measured_error(&f, &series, n as usize, ErrorNorm::SupGrid)?;
        let b = bound_int_trunc(1, &[0.0, 0.0, 2.0], n)?;
        println!("{n:>6} {e:>16.10e} {b:>16.10e} {:>10.4}", e / b);
    }

    println!("\n|x|^(3/2), weighted-L² error vs the fractional bound (m = 2, s = 1/2):");
    let fam = SingularFamily::PowerInterior { alpha: 1.5, theta: 0.0 };
    let series = coeff_series(&fam, 1200, CoeffMethod::Exact)?;
    let u = seminorm(&SeminormInput::Family(&fam), 2, 0.5)?;
    println!("semi-norm U = {u:.12}");
    let f = |x: f64| fam.eval(x);
    println!("{:>6} {:>16} {:>16} {:>10}", "N", "measured", "bound", "ratio");
    for n in [16u32, 32, 64, 128, 256] {
        let e = measured_error(&f, &series, n as usize, ErrorNorm::L2ChebWeight)?;
        let b = bound_frac_trunc(2, 0.5, u, n, TruncNorm::L2ChebWeight)?;
        println!("{n:>6} {e:>16.10e} {b:>16.10e} {:>10.4}", e / b);
    }

    println!("\npointwise check at x = 0.5, N = 200:");
    let fam = SingularFamily::PowerInterior { alpha: 1.0, theta };
    let series = coeff_series(&fam, 600, CoeffMethod::Exact)?;
    let p = partial_sum(&series, 200, 0.5)?;
    println!("  partial sum {p:.12}, function value {:.12}", fam.eval(0.5));
    Ok(())
}
