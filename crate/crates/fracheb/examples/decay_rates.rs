//! Fitted decay exponents of coefficient magnitudes: interior
//! singularities decay like n^-(α+1), endpoint singularities gain a full
//! power α and decay like n^-(2α+1); even integer α removes the log
//! factor from the power-log family.
//!
//! Run with: cargo run --release --example decay_rates

use fracheb::cheb::{coeff_exact, coeff_series, CoeffMethod, End, SingularFamily};

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

fn main() -> fracheb::Result<()> {
    println!("log-log slopes fitted over k ∈ [50, 500]:\n");
    for alpha in [0.5, 1.5] {
        let fam = SingularFamily::PowerInterior { alpha, theta: 0.0 };
        let series = coeff_series(&fam, 1000, CoeffMethod::Exact)?;
        let pts: Vec<(f64, f64)> = (50..=500usize)
            .map(|k| ((k as f64).ln(), series.values[2 * k].abs().ln()))
            .collect();
        println!(
            "|x|^{alpha:<4}          slope {:+.4}   expected {:+.4}",
            slope(&pts),
            -(alpha + 1.0)
        );
    }
    for alpha in [0.5, 1.5] {
        let fam = SingularFamily::PowerEndpoint { alpha, end: End::Minus };
        let series = coeff_series(&fam, 500, CoeffMethod::Exact)?;
        let pts: Vec<(f64, f64)> = (50..=500usize)
            .map(|n| ((n as f64).ln(), series.values[n].abs().ln()))
            .collect();
        println!(
            "(1+x)^{alpha:<4}        slope {:+.4}   expected {:+.4}",
            slope(&pts),
            -(2.0 * alpha + 1.0)
        );
    }

    println!("\npower-log family |x|^α ln|x|, scaled magnitudes k^(α+1)|û_2k|:");
    for alpha in [1.0, 2.0] {
        let fam = SingularFamily::PowerLogInterior { alpha, theta: 0.0 };
        let mut row = format!("  α = {alpha}: ");
        for k in [50usize, 125, 250, 500] {
            let v = coeff_exact(&fam, 2 * k as u32)?.abs() * (k as f64).powf(alpha + 1.0);
            row += &format!("k={k}: {v:.5}  ");
        }
        println!("{row}");
    }
    println!("  (α = 1 keeps growing with ln k; even α = 2 stays flat: no log factor)");
    Ok(())
}
