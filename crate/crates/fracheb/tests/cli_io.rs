//! End-to-end checks of the CSV/SVG emitting commands: determinism
//! across worker counts, file shapes, and the figure outputs.

use fracheb::cheb::CoeffMethod;
use fracheb::cli::{cmd_coeff, cmd_figure, cmd_ggf, cmd_verify, parse_family, parse_grid, RunConfig};
use fracheb::ggf::Side;
use fracheb::verify::Suite;
use std::path::PathBuf;

fn temp_cfg(tag: &str, threads: Option<usize>) -> RunConfig {
    RunConfig {
        tol: 1e-10,
        out_dir: std::env::temp_dir().join(format!("fracheb_io_{tag}")),
        seed: 20240,
        threads,
    }
}

#[test]
fn verify_csv_is_deterministic_across_worker_counts() {
    let cfg1 = temp_cfg("v1", Some(1));
    let cfg4 = temp_cfg("v4", Some(4));
    let (_, p1, ok1) = cmd_verify(&cfg1, Suite::FracIdentities).unwrap();
    let (_, p4, ok4) = cmd_verify(&cfg4, Suite::FracIdentities).unwrap();
    assert!(ok1 && ok4);
    let b1 = std::fs::read(&p1).unwrap();
    let b4 = std::fs::read(&p4).unwrap();
    assert_eq!(b1, b4, "report bytes differ between 1 and 4 workers");
    std::fs::remove_dir_all(cfg1.out_dir).ok();
    std::fs::remove_dir_all(cfg4.out_dir).ok();
}

#[test]
fn ggf_sweep_layout() {
    let cfg = temp_cfg("gg", None);
    let grid = parse_grid("-0.9:0.9:41").unwrap();
    let path = cmd_ggf(&cfg, Side::Right, 0.5, &[0.5, 1.5, 2.0], &grid, false).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,nu,value"));
    assert_eq!(text.lines().count(), 1 + 3 * 41);
    // integer-degree rows follow the Chebyshev-family polynomial exactly
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let nu: f64 = cells[1].parse().unwrap();
        if nu == 2.0 {
            let x: f64 = cells[0].parse().unwrap();
            let v: f64 = cells[2].parse().unwrap();
            // G_2^{(1/2)} is the quadratic Legendre polynomial over its value at 1
            let want = 0.5 * (3.0 * x * x - 1.0);
            assert!((v - want).abs() < 1e-12, "x={x}: {v} vs {want}");
        }
    }
    std::fs::remove_dir_all(cfg.out_dir).ok();
}

#[test]
fn coeff_table_methods_and_zeros() {
    let cfg = temp_cfg("co", None);
    let fam = parse_family("power-interior", 1.5, Some(0.0), None, None).unwrap();
    let path = cmd_coeff(
        &cfg,
        &fam,
        12,
        &[CoeffMethod::Exact, CoeffMethod::Quadrature, CoeffMethod::Asymptotic],
    )
    .unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut exact_by_n = vec![f64::NAN; 13];
    let mut quad_by_n = vec![f64::NAN; 13];
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let n: usize = cells[0].parse().unwrap();
        let v: f64 = cells[2].parse().unwrap();
        match cells[1] {
            "exact" => exact_by_n[n] = v,
            "quadrature" => quad_by_n[n] = v,
            _ => {}
        }
    }
    for n in 3..=12usize {
        // odd modes of an even function vanish
        if n % 2 == 1 {
            assert_eq!(exact_by_n[n], 0.0, "n={n}");
            continue;
        }
        let (e, q) = (exact_by_n[n], quad_by_n[n]);
        assert!((e - q).abs() <= 1e-8 * e.abs().max(1e-6), "n={n}: {e} vs {q}");
    }
    std::fs::remove_dir_all(cfg.out_dir).ok();
}

#[test]
fn figures_exist_with_expected_shapes() {
    let cfg = temp_cfg("fig", None);
    let files1 = cmd_figure(&cfg, 1).unwrap();
    assert_eq!(files1.len(), 4);
    let files2 = cmd_figure(&cfg, 2).unwrap();
    assert_eq!(files2.len(), 4);
    for f in files1.iter().chain(&files2) {
        let meta = std::fs::metadata(f).unwrap();
        assert!(meta.len() > 200, "{} too small", f.display());
    }
    // figure-2 CSV row count equals the n-range length, ratios above 1
    let csv: PathBuf = files2[0].clone();
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 99);
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let r1: f64 = cells[1].parse().unwrap();
        let r2: f64 = cells[2].parse().unwrap();
        assert!(r1 > 1.0 && r2 > 1.0);
    }
    // the SVG panels carry polylines
    let svg = std::fs::read_to_string(&files1[1]).unwrap();
    assert!(svg.contains("<path"));
    std::fs::remove_dir_all(cfg.out_dir).ok();
}

#[test]
fn verify_failure_reporting_shape() {
    // unknown suites are usage errors, not panics
    assert!(Suite::parse("made-up").is_err());
}
