//! Command implementations behind the `fracheb` binary: GGF-F curve
//! sweeps, coefficient tables, the verification suites and figure
//! reproduction. Everything lands as deterministic CSV (plus SVG for
//! the figures) under the configured output directory.

use crate::cheb::{
    coeff_asymptotic, coeff_exact, coeff_quadrature_family, CoeffMethod, End, SingularFamily,
};
use crate::error::{Error, Result};
use crate::ggf::{
    ggf_endpoint, ggf_eval, weighted_ggf, EndpointKind, GgfParams, Side, Weight,
};
use crate::output::{fmt_f64, render_svg, write_csv, write_svg, Curve};
use crate::verify::{run_suite, CheckRow, Suite};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Run-wide configuration. Identical configuration yields bit-identical
/// CSV output.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tol: f64,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { tol: 1e-10, out_dir: PathBuf::from("out"), seed: 20240, threads: None }
            .with_env_threads()
    }
}

impl RunConfig {
    fn with_env_threads(mut self) -> Self {
        self.threads = std::env::var("FRACHEB_THREADS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1);
        self
    }

    /// Apply a flat `key = value` config file as defaults.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("{}:{}: expected key = value", path.display(), lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "tol" => self.tol = parse_num(key, value)?,
                "out" => self.out_dir = PathBuf::from(value),
                "seed" => {
                    self.seed = value
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad seed `{value}`")))?
                }
                "threads" => {
                    self.threads = Some(value.parse().map_err(|_| {
                        Error::InvalidInput(format!("bad threads `{value}`"))
                    })?)
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown config key `{other}`")))
                }
            }
        }
        Ok(())
    }

    fn ensure_out(&self) -> Result<()> {
        std::fs::create_dir_all(&self.out_dir).map_err(|e| {
            Error::InvalidInput(format!("cannot create {}: {e}", self.out_dir.display()))
        })
    }

    /// Run `f` inside a worker pool capped by the configured thread count.
    pub fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map(|pool| pool.install(f))
                .unwrap_or_else(|_| panic!("cannot build worker pool")),
            None => f(),
        }
    }
}

fn parse_num(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::InvalidInput(format!("bad numeric value for `{key}`: `{value}`")))
}

/// `--grid a:b:count` specification.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidInput(format!("grid spec `{spec}` is not a:b:count")));
    }
    let a = parse_num("grid start", parts[0])?;
    let b = parse_num("grid end", parts[1])?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad grid count `{}`", parts[2])))?;
    if count < 2 || !(a < b) {
        return Err(Error::InvalidInput("grid needs a < b and count ≥ 2".into()));
    }
    Ok((0..count)
        .map(|i| a + (b - a) * i as f64 / (count - 1) as f64)
        .collect())
}

/// GGF-F sweep: CSV columns x, nu, value. Ordered by (ν, x) regardless of
/// worker count.
pub fn cmd_ggf(
    cfg: &RunConfig,
    side: Side,
    lambda: f64,
    nus: &[f64],
    grid: &[f64],
    weighted: bool,
) -> Result<PathBuf> {
    cfg.ensure_out()?;
    if nus.is_empty() {
        return Err(Error::InvalidInput("need at least one degree in --nu".into()));
    }
    let rows = cfg.in_pool(|| -> Result<Vec<Vec<String>>> {
        let mut rows = Vec::new();
        for &nu in nus {
            let p = GgfParams::new(side, nu, lambda)?;
            let values: Vec<f64> = grid
                .par_iter()
                .map(|&x| {
                    if weighted {
                        return weighted_ggf(&p, x, Weight::GegenbauerWLambda, cfg.tol)
                            .unwrap_or(f64::NAN);
                    }
                    if x.abs() < 1.0 {
                        ggf_eval(&p, x, cfg.tol).unwrap_or(f64::NAN)
                    } else {
                        // endpoint rows carry the limit when it is finite
                        let end = if x > 0.0 { End::Plus } else { End::Minus };
                        match ggf_endpoint(&p, end) {
                            Ok(b) if b.kind == EndpointKind::Finite => b.coefficient,
                            _ => f64::NAN,
                        }
                    }
                })
                .collect();
            for (x, v) in grid.iter().zip(values) {
                rows.push(vec![fmt_f64(*x), fmt_f64(nu), fmt_f64(v)]);
            }
        }
        Ok(rows)
    })?;
    let path = cfg.out_dir.join("ggf.csv");
    write_csv(&path, &["x", "nu", "value"], &rows)?;
    Ok(path)
}

/// Family selector as it appears on the command line.
pub fn parse_family(
    family: &str,
    alpha: f64,
    theta: Option<f64>,
    end: Option<i32>,
    taylor: Option<&str>,
) -> Result<SingularFamily> {
    let need_theta = || theta.ok_or_else(|| Error::InvalidInput("--theta required".into()));
    let need_end = || -> Result<End> {
        match end {
            Some(-1) => Ok(End::Minus),
            Some(1) => Ok(End::Plus),
            Some(v) => Err(Error::InvalidInput(format!("--end must be ±1, got {v}"))),
            None => Err(Error::InvalidInput("--end required".into())),
        }
    };
    let fam = match family {
        "power-interior" => SingularFamily::PowerInterior { alpha, theta: need_theta()? },
        "power-log-interior" => SingularFamily::PowerLogInterior { alpha, theta: need_theta()? },
        "power-endpoint" => SingularFamily::PowerEndpoint { alpha, end: need_end()? },
        "power-log-endpoint" => SingularFamily::PowerLogEndpoint { alpha, end: need_end()? },
        "power-smooth" => {
            let coeffs = taylor
                .ok_or_else(|| Error::InvalidInput("--taylor c0,c1,... required".into()))?
                .split(',')
                .map(|t| parse_num("taylor", t.trim()))
                .collect::<Result<Vec<f64>>>()?;
            SingularFamily::PowerTimesSmooth { alpha, end: need_end()?, taylor: coeffs }
        }
        other => return Err(Error::InvalidInput(format!("unknown family `{other}`"))),
    };
    fam.validate()?;
    Ok(fam)
}

/// Coefficient table: CSV columns n, method, value. `all` emits one row
/// per available method. Modes a closed form does not cover are skipped.
pub fn cmd_coeff(
    cfg: &RunConfig,
    fam: &SingularFamily,
    n_max: u32,
    methods: &[CoeffMethod],
) -> Result<PathBuf> {
    cfg.ensure_out()?;
    let mut rows = Vec::new();
    let method_name = |m: CoeffMethod| match m {
        CoeffMethod::Exact => "exact",
        CoeffMethod::Quadrature => "quadrature",
        CoeffMethod::Asymptotic => "asymptotic",
    };
    let values: Vec<(u32, CoeffMethod, Option<f64>)> = cfg.in_pool(|| {
        let mut jobs = Vec::new();
        for n in 0..=n_max {
            for &m in methods {
                jobs.push((n, m));
            }
        }
        jobs.par_iter()
            .map(|&(n, m)| {
                let v = match m {
                    CoeffMethod::Exact => coeff_exact(fam, n).ok(),
                    CoeffMethod::Quadrature => coeff_quadrature_family(fam, n).ok(),
                    CoeffMethod::Asymptotic => coeff_asymptotic(fam, n).ok(),
                };
                (n, m, v)
            })
            .collect()
    });
    for (n, m, v) in values {
        if let Some(v) = v {
            rows.push(vec![n.to_string(), method_name(m).to_string(), fmt_f64(v)]);
        }
    }
    let path = cfg.out_dir.join("coeff.csv");
    write_csv(&path, &["n", "method", "value"], &rows)?;
    Ok(path)
}

/// Verification driver: prints the pass/fail table, writes the
/// machine-readable CSV, and reports overall success.
pub fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<(Vec<CheckRow>, PathBuf, bool)> {
    cfg.ensure_out()?;
    let rows = cfg.in_pool(|| run_suite(suite, cfg.tol, cfg.seed))?;
    let all_pass = rows.iter().all(|r| r.passed);
    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.suite.to_string(),
                r.name.clone(),
                if r.passed { "pass" } else { "fail" }.to_string(),
                fmt_f64(r.measured),
                fmt_f64(r.threshold),
                r.note.clone(),
            ]
        })
        .collect();
    let path = cfg.out_dir.join(format!("verify_{}.csv", suite.name()));
    write_csv(&path, &["suite", "check", "status", "measured", "threshold", "note"], &csv_rows)?;
    Ok((rows, path, all_pass))
}

/// Plain-text pass/fail table for the terminal.
pub fn format_report(rows: &[CheckRow]) -> String {
    let mut by_suite: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut out = String::new();
    let name_width = rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(10).min(72);
    for r in rows {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let mut name = r.name.clone();
        if name.chars().count() > name_width {
            name = name.chars().take(name_width - 1).collect::<String>() + "…";
        }
        out.push_str(&format!(
            "[{status}] {:<18} {:<width$} measured {:>12.4e}  threshold {:>12.4e}{}\n",
            r.suite,
            name,
            r.measured,
            r.threshold,
            if r.note.is_empty() { String::new() } else { format!("  ({})", r.note) },
            width = name_width,
        ));
        let e = by_suite.entry(r.suite).or_insert((0, 0));
        e.1 += 1;
        if r.passed {
            e.0 += 1;
        }
    }
    out.push('\n');
    for (suite, (pass, total)) in by_suite {
        out.push_str(&format!("{suite}: {pass}/{total} checks passed\n"));
    }
    out
}

const FIG1_NUS: [f64; 6] = [0.5, 1.0, 1.5, 2.0, 2.5, 3.0];

/// Figure reproduction. Id 1: the two GGF-F curve panels (λ = 0 and
/// λ = 1/2); id 2: the bound-comparison ratio panels (θ = 1/2 and 4/5).
pub fn cmd_figure(cfg: &RunConfig, id: u32) -> Result<Vec<PathBuf>> {
    cfg.ensure_out()?;
    match id {
        1 => {
            let mut written = Vec::new();
            for (lambda, tag) in [(0.0, "lambda0"), (0.5, "lambda05")] {
                let grid = parse_grid("-0.999999:0.999999:801")?;
                let mut csv_rows = Vec::new();
                let mut curves = Vec::new();
                for &nu in &FIG1_NUS {
                    let p = GgfParams::right(nu, lambda)?;
                    let pts: Vec<(f64, f64)> = cfg.in_pool(|| {
                        grid.par_iter()
                            .map(|&x| (x, ggf_eval(&p, x, cfg.tol).unwrap_or(f64::NAN)))
                            .collect()
                    });
                    for &(x, v) in &pts {
                        csv_rows.push(vec![fmt_f64(x), fmt_f64(nu), fmt_f64(v)]);
                    }
                    curves.push(Curve { label: format!("ν = {nu}"), points: pts });
                }
                let csv = cfg.out_dir.join(format!("fig1_{tag}.csv"));
                write_csv(&csv, &["x", "nu", "value"], &csv_rows)?;
                let clip = if lambda == 0.5 { Some((-2.5, 2.5)) } else { None };
                let svg = render_svg(
                    &format!("Right GGF-F curves, λ = {lambda}"),
                    "x",
                    "value",
                    &curves,
                    clip,
                );
                let svg_path = cfg.out_dir.join(format!("fig1_{tag}.svg"));
                write_svg(&svg_path, &svg)?;
                written.push(csv);
                written.push(svg_path);
            }
            Ok(written)
        }
        2 => {
            let mut written = Vec::new();
            for (theta, tag) in [(0.5, "theta05"), (0.8, "theta45")] {
                let table = crate::bounds::bound_ratios(theta, 2, 100)?;
                let csv_rows: Vec<Vec<String>> = table
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            fmt_f64(r.ratio_falling),
                            fmt_f64(r.ratio_product),
                        ]
                    })
                    .collect();
                let csv = cfg.out_dir.join(format!("fig2_{tag}.csv"));
                write_csv(&csv, &["n", "ratio1", "ratio2"], &csv_rows)?;
                let curves = vec![
                    Curve {
                        label: "Ratio 1".into(),
                        points: table.iter().map(|r| (r.n as f64, r.ratio_falling)).collect(),
                    },
                    Curve {
                        label: "Ratio 2".into(),
                        points: table.iter().map(|r| (r.n as f64, r.ratio_product)).collect(),
                    },
                ];
                let svg = render_svg(
                    &format!("Coefficient bound ratios for |x-θ|, θ = {theta}"),
                    "n",
                    "ratio",
                    &curves,
                    None,
                );
                let svg_path = cfg.out_dir.join(format!("fig2_{tag}.svg"));
                write_svg(&svg_path, &svg)?;
                written.push(csv);
                written.push(svg_path);
            }
            Ok(written)
        }
        other => Err(Error::InvalidInput(format!("unknown figure id {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("-1:1:5").unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[4], 1.0);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("1:0:5").is_err());
    }

    #[test]
    fn family_parsing() {
        let fam = parse_family("power-interior", 1.5, Some(0.3), None, None).unwrap();
        assert!(matches!(fam, SingularFamily::PowerInterior { .. }));
        assert!(parse_family("power-endpoint", 0.5, None, Some(2), None).is_err());
        assert!(parse_family("nope", 0.5, None, None, None).is_err());
        let fam = parse_family("power-smooth", 0.5, None, Some(-1), Some("1,0.5")).unwrap();
        assert!(matches!(fam, SingularFamily::PowerTimesSmooth { .. }));
    }

    #[test]
    fn ggf_csv_deterministic() {
        let dir = std::env::temp_dir().join("fracheb_test_ggf");
        let cfg = RunConfig {
            tol: 1e-10,
            out_dir: dir.clone(),
            seed: 1,
            threads: Some(2),
        };
        let grid = parse_grid("-0.9:0.9:31").unwrap();
        let p1 = cmd_ggf(&cfg, Side::Right, 0.5, &[0.5, 1.5], &grid, false).unwrap();
        let first = std::fs::read(&p1).unwrap();
        let p2 = cmd_ggf(&cfg, Side::Right, 0.5, &[0.5, 1.5], &grid, false).unwrap();
        let second = std::fs::read(&p2).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert!(text.starts_with("x,nu,value\n"));
        assert_eq!(text.lines().count(), 1 + 2 * 31);
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn config_file_overrides() {
        let dir = std::env::temp_dir().join("fracheb_test_cfg");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "tol = 1e-8\nseed = 7\n# comment\nout = somewhere\n").unwrap();
        let mut cfg = RunConfig::default();
        cfg.apply_file(&path).unwrap();
        assert_eq!(cfg.tol, 1e-8);
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.out_dir, PathBuf::from("somewhere"));
        std::fs::write(&path, "nonsense\n").unwrap();
        assert!(cfg.apply_file(&path).is_err());
        std::fs::remove_dir_all(dir).ok();
    }
}
