//! Thin command-line front end. All substance lives in the library; this
//! binary only parses flags, wires the run configuration and sets the
//! exit code (0 success, 1 verification failure, 2 usage error).

use clap::{Parser, Subcommand};
use fracheb::cheb::CoeffMethod;
use fracheb::cli::{
    cmd_coeff, cmd_figure, cmd_ggf, cmd_verify, format_report, parse_family, parse_grid,
    RunConfig,
};
use fracheb::ggf::Side;
use fracheb::verify::Suite;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fracheb",
    about = "Fractional-degree Gegenbauer functions, Riemann-Liouville calculus on power/log \
             families, Chebyshev coefficients of singular functions, and sharp decay/truncation \
             bounds",
    version
)]
struct Cli {
    /// Flat key = value config file presetting tol/out/seed/threads
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Default tolerance for evaluations
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output directory for CSV/SVG files
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for any sampled test sets
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate GGF-F curves onto CSV (optionally the figure-1 panels)
    Ggf {
        /// Family side: r (right) or l (left)
        #[arg(long, default_value = "r")]
        side: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// Comma-separated degrees
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        nu: Vec<f64>,
        /// Evaluation grid a:b:count
        #[arg(long, default_value = "-0.999:0.999:501", allow_hyphen_values = true)]
        grid: String,
        /// Multiply by the Gegenbauer weight ω_λ
        #[arg(long)]
        weighted: bool,
        /// Emit the figure panels instead of a single sweep
        #[arg(long)]
        figure: Option<u32>,
    },
    /// Chebyshev coefficients of a singular family onto CSV
    Coeff {
        /// power-interior | power-log-interior | power-endpoint |
        /// power-log-endpoint | power-smooth
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<f64>,
        /// Singular endpoint: -1 or 1
        #[arg(long, allow_hyphen_values = true)]
        end: Option<i32>,
        /// Taylor coefficients of the smooth factor at the endpoint
        #[arg(long, allow_hyphen_values = true)]
        taylor: Option<String>,
        #[arg(long = "n-max", default_value_t = 32)]
        n_max: u32,
        /// exact | quadrature | asymptotic | all
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Run a verification suite; exit 1 if any check fails
    Verify {
        /// ggf-bounds | frac-identities | coeff-oracle | decay-rates |
        /// bound-domination | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Reproduce a figure (1: GGF-F panels, 2: bound-ratio panels)
    Figure {
        #[arg(long)]
        id: u32,
    },
}

fn build_config(cli: &Cli) -> fracheb::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_file(path)?;
    }
    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(fracheb::Error::InvalidInput(format!(
                "--tol must be in (0,1), got {tol}"
            )));
        }
        cfg.tol = tol;
    }
    if let Some(out) = &cli.out {
        cfg.out_dir = out.clone();
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> fracheb::Result<bool> {
    let cfg = build_config(cli)?;
    match &cli.command {
        Command::Ggf { side, lambda, nu, grid, weighted, figure } => {
            if let Some(id) = figure {
                if *id != 1 {
                    return Err(fracheb::Error::InvalidInput(format!(
                        "ggf --figure only knows panel set 1, got {id}"
                    )));
                }
                let files = cmd_figure(&cfg, 1)?;
                for f in files {
                    println!("wrote {}", f.display());
                }
                return Ok(true);
            }
            let side = match side.as_str() {
                "r" => Side::Right,
                "l" => Side::Left,
                other => {
                    return Err(fracheb::Error::InvalidInput(format!(
                        "--side must be r or l, got `{other}`"
                    )))
                }
            };
            let grid = parse_grid(grid)?;
            let path = cmd_ggf(&cfg, side, *lambda, nu, &grid, *weighted)?;
            println!("wrote {}", path.display());
            Ok(true)
        }
        Command::Coeff { family, alpha, theta, end, taylor, n_max, method } => {
            let fam = parse_family(family, *alpha, *theta, *end, taylor.as_deref())?;
            let methods: Vec<CoeffMethod> = match method.as_str() {
                "exact" => vec![CoeffMethod::Exact],
                "quadrature" => vec![CoeffMethod::Quadrature],
                "asymptotic" => vec![CoeffMethod::Asymptotic],
                "all" => {
                    vec![CoeffMethod::Exact, CoeffMethod::Quadrature, CoeffMethod::Asymptotic]
                }
                other => {
                    return Err(fracheb::Error::InvalidInput(format!("unknown method `{other}`")))
                }
            };
            let path = cmd_coeff(&cfg, &fam, *n_max, &methods)?;
            println!("wrote {}", path.display());
            Ok(true)
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(suite)?;
            let (rows, path, all_pass) = cmd_verify(&cfg, suite)?;
            print!("{}", format_report(&rows));
            println!("report: {}", path.display());
            Ok(all_pass)
        }
        Command::Figure { id } => {
            let files = cmd_figure(&cfg, *id)?;
            for f in files {
                println!("wrote {}", f.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
