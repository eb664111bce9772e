use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hyperball::coxeter::{
    gauss_bonnet_volume_4d, orbifold_euler_characteristic, truncation_height,
};
use hyperball::packing::{maximize_over_p, HeightAssignment};
use hyperball::report::{sweep, sweep_csv, table1_csv, table1_rows, TABLE1_DEFAULT_P};
use hyperball::volume::{orthoscheme_volume_3d, orthoscheme_volume_5d};
use hyperball::{CoxeterGraph, TruncatedSimplexModel};
use serde::Serialize;

/// Hyperball packing densities in truncated regular simplex tilings.
#[derive(Parser)]
#[command(name = "hyperball", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    OverX,
    OverP,
}

#[derive(Subcommand)]
enum Command {
    /// Congruent 3D data per orthoscheme for each p.
    Table1 {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE1_DEFAULT_P)]
        p: Vec<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Decimal places in CSV output.
        #[arg(long, default_value_t = 5)]
        decimals: usize,
    },
    /// Density over the expansion interval [0, x_max].
    Sweep {
        #[arg(long, default_value_t = 3)]
        dim: u8,
        #[arg(long, default_value_t = 7)]
        p: u32,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value_t = 5)]
        decimals: usize,
        /// Absolute tolerance of the 5D volume quadrature.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Maximise the density over x for one tile, or over real p.
    Optimize {
        #[arg(value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 3)]
        dim: u8,
        #[arg(long, default_value_t = 7)]
        p: u32,
        /// Optimiser tolerance in p (over-p only).
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Grid size of the monotonicity check (over-p only).
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Packing constraints for the expansion with parameter x.
    Validate {
        #[arg(long, default_value_t = 3)]
        dim: u8,
        #[arg(long, default_value_t = 7)]
        p: u32,
        #[arg(long, default_value_t = 0.0)]
        x: f64,
    },
    /// Metric data of a linear Coxeter orthoscheme, e.g. `7,3,3` or `5,3,3,3,3`.
    Orthoscheme {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn model(dim: u8, p: u32, tol: Option<f64>) -> Result<TruncatedSimplexModel> {
    match dim {
        3 => {
            if p < 7 {
                bail!("p = {p}: {{p,3,3}} tiles hyperbolic space only for integer p >= 7");
            }
            Ok(TruncatedSimplexModel::build_3d(p as f64)?)
        }
        5 => Ok(match tol {
            Some(t) => TruncatedSimplexModel::build_5d_with_tol(t)?,
            None => TruncatedSimplexModel::build_5d()?,
        }),
        _ => bail!("unsupported dimension {dim}; expected 3 or 5"),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize)]
struct OverX {
    dimension: usize,
    p: f64,
    x_max: f64,
    argmax: f64,
    density: f64,
    bracket: f64,
    iterations: usize,
    evaluations: usize,
}

#[derive(Serialize)]
struct OverP {
    argmax: f64,
    density: f64,
    bracket: f64,
    iterations: usize,
    evaluations: usize,
    samples: usize,
    increasing_below: bool,
    decreasing_above: bool,
}

#[derive(Serialize)]
struct Validation {
    dimension: usize,
    p: f64,
    x: f64,
    heights: Vec<f64>,
    pair_distance: f64,
    w: f64,
    within_interval: bool,
    report: hyperball::ConstraintReport,
    density: Option<f64>,
}

#[derive(Serialize)]
struct OrthoschemeReport {
    symbol: String,
    dimension: usize,
    truncation_height: Option<f64>,
    volume: f64,
    quadrature_error_estimate: Option<f64>,
    euler_characteristic: Option<String>,
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Table1 {
            p,
            format,
            decimals,
        } => {
            let rows = table1_rows::<f64>(&p)?;
            match format {
                Format::Csv => Ok(table1_csv(&rows, decimals)),
                Format::Json => json(&rows),
            }
        }
        Command::Sweep {
            dim,
            p,
            points,
            format,
            decimals,
            tol,
        } => {
            if points < 2 {
                bail!("--points must be at least 2");
            }
            let m = model(dim, p, tol)?;
            let pts = sweep(&m, points)?;
            match format {
                Format::Csv => Ok(sweep_csv(&pts, decimals)),
                Format::Json => json(&pts),
            }
        }
        Command::Optimize {
            mode: Mode::OverX,
            dim,
            p,
            ..
        } => {
            let m = model(dim, p, None)?;
            let o = m.maximize_over_x()?;
            json(&OverX {
                dimension: m.dimension(),
                p: m.p(),
                x_max: m.x_max(),
                argmax: o.argmax,
                density: o.value,
                bracket: o.bracket,
                iterations: o.iterations,
                evaluations: o.evaluations,
            })
        }
        Command::Optimize {
            mode: Mode::OverP,
            tol,
            samples,
            ..
        } => {
            let r = maximize_over_p(tol, samples)?;
            json(&OverP {
                argmax: r.optimum.argmax,
                density: r.optimum.value,
                bracket: r.optimum.bracket,
                iterations: r.optimum.iterations,
                evaluations: r.optimum.evaluations,
                samples: r.samples,
                increasing_below: r.increasing_below,
                decreasing_above: r.decreasing_above,
            })
        }
        Command::Validate { dim, p, x } => {
            let m = model(dim, p, None)?;
            let heights = HeightAssignment::expansion(&m, x);
            let report = m.validate(&heights);
            let within_interval = x >= 0.0 && x <= m.x_max();
            let density = if within_interval {
                Some(m.density(x)?.density)
            } else {
                None
            };
            json(&Validation {
                dimension: m.dimension(),
                p: m.p(),
                x,
                heights: heights.heights,
                pair_distance: m.pair_distance(),
                w: m.w(),
                within_interval,
                report,
                density,
            })
        }
        Command::Orthoscheme { symbol, tol } => {
            let graph = CoxeterGraph::parse_schlafli(&symbol).context("parsing --symbol")?;
            let labels: Vec<f64> = (0..graph.order() - 1)
                .map(|i| match graph.label(i, i + 1) {
                    hyperball::coxeter::Label::Finite(v) => Ok(v),
                    hyperball::coxeter::Label::Infinite => bail!("infinite label in {symbol}"),
                })
                .collect::<Result<_>>()?;
            let h = truncation_height(&graph).ok();
            let mut chi = None;
            let (volume, err) = match *labels.as_slice() {
                [a, b, c] => (
                    orthoscheme_volume_3d(
                        std::f64::consts::PI / a,
                        std::f64::consts::PI / b,
                        std::f64::consts::PI / c,
                    )?,
                    None,
                ),
                [5.0, 3.0, 3.0, 3.0, 3.0] => {
                    let q = orthoscheme_volume_5d(tol.unwrap_or(1e-11))?;
                    (q.value, Some(q.error_estimate))
                }
                [_, _, _, _] => {
                    let v = gauss_bonnet_volume_4d(&graph)?;
                    chi = Some(orbifold_euler_characteristic(&graph)?.to_string());
                    (v, None)
                }
                _ => bail!("no volume route for {graph}"),
            };
            json(&OrthoschemeReport {
                symbol: graph.to_string(),
                dimension: labels.len(),
                truncation_height: h,
                volume,
                quadrature_error_estimate: err,
                euler_characteristic: chi,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
