//! `cheeger`: Cheeger constants of hyperbolic surfaces and spectral bounds
//! from the command line.
//!
//! ```sh
//! cheeger solve surface.json
//! cheeger ratio disk --r 1.5
//! cheeger sl-invert --lambda 0.25
//! cheeger sl-scan --min 0.05 --max 1 --steps 20 --csv
//! cheeger selberg-test
//! ```
//!
//! Results go to stdout as JSON (CSV for `sl-scan --csv`). Exit status is 0
//! on success, 1 when a numerical search fails, 2 for usage, input or
//! validation errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use cheeger_core::fmt::round_sig;
use cheeger_core::formulas::{annulus_ratio, disk_ratio, flat_torus_cheeger, horocusp_ratio};
use cheeger_core::sturm::{
    classical_bounds, endpoint_t, invert_lambda1, lambda1, monotonicity_scan, selberg_test,
};
use cheeger_core::{parse_surface, solve_with, SolveOptions, Tolerance};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const JSON_DIGITS: usize = 9;
const CSV_DIGITS: usize = 12;

#[derive(Parser)]
#[command(
    name = "cheeger",
    version,
    about = "Cheeger constants of hyperbolic surfaces and Sturm-Liouville spectral bounds"
)]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Significant digits for numeric output [default: 9, or 12 for CSV].
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: Option<u8>,

    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Cheeger constant of a surface description file.
    Solve {
        /// JSON surface description.
        input: PathBuf,
        /// Include every per-splitting evaluation in the output.
        #[arg(long)]
        audit: bool,
        /// Evaluate every splitting regardless of the length budget.
        #[arg(long)]
        no_prune: bool,
    },
    /// Evaluate an isoperimetric ratio.
    Ratio {
        #[command(subcommand)]
        shape: Shape,
    },
    /// First eigenvalue of the model problem for a Cheeger constant h.
    #[command(name = "sl-lambda")]
    SlLambda {
        #[arg(long)]
        h: f64,
    },
    /// Cheeger constant h whose model eigenvalue equals the target.
    #[command(name = "sl-invert")]
    SlInvert {
        #[arg(long)]
        lambda: f64,
    },
    /// First eigenvalue on a uniform grid of h values.
    #[command(name = "sl-scan")]
    SlScan {
        #[arg(long)]
        min: f64,
        #[arg(long)]
        max: f64,
        #[arg(long)]
        steps: usize,
        /// Emit `h,lambda1` CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Cheeger, Buser and model-problem eigenvalue bounds for h.
    Bounds {
        #[arg(long)]
        h: f64,
    },
    /// Lower bounds on h for the congruence surfaces against the Brooks-Zuk
    /// ceiling.
    #[command(name = "selberg-test")]
    SelbergTest,
}

#[derive(Subcommand)]
enum Shape {
    /// Metric disk of radius r.
    Disk {
        #[arg(long)]
        r: f64,
    },
    /// Collar of the given area around a geodesic of length l0.
    Annulus {
        #[arg(long)]
        l0: f64,
        #[arg(long)]
        area: f64,
    },
    /// Horocusp neighborhood.
    Horocusp,
    /// Flat torus from an a×b rectangle (a ≤ b).
    Torus {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<cheeger_core::Error> for Failure {
    fn from(e: cheeger_core::Error) -> Self {
        if e.is_computational() {
            Failure::Compute(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Rounds every float in `v` to `digits` significant digits.
fn round_numbers(v: Value, digits: usize) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"), digits);
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(
            items
                .into_iter()
                .map(|x| round_numbers(x, digits))
                .collect(),
        ),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, x)| (k, round_numbers(x, digits)))
                .collect(),
        ),
        other => other,
    }
}

fn render_json(v: Value, digits: usize) -> String {
    let mut text =
        serde_json::to_string_pretty(&round_numbers(v, digits)).expect("JSON values serialize");
    text.push('\n');
    text
}

fn run(cli: Cli) -> Result<String, Failure> {
    let digits = cli.out.digits.map(usize::from);
    let json_digits = digits.unwrap_or(JSON_DIGITS);
    let tolerance = Tolerance::from_env().ok_or_else(|| {
        Failure::Usage(format!(
            "{} must be a positive number",
            cheeger_core::tolerance::TOL_ENV_VAR
        ))
    })?;

    let value = match cli.command {
        Command::Solve {
            input,
            audit,
            no_prune,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let surface = parse_surface(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let opts = SolveOptions {
                tolerance,
                prune: !no_prune,
                record_evaluations: audit,
                ..SolveOptions::default()
            };
            serde_json::to_value(solve_with(&surface, &opts)?).expect("result serializes")
        }
        Command::Ratio { shape } => {
            let (name, ratio) = match shape {
                Shape::Disk { r } => ("disk", disk_ratio(r)?),
                Shape::Annulus { l0, area } => ("annulus", annulus_ratio(l0, area)?),
                Shape::Horocusp => ("horocusp", horocusp_ratio()),
                Shape::Torus { a, b } => ("torus", flat_torus_cheeger(a, b)?),
            };
            json!({ "shape": name, "ratio": ratio })
        }
        Command::SlLambda { h } => {
            let problem = endpoint_t(h)?;
            json!({ "h": h, "T": problem.t, "lambda1": lambda1(h)? })
        }
        Command::SlInvert { lambda } => {
            json!({ "lambda": lambda, "h": invert_lambda1(lambda)? })
        }
        Command::SlScan {
            min,
            max,
            steps,
            csv,
        } => {
            let scan = monotonicity_scan(min, max, steps)?;
            if csv {
                return Ok(scan.to_csv(digits.unwrap_or(CSV_DIGITS)));
            }
            serde_json::to_value(scan).expect("scan serializes")
        }
        Command::Bounds { h } => {
            serde_json::to_value(classical_bounds(h)?).expect("bounds serialize")
        }
        Command::SelbergTest => serde_json::to_value(selberg_test()?).expect("report serializes"),
    };
    Ok(render_json(value, json_digits))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.out.output.clone();
    match run(cli) {
        Ok(text) => {
            if let Some(path) = output {
                if let Err(e) = fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
