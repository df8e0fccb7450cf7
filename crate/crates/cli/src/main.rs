//! Batch front-end for the phase toolkit. `classify` turns polynomial files
//! into restriction reports; `verify` reruns the numerical evidence suites.
//!
//! Exit status: 0 all assertions hold, 1 an assertion failed, 2 bad input or
//! configuration, 3 a check ran out of quadrature budget (inconclusive).

mod classify;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use phaselab_verify::VerifyConfig;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "phaselab", version, about = "Newton-polyhedron phase classification and oscillatory-integral bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify phase polynomials and write one restriction report per input.
    Classify {
        /// Files containing one polynomial in x1, x2 each (e.g. "x2^3 + x1^9").
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Output directory for reports.
        #[arg(long, default_value = "phaselab-out")]
        out: PathBuf,
    },
    /// Run a verification suite and write its JSON/CSV evidence.
    Verify {
        #[arg(long, value_enum)]
        suite: suites::Suite,
        /// Dyadic sweeps run over lambda = 2^j for j in this range.
        #[arg(long, default_value_t = 8)]
        lambda_min_exp: u32,
        #[arg(long, default_value_t = 16)]
        lambda_max_exp: u32,
        /// Seed for randomized grids; fixed seed, fixed report bytes.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Tolerance on fitted decay slopes.
        #[arg(long, default_value_t = 0.05)]
        tol: f64,
        /// Output directory for evidence files.
        #[arg(long, default_value = "phaselab-out")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { files, out } => classify::run_classify(&files, &out),
        Command::Verify {
            suite,
            lambda_min_exp,
            lambda_max_exp,
            seed,
            tol,
            out,
        } => {
            if lambda_min_exp >= lambda_max_exp {
                eprintln!(
                    "--lambda-min-exp ({lambda_min_exp}) must be strictly below --lambda-max-exp ({lambda_max_exp})"
                );
                return ExitCode::from(EXIT_INPUT);
            }
            if !(tol > 0.0) {
                eprintln!("--tol must be positive, got {tol}");
                return ExitCode::from(EXIT_INPUT);
            }
            let cfg = VerifyConfig {
                lambda_min_exp,
                lambda_max_exp,
                seed,
                slope_tol: tol,
                ..VerifyConfig::default()
            };
            suites::run_verify(suite, &cfg, &out)
        }
    }
}
