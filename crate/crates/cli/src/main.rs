//! `tempered`: runs the identity checks, expands and differentiates builtin
//! distributions, and evaluates family members.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! configuration error.

mod builtins;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "tempered",
    version,
    about = "Tempered distributions in a truncated Hermite basis"
)]
struct Cli {
    #[command(flatten)]
    config: CliConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Maximum Hermite degree per axis
    #[arg(long, global = true, default_value_t = 32)]
    pub order: usize,

    /// Gauss-Hermite nodes per axis [default: max(80, 2*order+2)]
    #[arg(long = "quad", global = true)]
    pub quad_order: Option<usize>,

    /// Spatial dimension
    #[arg(long, global = true, default_value_t = 1)]
    pub dim: usize,

    /// Comparison tolerance
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Seed for random check instances
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output here instead of stdout
    #[arg(long = "out", global = true)]
    pub output_path: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite
    Verify,
    /// Print the dual coefficients of a builtin distribution
    /// (dirac@<x>, hermite@<j>, gaussian, constant)
    Expand { name: String },
    /// k-th derivative of a builtin distribution, by superposition against
    /// the Dirac-derivative family and by the derivative operator
    Deriv {
        name: String,
        k: usize,
        /// Axis to differentiate along
        #[arg(long, default_value_t = 0)]
        axis: usize,
    },
    /// Pair a family member with a test function, and evaluate the family's
    /// associated operator pointwise
    FamilyEval {
        /// dirac, dirac', dirac'', ... or dirac-deriv@<multi-index>
        family: String,
        /// Index point, comma-separated
        #[arg(allow_hyphen_values = true)]
        point: String,
        /// hermite@<j>, gaussian or zero
        phi: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify => commands::verify(&cli.config),
        Command::Expand { name } => commands::expand(&cli.config, name),
        Command::Deriv { name, k, axis } => commands::deriv(&cli.config, name, *k, *axis),
        Command::FamilyEval { family, point, phi } => commands::family_eval(&cli.config, family, point, phi),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
