//! `dilogint`: evaluate, integrate, verify and rediscover at any precision.

mod commands;
mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Outcome};

/// Arbitrary-precision Clausen values, Dirichlet L-series, tanh-sinh
/// quadrature and identity checks around I7 = L_{-7}(2).
#[derive(Debug, Parser)]
#[command(name = "dilogint", version, propagate_version = true)]
pub struct Cli {
    /// Decimal digits requested.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u32).range(10..=10_000_000))]
    pub digits: u32,

    /// Threads used by the quadrature engine. Never changes a printed value.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub workers: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the sampled identities.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Write output to this file instead of standard output.
    #[arg(long = "output", global = true, value_name = "PATH")]
    pub output_path: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function.
    #[command(subcommand)]
    Eval(EvalTarget),
    /// Integrate by tanh-sinh quadrature.
    #[command(subcommand)]
    Integrate(IntegrateTarget),
    /// Check one identity, or `all`.
    Verify {
        /// Identity id, or `all`.
        id: String,
    },
    /// Rediscover the six-term Clausen relation by PSLQ (needs --digits >= 100).
    Discover,
    /// CSV samples of the I7 integrand on (pi/3, pi/2), skipping the singularity.
    Sample {
        /// Number of rows.
        points: usize,
    },
    /// Print the cached constants.
    Constants,
}

#[derive(Debug, Subcommand)]
pub enum EvalTarget {
    /// Clausen function Cl2(theta); theta may be written like `2pi/7` or `4phi7`.
    Cl2 {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Dirichlet L-series L_d(s) for s > 1.
    #[command(name = "L", alias = "l")]
    L {
        #[arg(allow_hyphen_values = true)]
        d: i64,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Hurwitz zeta(s, a) for s > 1, 0 < a <= 1.
    Hurwitz {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Zagier's A(x) = Cl2(2 arccot x).
    #[command(name = "A", alias = "a")]
    A {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Kronecker symbol (d/n).
    Kronecker {
        #[arg(allow_hyphen_values = true)]
        d: i64,
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum IntegrateTarget {
    /// I7 = 24/(7 sqrt7) * integral of ln|(tan t + sqrt7)/(tan t - sqrt7)| over (pi/3, pi/2).
    I7,
    /// Integral of an expression in `t` from a to b.
    Custom {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Text => outcome.text.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("json serializes");
            s.push('\n');
            s
        }
    };
    match &cli.output_path {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).and_then(|_| out.flush()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli).and_then(|outcome| emit(&cli, &outcome).map(|_| outcome));
    match result {
        Ok(outcome) if outcome.success => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
