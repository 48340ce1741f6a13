//! Command-line front end: tables and curve data as CSV or JSON.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod output;
pub mod verify;

use output::{Format, OutputSpec, Table, DEFAULT_PRECISION};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Numerical {
        context: String,
        source: clamped_plate::Error,
    },
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn numerical(context: impl Into<String>, source: clamped_plate::Error) -> Self {
        CliError::Numerical {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numerical { .. } | CliError::ChecksFailed(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "clamped-plate", version, about = "Eigenvalue bounds for the clamped plate on [0,h]x[0,1]")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Significant digits for numbers (3 to 15)
    #[arg(long, default_value_t = DEFAULT_PRECISION, global = true)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct HSelection {
    /// Aspect ratio h (repeatable)
    #[arg(long = "h", value_name = "H", allow_negative_numbers = true)]
    pub h: Vec<f64>,
    /// Evenly spaced h values: MIN MAX STEPS (STEPS + 1 points)
    #[arg(long, num_args = 3, value_names = ["MIN", "MAX", "STEPS"])]
    pub range: Option<Vec<f64>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigencurves rho_1..rho_n of the 1D operator on an alpha grid
    Curves {
        alpha_min: f64,
        alpha_max: f64,
        /// Number of intervals (STEPS + 1 points)
        steps: usize,
        /// Highest curve index, at most 4
        n_max: usize,
    },
    /// Lower bounds lambda_1..3, upper bound nu_1 and the guaranteed error
    Bounds {
        #[command(flatten)]
        select: HSelection,
    },
    /// Bounds on the negative part of the groundstate
    Negativity {
        #[command(flatten)]
        select: HSelection,
    },
    /// Run the built-in reference checks
    Verify {
        #[arg(value_enum, default_value = "fast")]
        level: verify::Level,
    },
    /// Green's function of d^4/dx^4 - a^2 d^2/dx^2 on a uniform grid
    Greens {
        /// Coefficient a > 0
        #[arg(long)]
        a: f64,
        /// Number of grid intervals per direction
        #[arg(long, default_value_t = 20)]
        grid: usize,
    },
    /// Rayleigh-Ritz estimates checked against [lambda_1, nu_1]
    Oracle {
        #[command(flatten)]
        select: HSelection,
        /// Beam modes along x
        #[arg(long, default_value_t = 14)]
        basis_m: usize,
        /// Beam modes along y
        #[arg(long, default_value_t = 14)]
        basis_n: usize,
    },
}

fn select(s: &HSelection, default: &[f64]) -> Result<Vec<f64>, CliError> {
    commands::h_values(&s.h, s.range.as_deref(), default)
}

/// Runs a parsed command and writes its table.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let out = OutputSpec::new(cli.output.format, cli.output.out, cli.output.precision)
        .map_err(CliError::Usage)?;
    let (table, failed): (Table, usize) = match cli.command {
        Command::Curves {
            alpha_min,
            alpha_max,
            steps,
            n_max,
        } => (commands::curves(alpha_min, alpha_max, steps, n_max)?, 0),
        Command::Bounds { select: s } => (commands::bounds(&select(&s, &commands::BOUNDS_GRID)?)?, 0),
        Command::Negativity { select: s } => {
            (commands::negativity(&select(&s, &commands::NEGATIVITY_GRID)?)?, 0)
        }
        Command::Verify { level } => {
            let checks = verify::run(level).map_err(|e| CliError::numerical("verify", e))?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            (verify::table(&checks), failed)
        }
        Command::Greens { a, grid } => (commands::greens(a, grid)?, 0),
        Command::Oracle {
            select: s,
            basis_m,
            basis_n,
        } => (
            commands::oracle(&select(&s, &commands::ORACLE_GRID)?, basis_m, basis_n)?,
            0,
        ),
    };
    out.emit(&table)?;
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
