//! `tenrec`: simulate, solve and analyze the tenth-order rational recurrence
//! `x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})`.
//!
//! Exit codes: 0 success, 1 failed verification (mismatch or residual over
//! tolerance), 2 invalid configuration, 3 orbit hit the forbidden set.

mod commands;
mod config;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tenrec::Figure;

use crate::config::{ConfigArgs, ConfigError};

#[derive(Debug, Parser)]
#[command(
    name = "tenrec",
    version,
    about = "Exact tools for a tenth-order rational difference equation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct HorizonArgs {
    /// Number of terms, counting the ten seeds
    #[arg(long = "horizon", visible_alias = "n")]
    pub horizon: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Iterate the recurrence and print the orbit
    Simulate {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        horizon: HorizonArgs,
    },
    /// Evaluate every applicable closed form at x_{10n+k}
    Closed {
        #[command(flatten)]
        config: ConfigArgs,
        /// Residue k in 0..=9 of the target shifted index
        #[arg(long)]
        k: usize,
        /// Block count n of the target shifted index 10n+k
        #[arg(long)]
        n: usize,
    },
    /// Compare closed forms with the iterated orbit, index by index
    Compare {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        horizon: HorizonArgs,
        /// Run this many seeded random instances instead of the given configuration
        #[arg(long)]
        trials: Option<usize>,
        /// Coefficient family for random trials
        #[arg(long, value_enum, default_value_t = commands::compare::TrialKind::Constant)]
        kind: commands::compare::TrialKind,
        /// Print only one summary row per trial
        #[arg(long)]
        summary: bool,
    },
    /// Periodicity conditions, minimal period and stability as JSON
    Analyze {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        horizon: HorizonArgs,
        /// Largest period searched
        #[arg(long, default_value_t = 40)]
        max_period: usize,
    },
    /// Check the symmetry characteristics at sample points
    SymmetryCheck {
        /// Random sample points per k
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Largest n for the alpha-sum check
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        #[arg(long, default_value_t = 20240917)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = config::Format::Csv)]
        format: config::Format,
    },
    /// Emit the orbit of a figure preset as CSV
    Figure {
        name: Figure,
        /// Number of terms
        #[arg(long, default_value_t = 60)]
        terms: usize,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Simulate { config, horizon } => {
            commands::simulate::run(&config.build()?, horizon.horizon.unwrap_or(40), out)
        }
        Command::Closed { config, k, n } => commands::closed::run(&config.build()?, k, n, out),
        Command::Compare {
            config,
            horizon,
            trials,
            kind,
            summary,
        } => {
            let horizon = horizon.horizon.unwrap_or(300);
            match trials {
                Some(t) => commands::compare::run_batch(t, kind, horizon, &config, summary, out),
                None => commands::compare::run_single(&config.build()?, horizon, summary, out),
            }
        }
        Command::Analyze {
            config,
            horizon,
            max_period,
        } => commands::analyze::run(&config.build()?, horizon.horizon.unwrap_or(200), max_period, out),
        Command::SymmetryCheck {
            points,
            max_n,
            seed,
            format,
        } => commands::symmetry::run(points, max_n, seed, format, out),
        Command::Figure { name, terms } => commands::figure::run(name, terms, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(code) => {
            if let Err(e) = flushed {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<ConfigError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
