mod commands;
mod config;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{geometry::SweepArgs, verify::VerifyCommand};
use crate::config::RunConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tangential::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Exact and numerical analysis of Legendrian graphs of tangential families.
#[derive(Debug, Parser)]
#[command(name = "lgraph", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the Legendrian graph of a family given as JSON (inline or a file path).
    Classify { input: String },
    /// Run a tangent-space check and compare it with the predicted outcome.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Trace the criminant and envelope of a family or planar map.
    Envelope {
        input: String,
        /// Also write the lifted surface as `<name>.obj`.
        #[arg(long)]
        obj: bool,
        /// Basename of the written files.
        #[arg(long, default_value = "envelope")]
        name: String,
    },
    /// Render a deformation sweep of the normal form into frame SVGs and a manifest.
    Sweep(SweepArgs),
    /// Randomized checks of the jet algebra laws.
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Classify { input } => commands::classify::run(cfg, input),
        Command::Verify { check } => commands::verify::run(cfg, check),
        Command::Envelope { input, obj, name } => commands::geometry::envelope(cfg, input, *obj, name),
        Command::Sweep(args) => commands::geometry::sweep(cfg, args),
        Command::Selfcheck { samples } => commands::selfcheck::run(cfg, *samples),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
