//! Command-line surface for the mesoscope library: generate or load a
//! graph, detect communities, score them on the structural metrics, and
//! analyze a metric corpus, with every run recorded in a reproducible
//! manifest.

mod artifacts;
mod commands;
mod manifest;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Failures split by exit code: usage errors (2) versus runtime errors (1).
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<mesoscope::Error> for CliError {
    fn from(e: mesoscope::Error) -> CliError {
        CliError::Runtime(e.into())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Runtime(e.into())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> CliError {
        CliError::Runtime(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "mesoscope",
    version,
    about = "Characterize the community-level structure of networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a reference model (er, ws, ba)
    Generate(commands::generate::Args),
    /// Detect communities and write a partition file
    Detect(commands::detect::Args),
    /// Score the communities of a partition on nine structural metrics
    Metrics(commands::metrics::Args),
    /// Correlate and map a corpus of metric records
    Profile(commands::profile::Args),
    /// Classify one (CCF, hub dominance) coordinate pair
    Classify(commands::classify::Args),
    /// Run generate/load, detect, metrics, and profile in one pass
    Pipeline(commands::pipeline::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(args) => commands::generate::run(args),
        Command::Detect(args) => commands::detect::run(args),
        Command::Metrics(args) => commands::metrics::run(args),
        Command::Profile(args) => commands::profile::run(args),
        Command::Classify(args) => commands::classify::run(args),
        Command::Pipeline(args) => commands::pipeline::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
