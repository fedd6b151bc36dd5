//! `qcoop`: payoffs, classical and quantum coalition values, sweeps and
//! self-checks for the three-player quantum coalition game.
//!
//! Exit codes: 0 success, 1 property failure, 2 invalid state,
//! 3 config or usage error, 4 inadmissible state.

mod commands;
mod config;
mod format;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qcoop_core::verify::{VerifyOptions, DEFAULT_SEED};

use config::RunConfig;

#[derive(Debug)]
pub enum CliError {
    PropertyFailure(String),
    State(String),
    Config(String),
    Usage(String),
    Inadmissible(String),
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::PropertyFailure(_) => 1,
            CliError::State(_) => 2,
            CliError::Config(_) | CliError::Usage(_) => 3,
            CliError::Inadmissible(_) => 4,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::PropertyFailure(names) => write!(f, "property check failed: {names}"),
            CliError::State(msg) => write!(f, "invalid state: {msg}"),
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Inadmissible(names) => write!(f, "state is not admissible: {names}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "qcoop", version, about = "Three-player quantum coalition game engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-player payoffs from the trace and the closed form
    Payoff {
        /// JSON config file, or `-` for standard input
        config: PathBuf,
    },
    /// Admissibility, coalition values and motivation verdict for a state
    Analyze { config: PathBuf },
    /// Classical coalition game: matrix, dominance, optimal mixtures, values
    Classical,
    /// CSV sweep from |111> (t = 0) to |211> (t = 1)
    Sweep { config: PathBuf },
    /// Randomized property suite
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        /// Corrupt the trace-side constants (negative control)
        #[arg(long, hide = true)]
        corrupt_constants: bool,
        config: Option<PathBuf>,
    },
}

fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var("QCOOP_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Config(format!("QCOOP_SEED is not an unsigned integer: {text:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Payoff { config } => commands::payoff(&RunConfig::load(&config)?, out),
        Command::Analyze { config } => commands::analyze(&RunConfig::load(&config)?, out),
        Command::Classical => commands::classical(out),
        Command::Sweep { config } => commands::sweep(&RunConfig::load(&config)?, out),
        Command::Verify {
            seed,
            corrupt_constants,
            config,
        } => {
            let from_config = match config {
                Some(path) => RunConfig::load(&path)?.seed,
                None => None,
            };
            let seed = match seed.or(from_config) {
                Some(s) => s,
                None => seed_from_env()?.unwrap_or(DEFAULT_SEED),
            };
            let options = VerifyOptions {
                seed,
                corrupt_constants,
                ..VerifyOptions::default()
            };
            commands::verify(&options, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qcoop: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
