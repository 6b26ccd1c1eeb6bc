//! Command-line front end: dataset I/O, experiment configuration, benchmark
//! reproduction, and machine-readable result emission.
//!
//! Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical
//! failure (e.g. a non-convergent table fit).

pub mod args;
pub mod commands;
pub mod dataio;
pub mod records;

use clap::Parser;

use args::{Cli, Command};

/// Errors carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration or parameters (exit 2).
    Config(String),
    /// Unreadable or malformed data (exit 3).
    Data(String),
    /// Numerical failure such as non-convergence (exit 4).
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Data(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<projstat::Error> for CliError {
    fn from(e: projstat::Error) -> Self {
        use projstat::Error as E;
        match e {
            E::MaxTriesExhausted { .. } | E::NonConvergence { .. } => {
                CliError::Numerical(e.to_string())
            }
            E::InvalidMeasure(_) | E::OffsetOutOfRange { .. } => CliError::Data(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify(a) => commands::cmd_classify(a),
        Command::Tomo(a) => commands::cmd_tomo(a),
        Command::Test(t) => commands::cmd_test(t),
        Command::Gen(g) => commands::cmd_gen(g),
        Command::Bench(a) => commands::cmd_bench(a),
    }
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => match execute(cli) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        Err(e) => {
            // clap prints help/version on stdout (exit 0) and usage errors
            // on stderr (exit 2).
            let code = e.exit_code();
            let _ = e.print();
            code
        }
    }
}
