//! Configuration-driven experiment runner for `fracctl`.
//!
//! Every subcommand writes its artifacts (CSV, JSON, dense binary) and a
//! `manifest.json` with the config hash, tool version, wall time and the
//! sha256 of each artifact. Exit status: 0 success, 2 config error, 3 a
//! tolerance check failed, 4 solver or I/O failure.

pub mod commands;
pub mod config;
pub mod problem;
pub mod runner;

pub use commands::{Artifact, Check, Outcome, Subcommand};
pub use config::Config;
pub use runner::{run, RunSummary};

#[derive(Debug)]
pub enum RunError {
    Config(Vec<String>),
    Solver(fracctl::Error),
    Io(std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Solver(_) | RunError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(v) => {
                writeln!(f, "invalid configuration:")?;
                for m in v {
                    writeln!(f, "  - {m}")?;
                }
                Ok(())
            }
            RunError::Solver(e) => write!(f, "solver failure: {e}"),
            RunError::Io(e) => write!(f, "i/o failure: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<fracctl::Error> for RunError {
    fn from(e: fracctl::Error) -> Self {
        match e {
            fracctl::Error::Io(io) => RunError::Io(io),
            other => RunError::Solver(other),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<serde_json::Error> for RunError {
    fn from(e: serde_json::Error) -> Self {
        RunError::Solver(e.into())
    }
}

/// Exit status for a finished run.
pub const EXIT_TOLERANCE: i32 = 3;
