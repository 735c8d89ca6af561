//! Pipeline behind the `sl21` command: invariants, sweeps over `a1`,
//! recurrence guessing with certificates, and the verification suite.

mod commands;
mod job;
mod verify;

pub use commands::{
    GuessSource,
    cmd_guess, cmd_invariant, cmd_sweep, guess_table, sweep_table, Budget, GuessOutcome, GuessStatus, InvariantDoc,
    SweepDoc, SweepRow, ValueKind,
};
pub use job::{parse_color, ColorSpec, JobSpec};
pub use verify::{cmd_verify, CheckResult, Level, VerifyReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    /// Process exit code: 1 usage, 2 verification, 3 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}
