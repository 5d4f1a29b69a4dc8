use std::fmt;

use hurwitz_core::Error;

/// Failures, grouped by exit code.
#[derive(Debug)]
pub enum CliError {
    /// A mathematical invariant failed (exit 1).
    Invariant(String),
    /// A requested check did not hold (exit 1).
    Check(String),
    /// Bad arguments or out-of-range input (exit 2).
    Input(String),
    /// Reading or writing files (exit 3).
    Io(String),
    /// The reader of stdout went away; not a failure (exit 0).
    Closed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) | CliError::Check(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
            CliError::Closed => 0,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invariant(m) => write!(f, "invariant violation: {m}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Closed => write!(f, "output closed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_invariant_violation() {
            CliError::Invariant(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError::Closed;
        }
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.kind() {
            csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe => {
                CliError::Closed
            }
            _ => CliError::Io(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        match e.io_error_kind() {
            Some(std::io::ErrorKind::BrokenPipe) => CliError::Closed,
            _ => CliError::Io(e.to_string()),
        }
    }
}
