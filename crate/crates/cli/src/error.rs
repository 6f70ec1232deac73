use std::fmt;
use std::io;

/// Failure of a run, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable inputs, unmet preconditions: exit 2.
    Usage(String),
    /// The computation itself failed (no convergence, empty sets): exit 3.
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) => f.write_str(m),
        }
    }
}

impl From<julia_limits::Error> for CliError {
    fn from(e: julia_limits::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}
