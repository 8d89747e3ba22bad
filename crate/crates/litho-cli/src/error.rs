use std::fmt;

/// CLI failure classes, each with its own documented exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, config keys, or malformed numerics (exit 2).
    Parse(String),
    /// A physical precondition or invariant was violated (exit 3).
    Precondition(String),
    /// The oracle sweep found a mismatch beyond tolerance (exit 4).
    Verification(String),
    /// File could not be read or written (exit 5).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Precondition(msg) => write!(f, "{msg}"),
            CliError::Verification(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<litho_core::Error> for CliError {
    fn from(err: litho_core::Error) -> Self {
        CliError::Precondition(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}
