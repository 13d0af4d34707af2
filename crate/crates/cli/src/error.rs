//! CLI error kinds and their process exit codes.

use std::fmt;

use molien_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    /// Malformed flags or spec parameters; exit 1.
    Usage(String),
    /// A validation error from the engine (bad params, unstable subgroup);
    /// exit 1.
    Validation(CoreError),
    /// An enumeration cap was exceeded; exit 2.
    Capacity(CoreError),
    /// A computed value contradicts an identity it must satisfy; exit 3.
    Consistency(String),
    /// Filesystem trouble reading specs or writing reports; exit 1.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Validation(_) | CliError::Io(_) => 1,
            CliError::Capacity(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{}", msg),
            CliError::Validation(e) => write!(f, "{}", e),
            CliError::Capacity(e) => write!(f, "{}", e),
            CliError::Consistency(msg) => write!(f, "consistency failure: {}", msg),
            CliError::Io(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Capacity { .. } => CliError::Capacity(e),
            _ => CliError::Validation(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
