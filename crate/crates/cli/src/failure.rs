use std::fmt;

use borel_forge::Error;

/// Everything that can stop a command, with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input at a 1-based line and column.
    Parse { source: String, line: usize, column: usize, message: String },
    /// A file could not be read.
    Io { path: String, message: String },
    /// Bad command line or configuration value.
    Usage(String),
    /// A kernel error.
    Core(Error),
    /// A verification ran and found failures.
    Failed(String),
}

impl CliError {
    pub fn parse(source: &str, line: usize, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse { source: source.to_string(), line, column, message: message.into() }
    }

    /// 1 verification failure, 2 bad input, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
            CliError::Core(e) => match e {
                Error::BudgetExceeded { .. } | Error::WeightNotFound { .. } => 3,
                Error::Parse { .. }
                | Error::InvalidSystem(_)
                | Error::UnknownRelation(_)
                | Error::WidthMismatch { .. }
                | Error::DegreeMismatch { .. }
                | Error::MixedDegrees(..)
                | Error::NotHomogeneous => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { source, line, column, message } => write!(f, "{source}:{line}:{column}: {message}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
