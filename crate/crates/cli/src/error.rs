//! Application errors and their exit codes.
//!
//! Exit codes are part of the CLI contract: 0 success, 2 input/parse
//! failure, 3 numeric failure, 4 selftest failure, 5 I/O failure.

use std::fmt;

#[derive(Debug)]
pub enum AppError {
    /// Malformed input file; `line` is 1-based and includes the header.
    Parse { path: String, line: usize, message: String },
    /// Invalid generator spec or flag combination.
    InvalidArg(String),
    /// A numeric operation could not produce a result (degenerate polar
    /// form, zero-signal envelope, ...).
    Numeric(String),
    /// One or more selftest criteria failed.
    SelftestFailed { failed: usize, total: usize },
    Io { path: String, source: std::io::Error },
}

impl AppError {
    pub const EXIT_PARSE: i32 = 2;
    pub const EXIT_NUMERIC: i32 = 3;
    pub const EXIT_SELFTEST: i32 = 4;
    pub const EXIT_IO: i32 = 5;

    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Parse { .. } | AppError::InvalidArg(_) => Self::EXIT_PARSE,
            AppError::Numeric(_) => Self::EXIT_NUMERIC,
            AppError::SelftestFailed { .. } => Self::EXIT_SELFTEST,
            AppError::Io { .. } => Self::EXIT_IO,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Parse { path, line, message } => {
                write!(f, "{path}:{line}: {message}")
            }
            AppError::InvalidArg(message) => write!(f, "invalid argument: {message}"),
            AppError::Numeric(message) => write!(f, "numeric failure: {message}"),
            AppError::SelftestFailed { failed, total } => {
                write!(f, "selftest: {failed} of {total} criteria failed")
            }
            AppError::Io { path, source } => write!(f, "{path}: {source}"),
        }
    }
}

impl std::error::Error for AppError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            AppError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}
