use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text or JSON input. Lines and columns are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Exhaustive enumeration refused because the dimension is above the configured bound.
    #[error("dimension {dimension} exceeds enumeration bound {bound}")]
    BoundExceeded { dimension: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not primary: {0}")]
    NotPrimary(String),

    /// A checker was asked to run on inputs that do not meet its hypothesis.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shift a single-line parse error onto `line`, offset by `column_offset` columns.
    pub(crate) fn relocate(self, line: usize, column_offset: usize) -> Self {
        match self {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line,
                column: column + column_offset,
                message,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
