use thiserror::Error;

use crate::florentine::Violation;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A construction produced a rectangle that failed its own check.
    #[error("internal consistency failure in {construction}: {violation}")]
    Consistency {
        construction: &'static str,
        violation: Violation,
    },

    /// A permutation family broke pair uniqueness.
    #[error(
        "pair uniqueness violated: rows {first} and {second} agree {count} times at shift {shift}"
    )]
    PairUniqueness {
        first: usize,
        second: usize,
        shift: usize,
        count: usize,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A correlation bound does not apply to the given parameters.
    #[error("bound not applicable: {0}")]
    NotApplicable(String),

    /// The applicable lower bound is zero while the observed correlation is not.
    #[error("optimality factor is unbounded (bound is zero, delta = {delta})")]
    Unbounded { delta: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
