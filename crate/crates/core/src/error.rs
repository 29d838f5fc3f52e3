use thiserror::Error;

/// Errors raised while building or operating on groupoids.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry {value} at ({row}, {col}) is outside the carrier of order {order}")]
    ClosureViolation {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error("zero index {zero} is outside the carrier of order {order}")]
    BadZero { zero: usize, order: usize },
    #[error("bad table shape: {0}")]
    BadShape(String),
    #[error("operands have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {order} exceeds the limit of {limit} for this search")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("this operation needs a distinguished zero element")]
    MissingZero,
    #[error("groupoid does not have the orientation property")]
    NotOrientation,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// True for violated preconditions (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::OrderMismatch { .. }
                | Error::OrderTooLarge { .. }
                | Error::MissingZero
                | Error::NotOrientation
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
