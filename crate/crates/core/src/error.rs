use thiserror::Error;

/// Failures surfaced by partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("malformed numeral: {0}")]
    Parse(String),
    #[error("zero is not a positive numeral")]
    Zero,
    #[error("subtraction underflow: minuend must exceed subtrahend")]
    Underflow,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown operation {0:?}")]
    UnknownOp(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, ArithError>;
