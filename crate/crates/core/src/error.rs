use thiserror::Error;

/// Errors raised by the construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: exponent matrix is {exp_rows}x{exp_cols}, base matrix is {base_rows}x{base_cols}")]
    DimensionMismatch {
        exp_rows: usize,
        exp_cols: usize,
        base_rows: usize,
        base_cols: usize,
    },
    #[error("lifting degree must be at least 2, got {0}")]
    LiftingDegree(usize),
    #[error("invalid exponent matrix: {0}")]
    Invalid(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("walk is not a closed walk of the protograph: {0}")]
    BadWalk(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    Params(String),
}

pub type Result<T> = std::result::Result<T, Error>;
