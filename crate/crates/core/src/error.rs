use thiserror::Error;

/// Errors raised by the library. Verdicts (pass/fail) are never errors; these
/// signal malformed input or violated preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mixed fields: {0}")]
    MixedField(String),
    #[error("not a face: {0}")]
    NotAFace(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("improper realization: {0}")]
    Improper(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("size limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
