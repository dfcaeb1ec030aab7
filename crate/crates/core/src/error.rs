use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("ordering is not a well-ordering: {0}")]
    NotWellOrdered(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("iteration budget exhausted after k = {0}")]
    Budget(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
