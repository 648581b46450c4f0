use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element does not belong to group {group}")]
    GroupMismatch { group: String },
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("invalid automorphism parameters: {0}")]
    InvalidAutomorphism(String),
    #[error("numerical integrity failure: {context} (residual {residual})")]
    NumericalIntegrity { context: String, residual: f64 },
    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
