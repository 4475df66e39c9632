use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invariant violation [{tag}]: {detail}")]
    Invariant { tag: String, detail: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn invariant(tag: &str, detail: impl Into<String>) -> Self {
        Error::Invariant { tag: tag.to_string(), detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
