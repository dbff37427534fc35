use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("mismatched parabolics: {0}")]
    Mismatch(String),
    #[error("truncation insufficient: {0}")]
    Truncation(String),
    #[error("precision insufficient: {0}")]
    Precision(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("computation: {0}")]
    Computation(String),
}

impl Error {
    /// Process exit code: 2 for bad invocations, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
