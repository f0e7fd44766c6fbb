use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// `position` is a 0-based character offset into the offending literal.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("homomorphism is not well defined: {0}")]
    IllDefined(String),

    #[error("mismatched objects: {0}")]
    Mismatch(String),

    #[error("group is infinite: {0}")]
    Infinite(String),

    #[error("size bound exceeded: {0}")]
    TooLarge(String),

    /// A mathematically impossible state was reached; always a bug.
    #[error("internal contract violated: {0}")]
    Contract(String),
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
