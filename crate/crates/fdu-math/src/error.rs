use crate::series::SeriesValue;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A documented input constraint was violated. The message names it.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The series ran out of its term budget before the tail bound met the
    /// requested tolerance.
    #[error("series truncation failed after {} terms (tail bound {:.3e})", partial.terms_used, partial.tail_bound)]
    Truncation { partial: SeriesValue },

    #[error("oracle failure: {0}")]
    Oracle(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for failures caused by the caller's inputs rather than by the
    /// numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidInput(_))
    }
}
