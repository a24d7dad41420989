use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0}: parts must be nonnegative and weakly decreasing")]
    InvalidPartition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("weight {weight} is not dominant for {algebra}")]
    NotDominant { weight: String, algebra: String },

    #[error("weight {weight} is not integral for {algebra}")]
    NotIntegral { weight: String, algebra: String },

    #[error("outside the stable range: {0}")]
    OutsideStableRange(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("peeling failed: {0}")]
    Peel(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
    }
}
