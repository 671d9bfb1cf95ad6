use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A parameter bound of the model was violated; the message names it.
    #[error("{0}")]
    BoundViolation(String),

    #[error("resource guard: {what} is {actual}, limit {limit}")]
    ResourceGuard {
        what: String,
        actual: u128,
        limit: u128,
    },

    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),

    #[error("differential does not square to zero on {witness}")]
    NotSquareZero { witness: String },

    /// Two independent computations disagree.
    #[error("consistency failure in {context} at {cell}")]
    Inconsistent { context: String, cell: String },
}

impl Error {
    /// True for errors caused by bad input rather than an internal mismatch.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::NotSquareZero { .. } | Error::Inconsistent { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
