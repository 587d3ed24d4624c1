use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no limit at p = 0, q = 0 for {0}")]
    Pole(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a minimal coset representative")]
    NotMinimalCoset(String),
    #[error("{what} needs {needed}, above the guard of {guard}")]
    SizeLimit {
        what: String,
        needed: u64,
        guard: u64,
    },
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("out of range for rank {rank}: {what}")]
    Rank { rank: usize, what: String },
    #[error("invariant violated: {0}")]
    Internal(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
