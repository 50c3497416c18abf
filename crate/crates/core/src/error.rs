use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid tile: {0}")]
    InvalidTile(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A completed search produced something the construction rules out.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("invalid juggling pattern: {0}")]
    InvalidPattern(String),

    #[error("slice is not viable: {0}")]
    NonViableSlice(String),

    #[error("cannot substitute: {0}")]
    Substitution(String),

    #[error("too few variables: {0}")]
    TooFewVariables(String),

    #[error("cannot write output: {0}")]
    Output(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
