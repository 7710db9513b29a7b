use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input (numbers, tensors, field names).
    #[error("parse error: {0}")]
    Parse(String),
    /// Input violating an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A sampler or search ran out of its retry budget.
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// An internal consistency check failed. Always a bug or a counterexample.
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
