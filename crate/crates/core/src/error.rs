use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input violates a documented contract: unknown label, subset out of
    /// range, circuit data that is not an oriented matroid, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A scale guard tripped. Every core algorithm here is exponential by
    /// design, so ground sets and circuit lists are capped hard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructive algorithm contradicted the theorem it relies on.
    /// This signals an implementation bug, never a property of the input.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
