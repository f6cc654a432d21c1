use thiserror::Error;

/// Errors raised by the engine.
///
/// Invalid input and exhausted resource budgets are kept apart so front ends
/// can map them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource cap exceeded: {what} needs more than {cap} monomials")]
    ResourceCap { what: String, cap: usize },

    #[error("instance outside oracle limits: {0}")]
    OracleCap(String),

    /// An internal consistency check failed. Seeing this is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap { .. } | Error::OracleCap(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
