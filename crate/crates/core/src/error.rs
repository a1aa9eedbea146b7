use alloc::string::String;

/// Errors reported by the core routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Arguments outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A degree sequence whose excess `r = Σ(d_i - 2)` is odd.
    #[error("parity error: excess r = {0} is odd")]
    Parity(u64),
    /// An input that is valid but carries no structure to work on.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// A malformed tree or graph.
    #[error("structural error: {0}")]
    Structural(String),
    /// A rejection sampler ran out of attempts.
    #[error("retry budget exhausted after {attempts} attempts")]
    RetryExhausted { attempts: u64 },
    /// Input too large for an exact solver.
    #[error("size error: {0}")]
    Size(String),
    /// A broken internal invariant (e.g. a root that failed to bracket).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
