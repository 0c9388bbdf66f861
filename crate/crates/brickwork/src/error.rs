//! Error type shared across the crate.

/// Errors surfaced by library operations.
///
/// Enumeration and counting functions that are total (weight overflow
/// yields empty lists or zero counts) do not error; errors are reserved
/// for violated preconditions, parse failures, resource guards, and
/// internal consistency checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs does not hold.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text could not be parsed as the requested object.
    #[error("parse error: {0}")]
    Parse(String),

    /// A series did not reach a constant tail within its truncation.
    #[error(
        "no stabilization: no {window} consecutive equal coefficients within degrees 0..={examined_to}"
    )]
    NotStabilized { window: usize, examined_to: usize },

    /// A guard refused a computation that would exceed desk-scale limits.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal consistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI contract: parse/usage errors and
    /// resource refusals are usage errors (2); the rest are failures (1).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) | Error::ResourceLimit(_) => 2,
            _ => 1,
        }
    }
}
