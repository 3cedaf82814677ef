//! Error type shared across the crate.

/// Errors reported by fallible operations.
///
/// Numerical routines that cannot fail on their stated domain return plain
/// values; everything that validates caller input returns [`Result`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter violated its documented domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two sequences (or a sequence and a permutation) disagree on length.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// A request exceeds what the implementation can materialize.
    #[error("resource limit: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
