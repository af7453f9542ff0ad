use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix or Bloch vector fails density-operator validation.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// The elliptic measurement domain collapses (s0 * s1 * sin(phi) = 0).
    #[error("degenerate domain: s0*s1*sin(phi) = {0:e}")]
    DegenerateDomain(f64),

    /// The closed form only covers equal-purity states.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidState(msg.into())
    }
}
