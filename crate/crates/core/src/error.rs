use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of the gamma function at {0}")]
    Pole(f64),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("series did not converge after {terms} terms")]
    NoConvergence { terms: usize },
    #[error("quadrature tolerance not met: estimated error {est_error:e} for value {value:e}")]
    ToleranceNotMet { value: f64, est_error: f64 },
    #[error("divergent integral: {0}")]
    DivergentIntegral(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Short machine-friendly name, as printed by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Pole(_) => "PoleError",
            Error::Overflow(_) => "OverflowError",
            Error::InvalidParams(_) => "InvalidParams",
            Error::Divergent(_) => "Divergent",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ToleranceNotMet { .. } => "ToleranceNotMet",
            Error::DivergentIntegral(_) => "DivergentIntegral",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}
