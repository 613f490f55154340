use thiserror::Error;

/// Errors raised by the analytical engine, the simulator and the CLI layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of a function or formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration did not reach its tolerance within the term budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A computed quantity violates a structural guarantee (sign, range).
    #[error("validity check failed: {0}")]
    Validity(String),

    /// Invalid user configuration.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of the numerical machinery rather than of the inputs.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Convergence(_) | Error::Quadrature(_) | Error::Validity(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
