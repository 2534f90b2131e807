use thiserror::Error;

/// Errors raised by the geometric kernels and constructions.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    /// An input violates the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numeric routine (root bracketing, refinement) failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl GeomError {
    pub fn domain(msg: impl Into<String>) -> Self {
        GeomError::Domain(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        GeomError::Numeric(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
