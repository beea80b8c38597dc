use thiserror::Error;

/// Failures of the polynomial kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree cap exceeded: {requested} > {cap}")]
    DegreeCap { requested: u32, cap: u32 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

/// Failures of the covariant machinery built on top of the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
