use thiserror::Error;

/// Failure classes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ill-formed input: {0}")]
    IllFormed(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The input violates a hypothesis (connectedness, non-bipartiteness,
    /// bicyclicity) that the requested quantity depends on.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("infeasible system: {0}")]
    Infeasible(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A constructed certificate failed its own exact verification.
    #[error("construction mismatch: {0}")]
    ConstructionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
