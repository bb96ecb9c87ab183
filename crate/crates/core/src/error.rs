use thiserror::Error;

/// Errors raised by the graph, linear-algebra and spectral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported size: {0}")]
    Unsupported(String),

    #[error("linear system has no unique solution (rank {rank} < {needed})")]
    NoUniqueSolution { rank: usize, needed: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
