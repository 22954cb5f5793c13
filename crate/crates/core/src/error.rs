use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate edge id {0}")]
    DuplicateEdge(i64),

    #[error("arc {0} listed more than once in rotations")]
    DuplicateArc(i64),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("perforation marker names unknown arc {0}")]
    UnknownPerforation(i64),

    #[error("surface graph is not connected")]
    Disconnected,

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),

    #[error("not a system of quads: {0}")]
    NotQuadSystem(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
