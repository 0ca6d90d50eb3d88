use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent set sizes: inclusion-exclusion gives {0}")]
    Inconsistent(String),

    #[error("{what} exceeds the supported limit of {limit}")]
    TooLarge { what: &'static str, limit: u64 },

    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("characteristic polynomial has repeated roots")]
    RepeatedRoots,

    #[error("denominator has a repeated factor")]
    RepeatedFactor,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no Eulerian walk ({0} vertices of odd degree)")]
    NoEulerianWalk(usize),

    #[error("graph is not complete")]
    NotComplete,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("operation requires a simple graph")]
    NotSimple,

    #[error("invalid augmenting path: {0}")]
    InvalidPath(String),

    #[error("no value found up to cap {0}")]
    CapExceeded(u64),

    #[error("point lies on the boundary of circle {0}")]
    BoundaryPoint(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
