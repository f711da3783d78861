use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty creation string")]
    Empty,

    #[error("invalid character {found:?} at position {position} in creation string")]
    InvalidCharacter { found: char, position: usize },

    #[error("malformed run-length token {0:?}")]
    MalformedRun(String),

    #[error("creation string must start with 0 (first vertex is added to the empty graph)")]
    LeadingOne,

    #[error("creation string ends with 0: the graph is disconnected")]
    Disconnected,

    #[error("creation string needs at least 2 vertices, got {0}")]
    TooShort(usize),

    #[error("order {order} exceeds the configured maximum of {max}")]
    TooLarge { order: usize, max: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("expected {expected} matrix entries, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has order zero")]
    EmptyMatrix,

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,

    #[error("spectrum has no positive eigenvalue")]
    NoPositiveEigenvalue,

    #[error("vertex index {index} is out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("vertex indices must be nonempty and strictly increasing")]
    UnsortedIndices,

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("order {order} is below the minimum {min} for this operation")]
    OrderTooSmall { order: usize, min: usize },

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
