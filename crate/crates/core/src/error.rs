use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, cap is {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex} not allowed")]
    SelfLoop { vertex: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("unknown graph family: {0}")]
    UnknownFamily(String),

    #[error("invalid parameters for family {family}: {reason}")]
    InvalidFamilyParams { family: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
