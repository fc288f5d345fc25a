use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range for a graph with {m} edges")]
    BadEdgeId { edge: usize, m: usize },
    #[error("bad vertex set: {0}")]
    BadVertexSet(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("synthesis failed after {0} target-degree bumps")]
    RetriesExhausted(usize),
    #[error("no representation found within universe bound {0}")]
    NotFoundWithinBound(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
