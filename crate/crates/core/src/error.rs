use thiserror::Error;

/// Errors reported by construction, recognition-gated algorithms and I/O.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("hypergraph has no hyperedges")]
    Empty,
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("hyperedge {edge} contains vertex {vertex} more than once")]
    DuplicateVertex { edge: usize, vertex: usize },
    #[error("vertex id {vertex} in hyperedge {edge} is out of range (n = {n})")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("vertex {0} is not contained in any hyperedge")]
    IsolatedVertex(usize),
    #[error("hypergraph is not alpha-acyclic")]
    NotAcyclic,
    #[error("hypergraph is not beta-acyclic")]
    NotBeta,
    #[error("hypergraph is not gamma-acyclic")]
    NotGamma,
    #[error("hypergraph is not an interval hypergraph")]
    NotInterval,
    #[error("invalid join tree: {0}")]
    InvalidJoinTree(String),
    #[error("reserved vertex name {0:?} already used by the input")]
    NameCollision(String),
    #[error("set family is empty")]
    EmptyFamily,
    #[error("input too large for this oracle: {0}")]
    TooLarge(String),
    #[error("generator gave up after {0} attempts")]
    RetryExhausted(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
