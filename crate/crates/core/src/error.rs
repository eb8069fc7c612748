use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} is outside 0..{n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("edge ({u}, {v}) is already present")]
    EdgeAlreadyPresent { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has order {n}; at least 2 vertices are required")]
    TooSmall { n: usize },
    #[error("{what} is capped at {cap} vertices but the graph has {n}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("graph has cycle rank {rank}; a unicyclic graph is required")]
    NotUnicyclic { rank: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is a path; this construction needs a major vertex")]
    PathInput,
    #[error("landmark set is empty")]
    EmptyLandmarks,
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown check `{name}`; valid checks: {valid}")]
    UnknownCheck { name: String, valid: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
