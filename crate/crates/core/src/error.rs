use thiserror::Error;

use crate::solvers::ParameterKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph of order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("edge ({u}, {v}) is a loop")]
    LoopEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} is not in the given set")]
    NotInSet { vertex: usize },
    #[error("sets overlap on vertices {overlap:?}")]
    OverlappingSets { overlap: Vec<usize> },
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    #[error("corpus line {line}: {source}")]
    CorpusLine { line: usize, source: Box<Error> },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid graph family: {0}")]
    InvalidFamily(String),
    #[error("{kind} is undefined: vertex {vertex} is isolated")]
    IsolatedVertex { kind: ParameterKind, vertex: usize },
    #[error("{kind} on {n} vertices exceeds the solver cap of {cap}")]
    SolverCap { kind: ParameterKind, n: usize, cap: usize },
    #[error("{0} is not a vertex-set parameter")]
    NotASetKind(ParameterKind),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
