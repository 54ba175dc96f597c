use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("ordering is not a permutation of the {n} vertices")]
    NotAPermutation { n: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("graph is not signed-eliminable")]
    NotEliminable,
    #[error("{kind} needs path length at least {min}, got {n}")]
    FamilyTooSmall { kind: &'static str, n: usize, min: usize },
    #[error("conditions and greedy elimination disagree on graph: {0}")]
    CharacterizationMismatch(String),
    #[error("worker pool: {0}")]
    WorkerPool(String),
}

impl Error {
    /// Strips any line-number wrapper.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }
}
