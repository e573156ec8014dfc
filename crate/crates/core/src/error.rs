use thiserror::Error;

use crate::graph::{Edge, Violation};

/// Errors raised by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(Violation),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("not a block graph: block {block:?} lacks edge {missing}")]
    NotBlockGraph { block: Vec<usize>, missing: Edge },
    #[error("shortest path between {u} and {v} is not unique")]
    NonUniquePath { u: usize, v: usize },
    #[error("graph is not RCOP: {0}")]
    NotRcop(String),
    #[error("group closure exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("fiber has more than {0} points")]
    FiberCapExceeded(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("graph is not complete: missing edge {0}")]
    NotComplete(Edge),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} is limited to {limit} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
