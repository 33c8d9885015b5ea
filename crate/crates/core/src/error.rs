use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BpdError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("edge {edge} has color {actual}, expected {expected}")]
    ColorMismatch {
        edge: Edge,
        expected: crate::graph::Color,
        actual: crate::graph::Color,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent kernel trace: {0}")]
    Trace(String),

    #[error("invalid formula: {0}")]
    Formula(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for BpdError {
    fn from(e: std::io::Error) -> Self {
        BpdError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, BpdError>;
