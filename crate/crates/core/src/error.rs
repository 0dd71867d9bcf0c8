use thiserror::Error;

/// Everything that can go wrong in the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} has size {size}, above the limit of {limit} (use force to override)")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("edge index {index} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("cannot contract loop {0}")]
    ContractLoop(usize),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("no value assigned to variable {0}")]
    Unassigned(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
