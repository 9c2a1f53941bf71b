use thiserror::Error;

/// Position-annotated input error, used by every text parser in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    Irregular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("graph is not bipartite with equal parts: {0}")]
    NotBalancedBipartite(String),

    #[error("rank {0} exceeds the 16-bit color cap")]
    RankOverflow(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid intersection array: {0}")]
    InvalidArray(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("{n} vertices exceeds the search limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
