use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("element {0} does not belong to the graph")]
    UnknownElement(String),

    #[error("{what} limit exceeded: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid selector: {0}")]
    Selector(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("infeasible system")]
    Infeasible,

    #[error("not a cone: {0}")]
    NotACone(String),

    #[error("inequality is not valid: violated by a total matching")]
    NotValid,

    #[error("point has no lift: {0}")]
    NoLift(String),

    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
