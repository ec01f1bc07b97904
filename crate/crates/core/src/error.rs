use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations contain a cycle through `{0}`")]
    Cycle(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("poset has {0} elements; at most 64 are supported")]
    TooManyElements(usize),
    #[error("invalid poset JSON: {0}")]
    Json(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(Vec<i64>),
    #[error("vertex {vertex} violates inequality row {row}")]
    InfeasibleVertex { vertex: usize, row: usize },
    #[error("vertices span an affine space of dimension {rank}, ambient dimension is {ambient}")]
    NotFullDimensional { rank: i64, ambient: usize },
    #[error("{0} is not a vertex index")]
    NotAVertex(usize),
    #[error("the origin is not a vertex")]
    OriginNotVertex,
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("polynomial has nonzero constant term")]
    ConstantTerm,
    #[error("subtraction leaves a negative coefficient at degree {0}")]
    NegativeCoefficient(usize),
    #[error("leaf with {size} elements exceeds the brute-force limit of {limit}")]
    LeafTooLarge { size: usize, limit: usize },

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unbound reference `{name}` at {line}:{column}")]
    UnboundRef {
        name: String,
        line: usize,
        column: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
