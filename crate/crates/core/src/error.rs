use thiserror::Error;

/// Problems with graphs, partitions, weights and instance files.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("vertex {vertex} out of range for n = {n} (entry {index})")]
    OutOfRange {
        vertex: usize,
        n: usize,
        index: usize,
    },
    #[error("self-loop at vertex {vertex} (entry {index})")]
    SelfLoop { vertex: usize, index: usize },
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("vertex {vertex} appears in blocks {first} and {second}")]
    OverlappingBlocks {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("partition has no blocks")]
    NoBlocks,
    #[error("blocks do not cover vertex {vertex}")]
    NotAPartition { vertex: usize },
    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

impl ModelError {
    /// Prefixes the error with the instance field it came from.
    pub fn in_field(self, field: &str) -> ModelError {
        match self {
            ModelError::Invalid {
                field: inner,
                message,
            } => ModelError::Invalid {
                field: format!("{field}.{inner}"),
                message,
            },
            other => {
                let field = match &other {
                    ModelError::OutOfRange { index, .. } | ModelError::SelfLoop { index, .. } => {
                        format!("{field}[{index}]")
                    }
                    ModelError::EmptyBlock { block } => format!("{field}[{block}]"),
                    ModelError::OverlappingBlocks { second, .. } => format!("{field}[{second}]"),
                    _ => field.to_string(),
                };
                ModelError::Invalid {
                    field,
                    message: other.to_string(),
                }
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("independent-set enumeration exceeds the column cap of {cap}")]
    CapExceeded { cap: usize },
    #[error(
        "covering problem is infeasible: row {row} has positive demand and no covering column"
    )]
    Infeasible { row: usize },
    #[error("instance lacks `{0}`, which this operation requires")]
    Missing(&'static str),
    #[error("block {block} carries mass greater than 1")]
    BlockOverflow { block: usize },
    #[error("negative entry at vertex {vertex}")]
    NegativeEntry { vertex: usize },
    #[error("vertex {vertex} carries mass but lies outside every block")]
    OutsideBlocks { vertex: usize },
    #[error("internal check failed at {step}: {detail}")]
    InternalCheckFailed { step: &'static str, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
