use thiserror::Error;

use crate::resolve::BoundsReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph not connected")]
    NotConnected,

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("vertex {0} belongs to the resolving set")]
    VertexInSet(usize),

    #[error("graph of order {n} exceeds the cap of {cap} for {what}")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("{0}")]
    Domain(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("search budget exceeded after {nodes} nodes")]
    KernelBudgetExceeded { nodes: u64 },

    /// The partition search ran out of nodes; carries the best bounds known at that point.
    #[error("search budget exceeded after {nodes} nodes (pd_s in [{}, {}])", .bounds.best_lower(), .bounds.best_upper())]
    BudgetExceeded { nodes: u64, bounds: Box<BoundsReport> },

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("ambiguous terminal assignment for end-vertex {0}")]
    AmbiguousTerminal(usize),

    #[error("graph has no major vertex (pure cycle); use p2_partition instead")]
    NoMajorVertex,

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
