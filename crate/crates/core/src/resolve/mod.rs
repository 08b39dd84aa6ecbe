//! Strong resolving sets and partitions, and the exact solvers for the strong
//! metric dimension and the strong partition dimension.

mod bounds;
mod dimension;
mod partition;
mod pds;
mod predicates;
mod search;

use serde::{Deserialize, Serialize};

pub use bounds::{pds_bounds, Bound, BoundSource, BoundsReport};
pub use dimension::{
    brute_force_strong_metric_dimension, brute_force_strong_metric_dimension_with_cap,
    strong_metric_dimension, BRUTE_FORCE_CAP,
};
pub use partition::VertexPartition;
pub use pds::{strong_partition_dimension, DEFAULT_SEARCH_BUDGET, SEARCH_ORDER_CAP};
pub use predicates::{
    is_strong_resolving_partition, is_strong_resolving_set, set_strongly_resolves,
    vertex_strongly_resolves,
};

/// Witness attached to a dimension value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// A strong metric basis.
    Basis(Vec<usize>),
    /// A strong partition basis.
    Partition(VertexPartition),
}

impl Certificate {
    pub fn len(&self) -> usize {
        match self {
            Certificate::Basis(s) => s.len(),
            Certificate::Partition(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// How a [`DimensionResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Subset enumeration in size-ascending order.
    BruteForce,
    /// Minimum vertex cover of the strong resolving graph.
    VertexCover,
    /// A constructive upper bound already matched the lower bound.
    BoundsMeet(BoundSource),
    /// Exhaustive partition search over the levels between the bounds.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionResult {
    pub value: usize,
    pub certificate: Certificate,
    pub method: Method,
}
