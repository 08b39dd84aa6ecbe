//! Strong metric dimension and strong partition dimension of graphs: exact
//! solvers with verified certificates, constructive bounds and generators for
//! graph families with known values.

pub mod boundary;
pub mod error;
pub mod families;
pub mod graph;
pub mod heuristics;
pub mod kernels;
pub mod resolve;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, DistanceMatrix, Graph};
pub use resolve::{
    strong_metric_dimension, strong_partition_dimension, Certificate, DimensionResult, Method,
    VertexPartition,
};
