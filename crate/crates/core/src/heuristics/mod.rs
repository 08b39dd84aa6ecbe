//! Constructive strong resolving partitions. Each one is checked with
//! [`is_strong_resolving_partition`] before it is handed out, so its size is
//! always a valid upper bound on `pd_s`.

mod geodesic;
mod p1;
mod p2;
mod unicyclic;

pub use p1::p1_partition;
pub use p2::{p2_partition, p2_partition_from};
pub use unicyclic::{unicyclic_analysis, unicyclic_partition, UnicyclicStructure};

use crate::boundary::simplicial_vertices;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::{is_strong_resolving_partition, VertexPartition};

pub(crate) fn verified(g: &Graph, d: &DistanceMatrix, p: &VertexPartition) -> bool {
    is_strong_resolving_partition(g, d, p).unwrap_or(false)
}

/// `{v_1}, ..., {v_k}, V - S` for a strong resolving set `S`; just the
/// singletons when `S` is all of `V`.
pub fn basis_partition(n: usize, basis: &[usize]) -> VertexPartition {
    let mut in_basis = vec![false; n];
    for &v in basis {
        in_basis[v] = true;
    }
    let mut blocks: Vec<Vec<usize>> = basis.iter().map(|&v| vec![v]).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !in_basis[v]).collect();
    if !rest.is_empty() {
        blocks.push(rest);
    }
    VertexPartition::new(blocks).expect("basis partition covers 0..n")
}

/// Takes the first diametral pair `(a, b)` and a geodesic `a = p_0, ..., p_D = b`;
/// returns `{a}`, `{p_1..p_D}` and singletons for everything else, for
/// `n - D + 1` blocks.
pub fn diameter_partition(g: &Graph, d: &DistanceMatrix) -> VertexPartition {
    let n = g.order();
    let diam = d.max();
    let (a, b) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| d.get(a, b) == diam)
        .expect("nonempty graph");
    if a == b {
        return VertexPartition::singletons(n);
    }
    let path = geodesic::geodesic_within(g, d, a, b, &vec![true; n]).expect("connected graph");
    let mut labels: Vec<usize> = (0..n).collect();
    for &v in &path[1..] {
        labels[v] = path[1];
    }
    VertexPartition::from_labels(&labels)
}

/// For a block graph: every simplicial vertex but the last as a singleton,
/// everything else in one block.
pub fn block_graph_partition(g: &Graph) -> VertexPartition {
    let mut simplicial = simplicial_vertices(g);
    simplicial.pop();
    basis_partition(g.order(), &simplicial)
}
