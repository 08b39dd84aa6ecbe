use super::geodesic::geodesic_within;
use super::verified;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::VertexPartition;

/// Smallest verified candidate from [`p2_partition_from`] over every anchor
/// `b`, ties going to the lowest `b`. `None` when no anchor gives a partition
/// with fewer than `n` blocks.
pub fn p2_partition(g: &Graph, d: &DistanceMatrix) -> Option<VertexPartition> {
    let mut best: Option<VertexPartition> = None;
    for b in 0..g.order() {
        if let Some(p) = p2_partition_from(g, d, b) {
            if best.as_ref().map_or(true, |q| p.len() < q.len()) {
                best = Some(p);
            }
        }
    }
    best
}

/// Covers `V - {b}` by geodesics ending at `b`: the farthest uncovered vertex
/// (lowest index on ties) is joined to `b` through uncovered vertices, and the
/// path without `b` becomes a block. Returns `{b}` plus those blocks when every
/// step succeeds, the result verifies and it is not all singletons.
pub fn p2_partition_from(g: &Graph, d: &DistanceMatrix, b: usize) -> Option<VertexPartition> {
    let n = g.order();
    if b >= n {
        return None;
    }
    let mut allowed = vec![true; n];
    let mut labels = vec![b; n];
    let mut uncovered = n - 1;
    while uncovered > 0 {
        let far = (0..n)
            .filter(|&v| v != b && allowed[v])
            .max_by_key(|&v| (d.get(v, b), std::cmp::Reverse(v)))?;
        let path = geodesic_within(g, d, far, b, &allowed)?;
        for &v in &path[..path.len() - 1] {
            allowed[v] = false;
            labels[v] = far;
            uncovered -= 1;
        }
    }
    let p = VertexPartition::from_labels(&labels);
    (p.len() < n && verified(g, d, &p)).then_some(p)
}
