use super::geodesic::{reaches_within, walk};
use super::verified;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::VertexPartition;

/// Greedy shortest-path peeling. While two remaining vertices are joined by a
/// geodesic of `g` running through remaining vertices only, the longest such
/// geodesic is removed (ties go to the lexicographically smallest
/// `(low endpoint, high endpoint)`, walked from the low endpoint). Every
/// peeled path `a_1 .. a_k` contributes `{a_1}` and `{a_2 .. a_k}`; leftover
/// vertices become singletons. The result is checked and falls back to all
/// singletons if the check fails.
pub fn p1_partition(g: &Graph, d: &DistanceMatrix) -> VertexPartition {
    let n = g.order();
    let mut remaining = vec![true; n];
    let mut labels: Vec<usize> = (0..n).collect();

    while let Some(path) = longest_remaining_geodesic(g, d, &remaining) {
        for &v in &path {
            remaining[v] = false;
        }
        for &v in &path[1..] {
            labels[v] = path[1];
        }
    }

    let p = VertexPartition::from_labels(&labels);
    if verified(g, d, &p) {
        p
    } else {
        debug_assert!(false, "P1 construction failed verification");
        VertexPartition::singletons(n)
    }
}

fn longest_remaining_geodesic(g: &Graph, d: &DistanceMatrix, remaining: &[bool]) -> Option<Vec<usize>> {
    let n = g.order();
    // (length, low, high); larger length wins, then smaller endpoints
    let mut best: Option<(u32, usize, usize)> = None;
    let mut best_ok = Vec::new();
    for hi in 0..n {
        if !remaining[hi] {
            continue;
        }
        let ok = reaches_within(g, d, hi, remaining);
        for lo in 0..hi {
            if !ok[lo] {
                continue;
            }
            let len = d.get(lo, hi);
            let better = match best {
                None => true,
                Some((bl, blo, bhi)) => len > bl || (len == bl && (lo, hi) < (blo, bhi)),
            };
            if better {
                best = Some((len, lo, hi));
                best_ok.clone_from(&ok);
            }
        }
    }
    let (_, lo, hi) = best?;
    walk(g, d, lo, hi, &best_ok)
}
