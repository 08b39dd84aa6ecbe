use super::Graph;
use crate::error::{Error, Result};

/// `G □ H`. Vertex `(a, b)` maps to index `a * |H| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let mut p = Graph::empty(ng * nh);
    for a in 0..ng {
        for (b, d) in h.edges() {
            p.add_edge(a * nh + b, a * nh + d);
        }
    }
    for (a, c) in g.edges() {
        for b in 0..nh {
            p.add_edge(a * nh + b, c * nh + b);
        }
    }
    p
}

/// Disjoint union; `h`'s vertices are shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut u = Graph::empty(off + h.order());
    for (a, b) in g.edges() {
        u.add_edge(a, b);
    }
    for (a, b) in h.edges() {
        u.add_edge(a + off, b + off);
    }
    u
}

/// `G + H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut j = disjoint_union(g, h);
    for a in 0..off {
        for b in 0..h.order() {
            j.add_edge(a, off + b);
        }
    }
    j
}

/// Subgraph induced by `set`, relabelled so the ascending members become `0..|set|`.
pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Result<Graph> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in members.iter().enumerate() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            });
        }
        index[v] = i;
    }
    let mut h = Graph::empty(members.len());
    for (i, &v) in members.iter().enumerate() {
        for &w in g.neighbors(v).range(v + 1..) {
            if index[w] != usize::MAX {
                h.add_edge(i, index[w]);
            }
        }
    }
    Ok(h)
}
