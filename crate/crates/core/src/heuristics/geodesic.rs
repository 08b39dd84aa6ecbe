use crate::graph::{DistanceMatrix, Graph};

/// For every vertex, whether a shortest path to `to` exists that stays inside
/// `allowed`. Vertices are settled in order of distance to `to`.
pub(crate) fn reaches_within(g: &Graph, d: &DistanceMatrix, to: usize, allowed: &[bool]) -> Vec<bool> {
    let n = g.order();
    let mut by_dist: Vec<usize> = (0..n).collect();
    by_dist.sort_by_key(|&v| d.get(v, to));
    let mut ok = vec![false; n];
    for v in by_dist {
        if !allowed[v] {
            continue;
        }
        let dv = d.get(v, to);
        ok[v] = dv == 0 || g.neighbors(v).iter().any(|&w| ok[w] && d.get(w, to) + 1 == dv);
    }
    ok
}

/// Shortest `from`-`to` path inside `allowed`, choosing the lowest-index next
/// vertex at every step.
pub(crate) fn geodesic_within(
    g: &Graph,
    d: &DistanceMatrix,
    from: usize,
    to: usize,
    allowed: &[bool],
) -> Option<Vec<usize>> {
    let ok = reaches_within(g, d, to, allowed);
    walk(g, d, from, to, &ok)
}

pub(crate) fn walk(g: &Graph, d: &DistanceMatrix, from: usize, to: usize, ok: &[bool]) -> Option<Vec<usize>> {
    if !ok[from] {
        return None;
    }
    let mut path = vec![from];
    let mut cur = from;
    while cur != to {
        let dc = d.get(cur, to);
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| ok[w] && d.get(w, to) + 1 == dc)?;
        path.push(cur);
    }
    Some(path)
}
