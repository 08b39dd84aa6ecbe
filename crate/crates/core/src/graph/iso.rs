use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 10;

/// Brute-force isomorphism test by backtracking over degree-compatible
/// assignments. Graphs of different order or size are rejected before the cap
/// is checked.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    if n > ISOMORPHISM_CAP {
        return Err(Error::TooLarge {
            what: "isomorphism testing",
            n,
            cap: ISOMORPHISM_CAP,
        });
    }
    // Map high-degree vertices first; they constrain the most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &order, 0, &mut image, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let deg = g.neighbors(v).len();
    for cand in 0..h.order() {
        if used[cand] || h.neighbors(cand).len() != deg {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], cand));
        if !consistent {
            continue;
        }
        image[v] = cand;
        used[cand] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[cand] = false;
        image[v] = usize::MAX;
    }
    false
}
