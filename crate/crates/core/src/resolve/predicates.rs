use super::VertexPartition;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

#[inline]
pub(crate) fn resolves_unchecked(d: &DistanceMatrix, v: usize, x: usize, y: usize) -> bool {
    let dxy = d.get(x, y);
    d.get(x, v) == dxy + d.get(y, v) || d.get(y, v) == dxy + d.get(x, v)
}

/// `v` strongly resolves `x, y` when one of them lies on a shortest path from
/// the other to `v`. True whenever `v` is `x` or `y`.
pub fn vertex_strongly_resolves(d: &DistanceMatrix, v: usize, x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(resolves_unchecked(d, v, x, y))
}

/// Set form: `d(x,W) = d(x,y) + d(y,W)` or the symmetric equation. The set
/// must be nonempty and avoid both `x` and `y`.
pub fn set_strongly_resolves(d: &DistanceMatrix, w: &[usize], x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::SameVertex(x));
    }
    if let Some(&z) = w.iter().find(|&&z| z == x || z == y) {
        return Err(Error::VertexInSet(z));
    }
    let (Some(dx), Some(dy)) = (d.to_set(x, w), d.to_set(y, w)) else {
        return Err(Error::EmptySet);
    };
    let dxy = d.get(x, y);
    Ok(dx == dxy + dy || dy == dxy + dx)
}

pub fn is_strong_resolving_set(g: &Graph, d: &DistanceMatrix, s: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|x| {
        (x + 1..n).all(|y| s.iter().any(|&v| resolves_unchecked(d, v, x, y)))
    })
}

/// Every pair inside a block must be strongly resolved by some other block.
pub fn is_strong_resolving_partition(
    g: &Graph,
    d: &DistanceMatrix,
    p: &VertexPartition,
) -> Result<bool> {
    let n = g.order();
    if p.order() != n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {n}",
            p.order()
        )));
    }
    let to_block: Vec<Vec<u32>> = p
        .blocks()
        .iter()
        .map(|b| (0..n).map(|x| d.to_set(x, b).unwrap()).collect())
        .collect();
    for (ui, block) in p.blocks().iter().enumerate() {
        for (i, &x) in block.iter().enumerate() {
            for &y in &block[i + 1..] {
                let dxy = d.get(x, y);
                let resolved = to_block.iter().enumerate().any(|(wi, dw)| {
                    wi != ui && (dw[x] == dxy + dw[y] || dw[y] == dxy + dw[x])
                });
                if !resolved {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn vertex_form() {
        let c4 = cycle(4);
        let d = all_pairs_distances(&c4).unwrap();
        assert!(!vertex_strongly_resolves(&d, 0, 1, 3).unwrap());
        let p4 = path(4);
        let d = all_pairs_distances(&p4).unwrap();
        assert!(vertex_strongly_resolves(&d, 0, 1, 2).unwrap());
        assert!(vertex_strongly_resolves(&d, 3, 3, 1).unwrap());
        assert!(matches!(vertex_strongly_resolves(&d, 0, 2, 2), Err(Error::SameVertex(2))));
    }

    #[test]
    fn set_form() {
        let d = all_pairs_distances(&cycle(4)).unwrap();
        assert!(!set_strongly_resolves(&d, &[0], 1, 3).unwrap());
        let d = all_pairs_distances(&path(4)).unwrap();
        assert!(set_strongly_resolves(&d, &[0], 1, 3).unwrap());
        let d = all_pairs_distances(&path(5)).unwrap();
        assert!(set_strongly_resolves(&d, &[0, 4], 1, 2).unwrap());

        assert!(matches!(set_strongly_resolves(&d, &[0, 1], 1, 2), Err(Error::VertexInSet(1))));
        assert!(matches!(set_strongly_resolves(&d, &[], 1, 2), Err(Error::EmptySet)));
        assert!(matches!(set_strongly_resolves(&d, &[0], 1, 1), Err(Error::SameVertex(1))));
    }

    #[test]
    fn resolving_sets() {
        let c5 = cycle(5);
        let d = all_pairs_distances(&c5).unwrap();
        assert!(is_strong_resolving_set(&c5, &d, &[0, 1, 2, 3, 4]));
        let p6 = path(6);
        let d = all_pairs_distances(&p6).unwrap();
        assert!(is_strong_resolving_set(&p6, &d, &[0]));
        assert!(!is_strong_resolving_set(&p6, &d, &[2]));
        let c4 = cycle(4);
        let d = all_pairs_distances(&c4).unwrap();
        assert!(!is_strong_resolving_set(&c4, &d, &[0]));
    }

    #[test]
    fn resolving_partitions() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = all_pairs_distances(&k3).unwrap();
        assert!(is_strong_resolving_partition(&k3, &d, &VertexPartition::singletons(3)).unwrap());

        let p = VertexPartition::new(vec![vec![0], vec![1, 2, 3]]).unwrap();
        let p4 = path(4);
        assert!(is_strong_resolving_partition(&p4, &all_pairs_distances(&p4).unwrap(), &p).unwrap());
        let c4 = cycle(4);
        assert!(!is_strong_resolving_partition(&c4, &all_pairs_distances(&c4).unwrap(), &p).unwrap());

        let whole = VertexPartition::new(vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(!is_strong_resolving_partition(&p4, &all_pairs_distances(&p4).unwrap(), &whole).unwrap());

        let short = VertexPartition::singletons(3);
        assert!(is_strong_resolving_partition(&p4, &all_pairs_distances(&p4).unwrap(), &short).is_err());
    }
}
