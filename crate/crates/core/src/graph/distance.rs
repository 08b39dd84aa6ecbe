use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `d(x, W) = min_{w in W} d(x, w)`; `None` for empty `W`.
    pub fn to_set(&self, x: usize, set: &[usize]) -> Option<u32> {
        set.iter().map(|&w| self.get(x, w)).min()
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

fn bfs(g: &Graph, src: usize, out: &mut [u32]) {
    out.fill(u32::MAX);
    out[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = out[u];
        for &w in g.neighbors(u) {
            if out[w] == u32::MAX {
                out[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// BFS from every vertex. Fails on disconnected input.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut d = vec![0u32; n * n];
    for (src, row) in d.chunks_mut(n.max(1)).enumerate().take(n) {
        bfs(g, src, row);
        if row.contains(&u32::MAX) {
            return Err(Error::NotConnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(all_pairs_distances(g)?.max())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn distance_examples() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = all_pairs_distances(&k4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        assert_eq!(all_pairs_distances(&path(4)).unwrap().get(0, 3), 3);
        let d6 = all_pairs_distances(&cycle(6)).unwrap();
        assert_eq!(d6.get(0, 3), 3);
        assert_eq!(d6.get(0, 2), 2);
        assert_eq!(d6.to_set(0, &[2, 3]), Some(2));
        assert_eq!(d6.to_set(0, &[]), None);
    }

    #[test]
    fn diameter_examples() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(diameter(&k5).unwrap(), 1);
        assert_eq!(diameter(&path(7)).unwrap(), 6);
        let grid = super::super::cartesian_product(&path(3), &path(3));
        assert_eq!(diameter(&grid).unwrap(), 4);
        assert_eq!(diameter(&Graph::empty(1)).unwrap(), 0);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(all_pairs_distances(&g), Err(Error::NotConnected)));
        assert!(diameter(&g).is_err());
    }
}
