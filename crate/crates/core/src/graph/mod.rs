//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Every set-valued query returns its
//! vertices in ascending order so that downstream certificates are stable.

mod cut;
mod distance;
mod io;
mod iso;
mod ops;

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cut::cut_vertices;
pub use distance::{all_pairs_distances, diameter, DistanceMatrix};
pub use io::graph_from_edge_list;
pub use iso::{are_isomorphic, ISOMORPHISM_CAP};
pub use ops::{cartesian_product, disjoint_union, induced_subgraph, join};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Infallible edge insertion for generators that construct indices themselves.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Neighbor set of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.adj[v].iter().copied().collect())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// True iff every vertex is reachable from vertex 0. The null graph and
    /// `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|nb| nb.len() + 1 == n)
    }

    /// Path graph `P_n` for some `n >= 1`.
    pub fn is_path(&self) -> bool {
        let n = self.order();
        match n {
            0 => false,
            1 => true,
            _ => {
                self.size() == n - 1
                    && self.is_connected()
                    && self.adj.iter().all(|nb| nb.len() <= 2)
            }
        }
    }

    pub fn is_cycle(&self) -> bool {
        let n = self.order();
        n >= 3 && self.is_connected() && self.adj.iter().all(|nb| nb.len() == 2)
    }

    pub fn is_tree(&self) -> bool {
        let n = self.order();
        n >= 1 && self.size() == n - 1 && self.is_connected()
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.order() >= 3 && self.size() == self.order() && self.is_connected()
    }

    /// True iff `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Every edge has an endpoint in `set`.
    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.order()];
        for &v in set {
            if v < mark.len() {
                mark[v] = true;
            }
        }
        self.edges().iter().all(|&(u, v)| mark[u] || mark[v])
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut h = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Sorted degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        d.sort_unstable();
        d
    }

    /// Checks the adjacency invariants: no loops, symmetry, indices in range.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(u, nb)| {
            nb.iter()
                .all(|&v| v < n && v != u && self.adj[v].contains(&u))
        })
    }

    /// Serializes in the edge-list interchange format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
