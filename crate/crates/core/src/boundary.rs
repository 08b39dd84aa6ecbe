//! Maximally distant vertices, the boundary, and the strong resolving graph.
//!
//! The strong resolving graph built here lives on the boundary only: vertices
//! with no mutually maximally distant partner are left out, so every vertex of
//! the result has degree at least one. The vertex cover number is the same as
//! for the variant on all of `V`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph_from_edge_list, DistanceMatrix, Graph};

/// `u` is maximally distant from `v` if no neighbor of `u` is farther from `v`.
/// The relation is directional.
pub fn is_maximally_distant(d: &DistanceMatrix, g: &Graph, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    g.neighbors(u).iter().all(|&w| d.get(v, w) <= duv)
}

pub fn is_mutually_maximally_distant(d: &DistanceMatrix, g: &Graph, u: usize, v: usize) -> bool {
    u != v && is_maximally_distant(d, g, u, v) && is_maximally_distant(d, g, v, u)
}

/// All unordered MMD pairs `(u, v)` with `u < v`, sorted.
pub fn mutually_maximally_distant_pairs(g: &Graph, d: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_mutually_maximally_distant(d, g, u, v) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// `∂(G)`: vertices that have at least one MMD partner.
pub fn boundary(g: &Graph, d: &DistanceMatrix) -> Vec<usize> {
    let mut mark = vec![false; g.order()];
    for (u, v) in mutually_maximally_distant_pairs(g, d) {
        mark[u] = true;
        mark[v] = true;
    }
    (0..g.order()).filter(|&v| mark[v]).collect()
}

/// Vertices whose neighborhood induces a complete graph. The literature
/// writes this set as either `ε(G)` or `σ(G)`.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| {
            let nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
            g.is_clique(&nb)
        })
        .collect()
}

/// Degree-one vertices, `τ(G)`.
pub fn end_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.neighbors(v).len() == 1).collect()
}

/// Every vertex has exactly one partner at distance `D(G)`.
pub fn is_two_antipodal(g: &Graph, d: &DistanceMatrix) -> bool {
    let diam = d.max();
    (0..g.order()).all(|x| d.row(x).iter().filter(|&&dx| dx == diam).count() == 1)
}

/// The strong resolving graph on `∂(G)` together with the map back to `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrGraph {
    pub graph: Graph,
    /// `back_map[i]` is the vertex of `G` behind vertex `i` of `graph`; ascending.
    pub back_map: Vec<usize>,
}

impl SrGraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Maps a vertex set of the SR graph to vertices of `G`, sorted.
    pub fn map_back(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.back_map[i]).collect();
        out.sort_unstable();
        out
    }

    /// Edge-list document preceded by a `# back_map:` comment line.
    pub fn to_edge_list(&self) -> String {
        let map: Vec<String> = self
            .back_map
            .iter()
            .enumerate()
            .map(|(i, o)| format!("{i}->{o}"))
            .collect();
        format!("# back_map: {}\n{}", map.join(" "), self.graph.to_edge_list())
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let graph = graph_from_edge_list(text)?;
        let (line_no, line) = text
            .lines()
            .enumerate()
            .find(|(_, l)| l.trim_start().starts_with("# back_map:"))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: "missing \"# back_map:\" comment".into(),
            })?;
        let bad = |msg: String| Error::Parse {
            line: line_no + 1,
            msg,
        };
        let body = line.trim_start().trim_start_matches("# back_map:");
        let mut back_map = vec![usize::MAX; graph.order()];
        for item in body.split_whitespace() {
            let (i, o) = item
                .split_once("->")
                .ok_or_else(|| bad(format!("malformed entry {item:?}")))?;
            let i: usize = i.parse().map_err(|_| bad(format!("bad index in {item:?}")))?;
            let o: usize = o.parse().map_err(|_| bad(format!("bad target in {item:?}")))?;
            *back_map
                .get_mut(i)
                .ok_or_else(|| bad(format!("index {i} out of range")))? = o;
        }
        if back_map.contains(&usize::MAX) {
            return Err(bad("back_map does not cover every vertex".into()));
        }
        Ok(SrGraph { graph, back_map })
    }
}

pub fn strong_resolving_graph(g: &Graph, d: &DistanceMatrix) -> SrGraph {
    let pairs = mutually_maximally_distant_pairs(g, d);
    let back_map = boundary(g, d);
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in back_map.iter().enumerate() {
        index[v] = i;
    }
    let mut graph = Graph::empty(back_map.len());
    for (u, v) in pairs {
        graph.add_edge(index[u], index[v]);
    }
    SrGraph { graph, back_map }
}
