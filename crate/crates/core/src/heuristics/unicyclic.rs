use std::collections::BTreeMap;

use serde::Serialize;

use super::geodesic::geodesic_within;
use super::{block_graph_partition, verified};
use crate::boundary::end_vertices;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::VertexPartition;

/// The cycle of a unicyclic graph and the trees hanging off it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicStructure {
    /// `u_0, ..., u_{t-1}` in cyclic order. `u_0` is the lowest-index major
    /// vertex (the lowest-index cycle vertex when there is none) and `u_1` is
    /// its lower-index cycle neighbor.
    pub cycle: Vec<usize>,
    /// Major vertex to its terminal vertices, ascending.
    pub majors: BTreeMap<usize, Vec<usize>>,
    /// Terminal vertex to the shortest path from its major vertex to it.
    pub legs: BTreeMap<usize, Vec<usize>>,
}

impl UnicyclicStructure {
    /// Terminal degree of a cycle vertex.
    pub fn ter(&self, v: usize) -> usize {
        self.majors.get(&v).map_or(0, Vec::len)
    }

    pub fn tau(&self) -> usize {
        self.legs.len()
    }
}

pub fn unicyclic_analysis(g: &Graph, d: &DistanceMatrix) -> Result<UnicyclicStructure> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let n = g.order();

    // peel leaves until only the cycle is left
    let mut deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut on_cycle = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        on_cycle[v] = false;
        for &w in g.neighbors(v) {
            if on_cycle[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let cycle_set: Vec<usize> = (0..n).filter(|&v| on_cycle[v]).collect();

    let mut majors: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for u in end_vertices(g) {
        let best = cycle_set.iter().map(|&c| d.get(u, c)).min().expect("cycle is nonempty");
        let mut closest = cycle_set.iter().filter(|&&c| d.get(u, c) == best);
        let c = *closest.next().expect("minimum is attained");
        if closest.next().is_some() {
            return Err(Error::AmbiguousTerminal(u));
        }
        majors.entry(c).or_default().push(u);
    }

    let start = majors.keys().next().copied().unwrap_or(cycle_set[0]);
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle[w] && w != prev)
            .expect("cycle vertices have two cycle neighbors");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }

    let all = vec![true; n];
    let mut legs = BTreeMap::new();
    for (&c, terminals) in &majors {
        for &u in terminals {
            legs.insert(u, geodesic_within(g, d, c, u, &all).expect("connected graph"));
        }
    }

    Ok(UnicyclicStructure { cycle, majors, legs })
}

/// Block layout shared by the constructions: the legs of every major vertex
/// in cycle order, each contributing the vertices not claimed by an earlier
/// leg of the same major vertex.
struct Layout<'a> {
    s: &'a UnicyclicStructure,
    /// cycle rotated and possibly reflected so that `order[0]` is the anchor
    order: Vec<usize>,
}

impl Layout<'_> {
    fn new(s: &UnicyclicStructure, anchor: usize, reflect: bool) -> Layout<'_> {
        let t = s.cycle.len();
        let pos = s.cycle.iter().position(|&c| c == anchor).expect("anchor on cycle");
        let order = (0..t)
            .map(|i| {
                let k = if reflect { (pos + t - i) % t } else { (pos + i) % t };
                s.cycle[k]
            })
            .collect();
        Layout { s, order }
    }

    /// For each major vertex in cycle order, its leg blocks `A_{i,1}, A_{i,2}, ...`
    /// with the major vertex itself excluded. Empty remainders are dropped.
    fn leg_blocks(&self) -> Vec<(usize, Vec<Vec<usize>>)> {
        let mut out = Vec::new();
        for &c in &self.order {
            let Some(terminals) = self.s.majors.get(&c) else {
                continue;
            };
            let mut claimed = vec![c];
            let mut blocks = Vec::new();
            for u in terminals {
                let block: Vec<usize> = self.s.legs[u]
                    .iter()
                    .copied()
                    .filter(|v| !claimed.contains(v))
                    .collect();
                claimed.extend(&block);
                if !block.is_empty() {
                    blocks.push(block);
                }
            }
            out.push((c, blocks));
        }
        out
    }

    /// Every cycle vertex joins the first leg block of its own major vertex.
    fn all_majors(&self) -> Option<VertexPartition> {
        let mut blocks = Vec::new();
        for (c, mut legs) in self.leg_blocks() {
            legs.first_mut()?.push(c);
            blocks.extend(legs);
        }
        VertexPartition::new(blocks).ok()
    }

    /// `A_{0,1}` holds the anchor's first leg and the arc `u_0 .. u_{h-1}`;
    /// `B` is the antipodal vertex (two of them for odd `t`) and `C` the rest
    /// of the arc. With `merge_tail`, `C` joins the anchor's last leg block
    /// instead of forming its own block.
    fn arc_split(&self, merge_tail: bool) -> Option<VertexPartition> {
        let t = self.order.len();
        let h = t / 2;
        let hc = t.div_ceil(2);
        let mut legs = self.leg_blocks();
        let anchor_legs = &mut legs.first_mut()?.1;
        anchor_legs.first_mut()?.extend(&self.order[..h]);

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut b = vec![self.order[h]];
        if hc != h {
            b.push(self.order[hc]);
        }
        blocks.push(b);
        let c = &self.order[hc + 1..];
        if merge_tail {
            if anchor_legs.len() < 2 {
                return None;
            }
            anchor_legs.last_mut()?.extend(c);
        } else if !c.is_empty() {
            blocks.push(c.to_vec());
        }
        blocks.extend(legs.into_iter().flat_map(|(_, b)| b));
        VertexPartition::new(blocks).ok()
    }
}

/// Constructive strong resolving partition of a unicyclic graph with at least
/// one end-vertex. Candidates, each checked before it is considered:
///
/// * every cycle vertex major: one block per terminal vertex, `|τ|` blocks;
/// * the arc split with the tail merged into the anchor's last leg block,
///   `|τ| + 1` blocks (needs two terminals on the anchor);
/// * the arc split with separate `B` and `C`, at most `|τ| + 2` blocks;
/// * for a triangle, the block-graph partition.
///
/// The anchor is the lowest-index major vertex walked toward its lower-index
/// neighbor; the other majors and the reverse direction are tried after it.
/// The smallest checked candidate wins, earliest on ties.
pub fn unicyclic_partition(g: &Graph, d: &DistanceMatrix) -> Result<VertexPartition> {
    let s = unicyclic_analysis(g, d)?;
    if s.majors.is_empty() {
        return Err(Error::NoMajorVertex);
    }
    let mut candidates: Vec<VertexPartition> = Vec::new();
    for &anchor in s.majors.keys() {
        for reflect in [false, true] {
            let layout = Layout::new(&s, anchor, reflect);
            if s.majors.len() == s.cycle.len() {
                candidates.extend(layout.all_majors());
            }
            candidates.extend(layout.arc_split(true));
            candidates.extend(layout.arc_split(false));
        }
    }
    if s.cycle.len() == 3 {
        candidates.push(block_graph_partition(g));
    }

    let mut best: Option<VertexPartition> = None;
    for p in candidates {
        if best.as_ref().is_some_and(|b| b.len() <= p.len()) {
            continue;
        }
        if verified(g, d, &p) {
            best = Some(p);
        }
    }
    best.ok_or_else(|| Error::Internal("no unicyclic construction verified".into()))
}
