use std::collections::HashMap;

use super::predicates::resolves_unchecked;
use super::VertexPartition;
use crate::boundary::SrGraph;
use crate::graph::{DistanceMatrix, Graph};

/// Memo entries kept per level before the table is dropped and rebuilt.
const MEMO_CAP: usize = 1 << 20;

pub(crate) struct BudgetExhausted;

/// Enumerates partitions into exactly `k` blocks as restricted-growth strings.
/// Vertices are assigned in order of decreasing degree in the strong resolving
/// graph, lower index first on ties. A prefix is cut when
///
/// * two mutually maximally distant vertices share a block,
/// * too few vertices remain to open the missing blocks, or
/// * two vertices share a block that already holds every vertex able to
///   strongly resolve them.
pub(crate) struct PartitionSearch<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    order: Vec<usize>,
    mmd: Vec<u64>,
    resolvers: Vec<u64>,
    pub nodes: u64,
    budget: u64,
}

impl<'a> PartitionSearch<'a> {
    pub fn new(g: &Graph, d: &'a DistanceMatrix, sr: &SrGraph, budget: u64) -> Self {
        let n = g.order();
        assert!(n <= 64, "partition search works on at most 64 vertices");
        let mut sr_degree = vec![0usize; n];
        let mut mmd = vec![0u64; n];
        for (a, b) in sr.graph.edges() {
            let (u, v) = (sr.back_map[a], sr.back_map[b]);
            sr_degree[u] += 1;
            sr_degree[v] += 1;
            mmd[u] |= 1 << v;
            mmd[v] |= 1 << u;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(sr_degree[v]), v));

        let mut resolvers = vec![0u64; n * n];
        for x in 0..n {
            for y in x + 1..n {
                let mask = (0..n)
                    .filter(|&v| v != x && v != y && resolves_unchecked(d, v, x, y))
                    .fold(0u64, |m, v| m | 1 << v);
                resolvers[x * n + y] = mask;
                resolvers[y * n + x] = mask;
            }
        }
        PartitionSearch {
            d,
            n,
            order,
            mmd,
            resolvers,
            nodes: 0,
            budget,
        }
    }

    /// First partition into `k` blocks in enumeration order that strongly
    /// resolves the graph.
    pub fn level(&mut self, k: usize) -> Result<Option<VertexPartition>, BudgetExhausted> {
        if k == 0 || k > self.n {
            return Ok(None);
        }
        let mut level = Level {
            k,
            blocks: vec![0u64; k],
            labels: vec![0usize; self.n],
            memo: HashMap::new(),
        };
        if self.descend(&mut level, 0, 0)? {
            Ok(Some(VertexPartition::from_labels(&level.labels)))
        } else {
            Ok(None)
        }
    }

    fn descend(&mut self, lv: &mut Level, i: usize, used: usize) -> Result<bool, BudgetExhausted> {
        if i == self.n {
            return Ok(used == lv.k && self.resolves_all(lv));
        }
        let v = self.order[i];
        let left = self.n - i - 1;
        for j in 0..(used + 1).min(lv.k) {
            let now_used = used.max(j + 1);
            if left < lv.k - now_used {
                continue;
            }
            let block = lv.blocks[j];
            if self.mmd[v] & block != 0 {
                continue;
            }
            let grown = block | 1 << v;
            if ones(block).any(|u| self.resolvers[u * self.n + v] & !grown == 0) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExhausted);
            }
            lv.blocks[j] = grown;
            lv.labels[v] = j;
            if self.descend(lv, i + 1, now_used)? {
                return Ok(true);
            }
            lv.blocks[j] = block;
        }
        Ok(false)
    }

    fn resolves_all(&self, lv: &mut Level) -> bool {
        if lv.memo.len() > MEMO_CAP {
            lv.memo.clear();
        }
        for &mask in &lv.blocks {
            if !lv.memo.contains_key(&mask) {
                let members: Vec<usize> = ones(mask).collect();
                let dist = (0..self.n)
                    .map(|x| members.iter().map(|&w| self.d.get(x, w)).min().unwrap_or(u32::MAX))
                    .collect();
                lv.memo.insert(mask, dist);
            }
        }
        let to_block: Vec<&Vec<u32>> = lv.blocks.iter().map(|m| &lv.memo[m]).collect();
        for (bi, &mask) in lv.blocks.iter().enumerate() {
            let members: Vec<usize> = ones(mask).collect();
            for (a, &x) in members.iter().enumerate() {
                for &y in &members[a + 1..] {
                    let dxy = self.d.get(x, y);
                    let ok = to_block.iter().enumerate().any(|(wi, dw)| {
                        wi != bi && (dw[x] == dxy + dw[y] || dw[y] == dxy + dw[x])
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct Level {
    k: usize,
    blocks: Vec<u64>,
    labels: Vec<usize>,
    /// block mask to the distance from every vertex to that block
    memo: HashMap<u64, Vec<u32>>,
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}
