//! Exact vertex cover number and clique number, each with a witness set.
//!
//! Both searches are deterministic: ties between branching vertices go to the
//! lowest index, so the same input always yields the same witness. The
//! witness is the first optimum reached in search order, not a canonical one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node limit used when the caller does not pass one.
pub const DEFAULT_KERNEL_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedValue {
    pub value: usize,
    /// Sorted ascending; `witness.len() == value`.
    pub witness: Vec<usize>,
}

pub fn vertex_cover_number(g: &Graph) -> Result<CertifiedValue> {
    vertex_cover_number_with_budget(g, DEFAULT_KERNEL_BUDGET)
}

/// Branch and bound: pick a max-degree vertex `v`, then either put `v` in the
/// cover or put all of `N(v)` in it. Bounded below by a greedy maximal
/// matching and by `ceil(m / Δ)` on the remaining graph.
pub fn vertex_cover_number_with_budget(g: &Graph, budget: u64) -> Result<CertifiedValue> {
    let n = g.order();
    let mut search = CoverSearch {
        nbrs: (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect(),
        alive: vec![true; n],
        deg: (0..n).map(|v| g.neighbors(v).len()).collect(),
        best: (0..n).filter(|&v| !g.neighbors(v).is_empty()).collect(),
        nodes: 0,
        budget,
    };
    let mut cover = Vec::new();
    search.run(&mut cover)?;
    let mut witness = search.best;
    witness.sort_unstable();
    debug_assert!(g.is_vertex_cover(&witness));
    Ok(CertifiedValue {
        value: witness.len(),
        witness,
    })
}

struct CoverSearch {
    nbrs: Vec<Vec<usize>>,
    alive: Vec<bool>,
    deg: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CoverSearch {
    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    fn restore(&mut self, v: usize) {
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            if self.alive[w] {
                self.deg[w] += 1;
            }
        }
        self.alive[v] = true;
    }

    fn lower_bound(&self, max_deg: usize) -> usize {
        let n = self.alive.len();
        let mut matched = vec![false; n];
        let mut matching = 0;
        let mut edges = 0;
        for u in 0..n {
            if !self.alive[u] {
                continue;
            }
            edges += self.deg[u];
            if matched[u] {
                continue;
            }
            if let Some(&w) = self.nbrs[u].iter().find(|&&w| self.alive[w] && !matched[w]) {
                matched[u] = true;
                matched[w] = true;
                matching += 1;
            }
        }
        let edges = edges / 2;
        matching.max(edges.div_ceil(max_deg))
    }

    fn run(&mut self, cover: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::KernelBudgetExceeded { nodes: self.nodes });
        }
        let mut pick = None;
        let mut max_deg = 0;
        for v in 0..self.alive.len() {
            if self.alive[v] && self.deg[v] > max_deg {
                max_deg = self.deg[v];
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            if cover.len() < self.best.len() {
                self.best = cover.clone();
            }
            return Ok(());
        };
        if cover.len() + self.lower_bound(max_deg) >= self.best.len() {
            return Ok(());
        }

        self.remove(v);
        cover.push(v);
        self.run(cover)?;
        cover.pop();
        self.restore(v);

        let hood: Vec<usize> = self.nbrs[v].iter().copied().filter(|&w| self.alive[w]).collect();
        if cover.len() + hood.len() < self.best.len() {
            for &w in &hood {
                self.remove(w);
                cover.push(w);
            }
            self.run(cover)?;
            for &w in hood.iter().rev() {
                cover.pop();
                self.restore(w);
            }
        }
        Ok(())
    }
}

pub fn clique_number(g: &Graph) -> Result<CertifiedValue> {
    clique_number_with_budget(g, DEFAULT_KERNEL_BUDGET)
}

/// Branch and bound over candidate sets ordered by a greedy coloring; a
/// branch is cut when the current clique plus the color count cannot beat
/// the incumbent.
pub fn clique_number_with_budget(g: &Graph, budget: u64) -> Result<CertifiedValue> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut start: Vec<usize> = (0..n).collect();
    start.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    let mut current = Vec::new();
    if n > 0 {
        search.expand(&mut current, start)?;
    }
    let mut witness = search.best;
    witness.sort_unstable();
    debug_assert!(g.is_clique(&witness));
    Ok(CertifiedValue {
        value: witness.len(),
        witness,
    })
}

struct CliqueSearch {
    adj: Vec<Vec<bool>>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch {
    /// Greedy sequential coloring. Returns candidates reordered by color class
    /// together with the running color number of each.
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.adj[u][v]))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut colors = Vec::with_capacity(cand.len());
        for (c, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                colors.push(c + 1);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, current: &mut Vec<usize>, cand: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::KernelBudgetExceeded { nodes: self.nodes });
        }
        let (order, colors) = self.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            current.push(v);
            let next: Vec<usize> = order[..i].iter().copied().filter(|&w| self.adj[v][w]).collect();
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Exhaustive minimum cover over all subsets.
    fn brute_cover(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                g.is_vertex_cover(&set)
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    fn brute_clique(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                g.is_clique(&set)
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    #[test]
    fn vertex_cover_examples() {
        let vc = vertex_cover_number(&complete(5)).unwrap();
        assert_eq!(vc.value, 4);
        assert_eq!(vc.witness.len(), 4);

        let three_k2 = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vertex_cover_number(&three_k2).unwrap().value, 3);

        assert_eq!(brute_cover(&cycle(5)), 3);
        let vc = vertex_cover_number(&cycle(5)).unwrap();
        assert_eq!(vc.value, 3);
        assert!(cycle(5).is_vertex_cover(&vc.witness));

        let edgeless = Graph::empty(4);
        assert_eq!(vertex_cover_number(&edgeless).unwrap(), CertifiedValue { value: 0, witness: vec![] });
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(6)).unwrap().value, 6);
        assert_eq!(clique_number(&cycle(7)).unwrap().value, 2);
        let wheel = join(&Graph::empty(1), &cycle(5));
        assert_eq!(brute_clique(&wheel), 3);
        let w = clique_number(&wheel).unwrap();
        assert_eq!(w.value, 3);
        assert!(wheel.is_clique(&w.witness));
        assert_eq!(clique_number(&Graph::empty(3)).unwrap().value, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = cycle(9);
        assert!(matches!(
            vertex_cover_number_with_budget(&g, 1),
            Err(Error::KernelBudgetExceeded { .. })
        ));
        assert!(matches!(
            clique_number_with_budget(&complete(5), 1),
            Err(Error::KernelBudgetExceeded { .. })
        ));
    }

    #[test]
    fn deterministic_witnesses() {
        let g = cycle(8);
        assert_eq!(vertex_cover_number(&g).unwrap(), vertex_cover_number(&g).unwrap());
        assert_eq!(clique_number(&g).unwrap(), clique_number(&g).unwrap());
    }
}
