//! Reference implementations used as test oracles. They work on plain
//! adjacency lists and share no code with the library beyond reading a
//! `Graph`'s edges.
#![allow(dead_code)]

use std::collections::VecDeque;

use strongres::Graph;

pub type Adj = Vec<Vec<usize>>;

pub fn adjacency(g: &Graph) -> Adj {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn path(n: usize) -> Graph {
    graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Graph {
    graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    graph(n, &e)
}

/// `k` disjoint copies of `K_2`.
pub fn matching(k: usize) -> Graph {
    graph(2 * k, &(0..k).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())
}

/// Distance matrix by BFS; `None` when disconnected.
pub fn distances(adj: &Adj) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut d = vec![vec![usize::MAX; n]; n];
    for s in 0..n {
        d[s][s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if d[s][w] == usize::MAX {
                    d[s][w] = d[s][u] + 1;
                    q.push_back(w);
                }
            }
        }
    }
    d.iter().all(|r| r.iter().all(|&x| x != usize::MAX)).then_some(d)
}

pub fn diameter(d: &[Vec<usize>]) -> usize {
    d.iter().flatten().copied().max().unwrap_or(0)
}

fn dist_to_set(d: &[Vec<usize>], x: usize, w: &[usize]) -> usize {
    w.iter().map(|&z| d[x][z]).min().unwrap()
}

/// Set form of strong resolution for `x, y` not in `w`.
pub fn set_resolves(d: &[Vec<usize>], w: &[usize], x: usize, y: usize) -> bool {
    let (dx, dy) = (dist_to_set(d, x, w), dist_to_set(d, y, w));
    dx == d[x][y] + dy || dy == d[x][y] + dx
}

pub fn vertex_resolves(d: &[Vec<usize>], v: usize, x: usize, y: usize) -> bool {
    d[x][v] == d[x][y] + d[y][v] || d[y][v] == d[x][y] + d[x][v]
}

/// Partition given as blocks; checks the definition directly.
pub fn is_resolving_partition(d: &[Vec<usize>], blocks: &[Vec<usize>]) -> bool {
    let n = d.len();
    let mut seen = vec![false; n];
    for b in blocks {
        if b.is_empty() {
            return false;
        }
        for &v in b {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    blocks.iter().enumerate().all(|(i, b)| {
        b.iter().enumerate().all(|(a, &x)| {
            b[a + 1..].iter().all(|&y| {
                blocks
                    .iter()
                    .enumerate()
                    .any(|(j, w)| j != i && set_resolves(d, w, x, y))
            })
        })
    })
}

/// Minimum number of blocks of a strong resolving partition, by enumerating
/// every set partition.
pub fn pds_exhaustive(d: &[Vec<usize>]) -> usize {
    let n = d.len();
    let mut best = n;
    let mut labels = vec![0usize; n];
    fn rec(d: &[Vec<usize>], labels: &mut Vec<usize>, i: usize, used: usize, best: &mut usize) {
        let n = d.len();
        if used >= *best {
            return;
        }
        if i == n {
            let blocks: Vec<Vec<usize>> = (0..used)
                .map(|b| (0..n).filter(|&v| labels[v] == b).collect())
                .collect();
            if is_resolving_partition(d, &blocks) {
                *best = used;
            }
            return;
        }
        for b in 0..=used {
            labels[i] = b;
            rec(d, labels, i + 1, used.max(b + 1), best);
        }
    }
    labels[0] = 0;
    rec(d, &mut labels, 1, 1, &mut best);
    best
}

/// Minimum strong resolving set size by subset enumeration.
pub fn dims_exhaustive(d: &[Vec<usize>]) -> usize {
    let n = d.len();
    (1..=n)
        .find(|&k| {
            (0u64..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
                (0..n).all(|x| {
                    (x + 1..n).all(|y| (0..n).any(|v| m >> v & 1 == 1 && vertex_resolves(d, v, x, y)))
                })
            })
        })
        .unwrap()
}

pub fn mmd_pairs(adj: &Adj, d: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let n = adj.len();
    let md = |u: usize, v: usize| adj[u].iter().all(|&w| d[v][w] <= d[u][v]);
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if md(u, v) && md(v, u) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Largest pairwise-adjacent subset among `vertices`, by subset enumeration.
pub fn clique_exhaustive(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || (m & !(1 << v)) & !adj[v] == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// ω of the strong resolving graph, counting an edgeless boundary as 1.
pub fn sr_clique(adj: &Adj, d: &[Vec<usize>]) -> usize {
    clique_exhaustive(adj.len(), &mmd_pairs(adj, d))
}

fn connected_without(adj: &Adj, removed: usize) -> bool {
    let n = adj.len();
    let start = (0..n).find(|&v| v != removed).unwrap();
    let mut seen = vec![false; n];
    seen[removed] = true;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn cut_vertex_count(adj: &Adj) -> usize {
    if adj.len() < 3 {
        return 0;
    }
    (0..adj.len()).filter(|&v| !connected_without(adj, v)).count()
}

pub fn leaf_count(adj: &Adj) -> usize {
    adj.iter().filter(|a| a.len() == 1).count()
}

pub fn is_path_shape(adj: &Adj) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    n >= 1 && m + 1 == n && adj.iter().all(|a| a.len() <= 2)
}

pub fn is_complete_shape(adj: &Adj) -> bool {
    let n = adj.len();
    adj.iter().all(|a| a.len() + 1 == n)
}

/// Membership in `{P_3, C_4, K_n - e, K_1 + (K_{n_1} ∪ ... ∪ K_{n_k}), k >= 2}`.
pub fn is_near_complete_shape(adj: &Adj) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n == 3 && m == 2 {
        return true;
    }
    if n == 4 && m == 4 && adj.iter().all(|a| a.len() == 2) {
        return true;
    }
    if n >= 2 && m + 1 == n * (n - 1) / 2 {
        return true;
    }
    (0..n).filter(|&c| adj[c].len() + 1 == n).any(|c| {
        // components of G - c must be at least two cliques
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in (0..n).filter(|&v| v != c) {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if w != c && comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        count >= 2
            && (0..n).filter(|&v| v != c).all(|v| {
                let size = (0..n).filter(|&w| w != c && comp[w] == comp[v]).count();
                adj[v].len() == size // size - 1 inside the clique plus c
            })
    })
}
