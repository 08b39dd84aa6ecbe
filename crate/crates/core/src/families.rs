//! Deterministic generators for named graph families, with the known closed
//! values of `pd_s` and `dim_s`.
//!
//! Specs are written `family:key=value,key=value`, for example `c1:r=2,t=4`.
//! Labelings:
//!
//! | family | labeling |
//! |---|---|
//! | `path:n`, `cycle:n` | `0 - 1 - ... - n-1` (closed for the cycle) |
//! | `complete:n` | `0..n` |
//! | `complete_bipartite:r,s` | parts `0..r` and `r..r+s` |
//! | `star:r` | center `0`, leaves `1..=r` |
//! | `tree:edges=0-1/1-2/...` | as given |
//! | `hypercube:k` | bit strings, adjacent when they differ in one bit |
//! | `grid:m,n` | `(a, b)` is `a*n + b` |
//! | `wheel:r`, `fan:r` | center `0`, rim cycle or path on `1..=r` |
//! | `comet:n,r` | `K_r` on `0..r`, path `r-1, r, ..., n-1` |
//! | `c1:r,t` | cycle `0..t`, pendants `t..t+r` on vertex `0` |
//! | `sphere:k,r` | poles `0` and `1`; path `j` uses `2 + j(k-1) ..` from pole `0` |
//! | `kn_minus_e:n` | `K_n` without edge `{0,1}` |
//! | `k1_plus_cliques:sizes=a/b/...` | center `0`, cliques consecutive from `1` |
//! | `realization_a:r,n` | `c1` with `r-1` pendants on `C_4`; edge `{0,4}` subdivided by `r+3 ..` |
//! | `realization_b:r,t,n` | `c1` with `r-1` pendants on `C_{2(t-r+1)+1}`; first pendant edge subdivided by the new vertices |
//! | `block_random:seed,blocks,min,max` | cliques glued along a random tree, in breadth-first order |
//! | `unicyclic_random:seed,n,t,shape` | cycle `0..t`, vertex `i >= t` hangs below an earlier vertex |
//! | `tree_random:seed,n` | decoded random Prüfer sequence |
//! | `gnp:seed,n,p` | first connected sample of `G(n, p)` |
//!
//! Random families use a ChaCha8 stream seeded from `seed`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boundary::end_vertices;
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cut_vertices, join, Graph};

/// Attempts before `gnp` gives up on drawing a connected sample.
const GNP_ATTEMPTS: usize = 10_000;

/// Largest order accepted by [`labeled_connected_graphs`].
pub const LABELED_ENUMERATION_CAP: usize = 7;

/// Shape of the trees hung on the cycle by `unicyclic_random`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnicyclicShape {
    /// Every extra vertex attaches below a uniformly chosen earlier vertex.
    Free,
    /// All extra vertices form one path hanging from vertex `0`.
    Leg,
    /// Every cycle vertex gets a pendant first; the rest attach freely.
    Majors,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { r: usize, s: usize },
    Star { r: usize },
    Tree { edges: Vec<(usize, usize)> },
    Hypercube { k: usize },
    Grid { m: usize, n: usize },
    Wheel { r: usize },
    Fan { r: usize },
    Comet { n: usize, r: usize },
    C1 { r: usize, t: usize },
    Sphere { k: usize, r: usize },
    KnMinusE { n: usize },
    K1PlusCliques { sizes: Vec<usize> },
    RealizationA { r: usize, n: usize },
    RealizationB { r: usize, t: usize, n: usize },
    BlockRandom { seed: u64, blocks: usize, min: usize, max: usize },
    UnicyclicRandom { seed: u64, n: usize, t: Option<usize>, shape: UnicyclicShape },
    TreeRandom { seed: u64, n: usize },
    Gnp { seed: u64, n: usize, p: f64 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn require(cond: bool, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(format!("constraint violated: {constraint}")))
    }
}

struct Params<'a> {
    family: &'a str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Params<'a> {
    fn parse(family: &'a str, body: &'a str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("{family}: expected key=value, got `{item}`")))?;
            if map.insert(k.trim(), v.trim()).is_some() {
                return Err(invalid(format!("{family}: duplicate key `{k}`")));
            }
        }
        Ok(Params { family, map })
    }

    fn take_str(&mut self, key: &str) -> Option<&'a str> {
        self.map.remove(key)
    }

    fn opt<T: FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| invalid(format!("{}: bad value `{v}` for `{key}`", self.family))),
        }
    }

    fn get<T: FromStr>(&mut self, key: &str) -> Result<T> {
        self.opt(key)?
            .ok_or_else(|| invalid(format!("{}: missing `{key}`", self.family)))
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            None => Ok(()),
            Some(k) => Err(invalid(format!("{}: unknown key `{k}`", self.family))),
        }
    }
}

fn parse_list(family: &str, text: &str) -> Result<Vec<usize>> {
    text.split('/')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| invalid(format!("{family}: bad list entry `{s}`")))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, body) = s.split_once(':').unwrap_or((s, ""));
        let family = family.trim().to_ascii_lowercase();
        let mut p = Params::parse(&family, body)?;
        let spec = match family.as_str() {
            "path" => FamilySpec::Path { n: p.get("n")? },
            "cycle" => FamilySpec::Cycle { n: p.get("n")? },
            "complete" => FamilySpec::Complete { n: p.get("n")? },
            "complete_bipartite" => FamilySpec::CompleteBipartite {
                r: p.get("r")?,
                s: p.get("s")?,
            },
            "star" => FamilySpec::Star { r: p.get("r")? },
            "tree" => {
                let text = p
                    .take_str("edges")
                    .ok_or_else(|| invalid("tree: missing `edges`"))?;
                let edges = text
                    .split('/')
                    .filter(|e| !e.trim().is_empty())
                    .map(|e| {
                        let (a, b) = e
                            .split_once('-')
                            .ok_or_else(|| invalid(format!("tree: bad edge `{e}`")))?;
                        let a = a.trim().parse().map_err(|_| invalid(format!("tree: bad edge `{e}`")))?;
                        let b = b.trim().parse().map_err(|_| invalid(format!("tree: bad edge `{e}`")))?;
                        Ok((a, b))
                    })
                    .collect::<Result<_>>()?;
                FamilySpec::Tree { edges }
            }
            "hypercube" => FamilySpec::Hypercube { k: p.get("k")? },
            "grid" => FamilySpec::Grid {
                m: p.get("m")?,
                n: p.get("n")?,
            },
            "wheel" => FamilySpec::Wheel { r: p.get("r")? },
            "fan" => FamilySpec::Fan { r: p.get("r")? },
            "comet" => FamilySpec::Comet {
                n: p.get("n")?,
                r: p.get("r")?,
            },
            "c1" => FamilySpec::C1 {
                r: p.get("r")?,
                t: p.get("t")?,
            },
            "sphere" => FamilySpec::Sphere {
                k: p.get("k")?,
                r: p.get("r")?,
            },
            "kn_minus_e" => FamilySpec::KnMinusE { n: p.get("n")? },
            "k1_plus_cliques" => {
                let text = p
                    .take_str("sizes")
                    .ok_or_else(|| invalid("k1_plus_cliques: missing `sizes`"))?;
                FamilySpec::K1PlusCliques {
                    sizes: parse_list("k1_plus_cliques", text)?,
                }
            }
            "realization_a" => FamilySpec::RealizationA {
                r: p.get("r")?,
                n: p.get("n")?,
            },
            "realization_b" => FamilySpec::RealizationB {
                r: p.get("r")?,
                t: p.get("t")?,
                n: p.get("n")?,
            },
            "block_random" => FamilySpec::BlockRandom {
                seed: p.get("seed")?,
                blocks: p.get("blocks")?,
                min: p.get("min")?,
                max: p.get("max")?,
            },
            "unicyclic_random" => {
                let shape = match p.take_str("shape").unwrap_or("free") {
                    "free" => UnicyclicShape::Free,
                    "leg" => UnicyclicShape::Leg,
                    "majors" => UnicyclicShape::Majors,
                    other => return Err(invalid(format!("unicyclic_random: unknown shape `{other}`"))),
                };
                FamilySpec::UnicyclicRandom {
                    seed: p.get("seed")?,
                    n: p.get("n")?,
                    t: p.opt("t")?,
                    shape,
                }
            }
            "tree_random" => FamilySpec::TreeRandom {
                seed: p.get("seed")?,
                n: p.get("n")?,
            },
            "gnp" => FamilySpec::Gnp {
                seed: p.get("seed")?,
                n: p.get("n")?,
                p: p.get("p")?,
            },
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        p.finish()?;
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let join_list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join("/");
        match self {
            Path { n } => write!(f, "path:n={n}"),
            Cycle { n } => write!(f, "cycle:n={n}"),
            Complete { n } => write!(f, "complete:n={n}"),
            CompleteBipartite { r, s } => write!(f, "complete_bipartite:r={r},s={s}"),
            Star { r } => write!(f, "star:r={r}"),
            Tree { edges } => {
                let e: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, "tree:edges={}", e.join("/"))
            }
            Hypercube { k } => write!(f, "hypercube:k={k}"),
            Grid { m, n } => write!(f, "grid:m={m},n={n}"),
            Wheel { r } => write!(f, "wheel:r={r}"),
            Fan { r } => write!(f, "fan:r={r}"),
            Comet { n, r } => write!(f, "comet:n={n},r={r}"),
            C1 { r, t } => write!(f, "c1:r={r},t={t}"),
            Sphere { k, r } => write!(f, "sphere:k={k},r={r}"),
            KnMinusE { n } => write!(f, "kn_minus_e:n={n}"),
            K1PlusCliques { sizes } => write!(f, "k1_plus_cliques:sizes={}", join_list(sizes)),
            RealizationA { r, n } => write!(f, "realization_a:r={r},n={n}"),
            RealizationB { r, t, n } => write!(f, "realization_b:r={r},t={t},n={n}"),
            BlockRandom { seed, blocks, min, max } => {
                write!(f, "block_random:seed={seed},blocks={blocks},min={min},max={max}")
            }
            UnicyclicRandom { seed, n, t, shape } => {
                write!(f, "unicyclic_random:seed={seed},n={n}")?;
                if let Some(t) = t {
                    write!(f, ",t={t}")?;
                }
                let shape = match shape {
                    UnicyclicShape::Free => "free",
                    UnicyclicShape::Leg => "leg",
                    UnicyclicShape::Majors => "majors",
                };
                write!(f, ",shape={shape}")
            }
            TreeRandom { seed, n } => write!(f, "tree_random:seed={seed},n={n}"),
            Gnp { seed, n, p } => write!(f, "gnp:seed={seed},n={n},p={p}"),
        }
    }
}

impl FamilySpec {
    /// Checks the parameter ranges each generator needs.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match *self {
            Path { n } => require(n >= 1, "path: n >= 1"),
            Cycle { n } => require(n >= 3, "cycle: n >= 3"),
            Complete { n } => require(n >= 1, "complete: n >= 1"),
            CompleteBipartite { r, s } => require(r >= 1 && s >= 1, "complete_bipartite: r, s >= 1"),
            Star { r } => require(r >= 1, "star: r >= 1"),
            Tree { ref edges } => {
                let n = edges.len() + 1;
                require(edges.iter().all(|&(a, b)| a < n && b < n), "tree: vertices are 0..=number of edges")?;
                let g = Graph::from_edges(n, edges.iter().copied())?;
                require(g.is_tree(), "tree: edges form a tree")
            }
            Hypercube { k } => require((1..=6).contains(&k), "hypercube: 1 <= k <= 6"),
            Grid { m, n } => require(m >= 2 && n >= 2, "grid: m, n >= 2"),
            Wheel { r } => require(r >= 3, "wheel: r >= 3"),
            Fan { r } => require(r >= 2, "fan: r >= 2"),
            Comet { n, r } => require(2 <= r && r < n, "comet: 2 <= r < n"),
            C1 { r, t } => require(r >= 2 && t >= 4, "c1: r >= 2, t >= 4"),
            Sphere { k, r } => require(k >= 2 && r >= 2, "sphere: k, r >= 2"),
            KnMinusE { n } => require(n >= 3, "kn_minus_e: n >= 3"),
            K1PlusCliques { ref sizes } => require(
                sizes.len() >= 2 && sizes.iter().all(|&s| s >= 1),
                "k1_plus_cliques: at least 2 cliques, each of size >= 1",
            ),
            RealizationA { r, n } => require(3 <= r && r + 3 <= n, "realization_a: 3 <= r <= n-3"),
            RealizationB { r, t, n } => require(
                3 <= r && r < t && 2 * t + 2 <= n + r,
                "realization_b: 3 <= r < t <= (n+r-2)/2",
            ),
            BlockRandom { blocks, min, max, .. } => require(
                blocks >= 1 && 2 <= min && min <= max,
                "block_random: blocks >= 1, 2 <= min <= max",
            ),
            UnicyclicRandom { n, t, shape, .. } => {
                require(n >= 4, "unicyclic_random: n >= 4")?;
                if let Some(t) = t {
                    require(3 <= t && t < n, "unicyclic_random: 3 <= t < n")?;
                    if shape == UnicyclicShape::Majors {
                        require(2 * t <= n, "unicyclic_random: 2t <= n for shape=majors")?;
                    }
                }
                Ok(())
            }
            TreeRandom { n, .. } => require(n >= 2, "tree_random: n >= 2"),
            Gnp { n, p, .. } => require(n >= 1 && p > 0.0 && p <= 1.0, "gnp: n >= 1, 0 < p <= 1"),
        }
    }

    /// Builds the graph this value describes, labeled as documented at module level.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match *self {
            Path { n } => path(n),
            Cycle { n } => cycle(n),
            Complete { n } => complete(n),
            CompleteBipartite { r, s } => {
                Graph::from_edges(r + s, (0..r).flat_map(|a| (r..r + s).map(move |b| (a, b))))?
            }
            Star { r } => Graph::from_edges(r + 1, (1..=r).map(|v| (0, v)))?,
            Tree { ref edges } => Graph::from_edges(edges.len() + 1, edges.iter().copied())?,
            Hypercube { k } => {
                let n = 1usize << k;
                Graph::from_edges(n, (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b)))))?
            }
            Grid { m, n } => cartesian_product(&path(m), &path(n)),
            Wheel { r } => join(&Graph::empty(1), &cycle(r)),
            Fan { r } => join(&Graph::empty(1), &path(r)),
            Comet { n, r } => comet(n, r),
            C1 { r, t } => c1(r, t),
            Sphere { k, r } => sphere(k, r),
            KnMinusE { n } => {
                let edges = complete(n).edges().into_iter().filter(|&e| e != (0, 1));
                Graph::from_edges(n, edges)?
            }
            K1PlusCliques { ref sizes } => {
                let cliques = sizes.iter().fold(Graph::empty(0), |acc, &s| {
                    crate::graph::disjoint_union(&acc, &complete(s))
                });
                join(&Graph::empty(1), &cliques)
            }
            RealizationA { r, n } => subdivide_first_leg(c1(r - 1, 4), 4, n - r - 3),
            RealizationB { r, t, n } => {
                let cycle_len = 2 * (t - r + 1) + 1;
                subdivide_first_leg(c1(r - 1, cycle_len), cycle_len, n + r - 2 * t - 2)
            }
            BlockRandom { seed, blocks, min, max } => block_random(seed, blocks, min, max),
            UnicyclicRandom { seed, n, t, shape } => unicyclic_random(seed, n, t, shape),
            TreeRandom { seed, n } => tree_random(&mut ChaCha8Rng::seed_from_u64(seed), n),
            Gnp { seed, n, p } => gnp(seed, n, p)?,
        };
        debug_assert!(g.check_invariants() && g.is_connected());
        Ok(g)
    }

    /// Closed value of `pd_s`, when one is known for the family.
    pub fn expected_pds(&self) -> Option<usize> {
        use FamilySpec::*;
        match *self {
            Path { n } => (n >= 2).then_some(2),
            Cycle { .. } => Some(3),
            Complete { n } => (n >= 2).then_some(n),
            Star { r } => Some(r.max(2)),
            Tree { .. } | TreeRandom { .. } => {
                let g = self.generate().ok()?;
                Some(end_vertices(&g).len())
            }
            Grid { .. } => Some(3),
            Wheel { r } => Some(match r {
                3 => 4,
                4 => 3,
                _ => r.div_ceil(2),
            }),
            Fan { r } => Some(if r <= 4 { 3 } else { r.div_ceil(2) }),
            Comet { r, .. } => Some(r),
            C1 { r, .. } => Some(r + 1),
            Sphere { r, .. } => (r == 2).then_some(3),
            KnMinusE { n } => Some(n - 1),
            K1PlusCliques { ref sizes } => Some(sizes.iter().sum::<usize>()),
            RealizationA { r, .. } | RealizationB { r, .. } => Some(r),
            BlockRandom { .. } => {
                let g = self.generate().ok()?;
                Some(g.order() - cut_vertices(&g).ok()?.len())
            }
            CompleteBipartite { .. } | Hypercube { .. } | UnicyclicRandom { .. } | Gnp { .. } => None,
        }
    }

    /// Closed value of `dim_s`, when one is known for the family.
    pub fn expected_dims(&self) -> Option<usize> {
        use FamilySpec::*;
        match *self {
            Path { n } => (n >= 2).then_some(1),
            Complete { n } => (n >= 2).then_some(n - 1),
            C1 { r, t } => Some(r + (t - 1) / 2),
            Comet { r, .. } => Some(r - 1),
            RealizationA { r, .. } => Some(r),
            RealizationB { t, .. } => Some(t),
            _ => None,
        }
    }
}

fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

fn comet(n: usize, r: usize) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in complete(r).edges() {
        g.add_edge(u, v);
    }
    for v in r..n {
        g.add_edge(v - 1, v);
    }
    g
}

fn c1(r: usize, t: usize) -> Graph {
    let mut g = Graph::empty(t + r);
    for i in 0..t {
        g.add_edge(i, (i + 1) % t);
    }
    for p in t..t + r {
        g.add_edge(0, p);
    }
    g
}

fn sphere(k: usize, r: usize) -> Graph {
    let inner = k - 1;
    let mut g = Graph::empty(2 + r * inner);
    for j in 0..r {
        let first = 2 + j * inner;
        g.add_edge(0, first);
        for v in first + 1..first + inner {
            g.add_edge(v - 1, v);
        }
        g.add_edge(first + inner - 1, 1);
    }
    g
}

/// Replaces edge `{0, pendant}` by a path through `extra` new vertices.
fn subdivide_first_leg(g: Graph, pendant: usize, extra: usize) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + extra);
    for (u, v) in g.edges() {
        if (u, v) != (0, pendant) {
            h.add_edge(u, v);
        }
    }
    let chain: Vec<usize> = std::iter::once(0)
        .chain(n..n + extra)
        .chain(std::iter::once(pendant))
        .collect();
    for w in chain.windows(2) {
        h.add_edge(w[0], w[1]);
    }
    h
}

fn prufer_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn tree_random(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in prufer_tree(rng, n) {
        g.add_edge(u, v);
    }
    g
}

fn block_random(seed: u64, blocks: usize, min: usize, max: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = tree_random(&mut rng, blocks);
    let sizes: Vec<usize> = (0..blocks).map(|_| rng.gen_range(min..=max)).collect();

    // breadth-first over the tree of cliques; a child shares one random
    // vertex of its parent's clique
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); blocks];
    let mut parent: Vec<Option<usize>> = vec![None; blocks];
    let mut seen = vec![false; blocks];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut edges = Vec::new();
    let mut next = 0;
    while let Some(b) = queue.pop_front() {
        let mut clique: Vec<usize> = parent[b]
            .map(|p| *members[p].choose(&mut rng).expect("cliques are nonempty"))
            .into_iter()
            .collect();
        while clique.len() < sizes[b] {
            clique.push(next);
            next += 1;
        }
        for (i, &u) in clique.iter().enumerate() {
            edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
        }
        members[b] = clique;
        for &c in shape.neighbors(b) {
            if !seen[c] {
                seen[c] = true;
                parent[c] = Some(b);
                queue.push_back(c);
            }
        }
    }
    Graph::from_edges(next, edges).expect("generated edges are in range")
}

fn unicyclic_random(seed: u64, n: usize, t: Option<usize>, shape: UnicyclicShape) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = t.unwrap_or_else(|| match shape {
        UnicyclicShape::Majors => rng.gen_range(3..=n / 2),
        _ => rng.gen_range(3..n),
    });
    let mut g = Graph::empty(n);
    for i in 0..t {
        g.add_edge(i, (i + 1) % t);
    }
    for v in t..n {
        let parent = match shape {
            UnicyclicShape::Free => rng.gen_range(0..v),
            UnicyclicShape::Leg if v == t => 0,
            UnicyclicShape::Leg => v - 1,
            UnicyclicShape::Majors if v < 2 * t => v - t,
            UnicyclicShape::Majors => rng.gen_range(0..v),
        };
        g.add_edge(parent, v);
    }
    g
}

fn gnp(seed: u64, n: usize, p: f64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GNP_ATTEMPTS {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(invalid(format!("gnp: no connected sample in {GNP_ATTEMPTS} attempts")))
}

/// Every connected labeled graph on `n` vertices, in increasing order of the
/// edge mask over pairs `(u, v)`, `u < v`, taken lexicographically.
pub fn labeled_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_ENUMERATION_CAP {
        return Err(Error::TooLarge {
            what: "labeled graph enumeration",
            n,
            cap: LABELED_ENUMERATION_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g.is_connected().then_some(g)
    }))
}
