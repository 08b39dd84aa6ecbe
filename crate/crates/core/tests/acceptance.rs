//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
//! criterion fails. Every check is exact.

mod common;

use common::*;
use strongres::boundary::{end_vertices, strong_resolving_graph};
use strongres::families::{labeled_connected_graphs, FamilySpec};
use strongres::graph::{all_pairs_distances, are_isomorphic, disjoint_union};
use strongres::heuristics::{p1_partition, p2_partition, unicyclic_partition};
use strongres::kernels::vertex_cover_number;
use strongres::resolve::{
    brute_force_strong_metric_dimension, strong_metric_dimension, strong_partition_dimension,
    Certificate, DEFAULT_SEARCH_BUDGET,
};
use strongres::{DimensionResult, Graph, VertexPartition};

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn gen(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn pds(g: &Graph) -> DimensionResult {
    let d = all_pairs_distances(g).unwrap();
    let r = strong_partition_dimension(g, &d, DEFAULT_SEARCH_BUDGET).unwrap();
    let Certificate::Partition(p) = &r.certificate else {
        panic!("pd_s certificate is a partition");
    };
    let oracle_d = distances(&adjacency(g)).unwrap();
    assert!(
        is_resolving_partition(&oracle_d, p.blocks()) && p.len() == r.value,
        "pd_s certificate {p} fails the reference check"
    );
    r
}

fn dims(g: &Graph) -> usize {
    strong_metric_dimension(g, &all_pairs_distances(g).unwrap()).unwrap().value
}

fn sound(o: &mut Outcome, g: &Graph, p: &VertexPartition, what: &str) {
    let d = distances(&adjacency(g)).unwrap();
    o.check(is_resolving_partition(&d, p.blocks()), || format!("{what}: {p} does not resolve"));
}

fn corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(|n| labeled_connected_graphs(n).unwrap()).collect()
}

fn oracle_equivalence(small: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    for g in small {
        let d = all_pairs_distances(g).unwrap();
        let bf = brute_force_strong_metric_dimension(g, &d).unwrap().value;
        let alpha = vertex_cover_number(&strong_resolving_graph(g, &d).graph).unwrap().value;
        o.check(bf == alpha, || format!("{:?}: brute force {bf}, cover {alpha}", g.edges()));
    }
    // the brute force itself against a reference enumeration, on n <= 5
    for g in small.iter().filter(|g| g.order() <= 5) {
        let d = all_pairs_distances(g).unwrap();
        let bf = brute_force_strong_metric_dimension(g, &d).unwrap().value;
        let reference = dims_exhaustive(&distances(&adjacency(g)).unwrap());
        o.check(bf == reference, || format!("{:?}: brute force {bf}, reference {reference}", g.edges()));
    }
    o
}

fn characterizations(small: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    for g in small {
        let n = g.order();
        let adj = adjacency(g);
        let value = pds(g).value;
        let reference = pds_exhaustive(&distances(&adj).unwrap());
        let e = g.edges();
        o.check(value == reference, || format!("{e:?}: pd_s {value}, reference {reference}"));
        o.check((value == 2) == is_path_shape(&adj), || format!("{e:?}: pd_s {value} vs path shape"));
        o.check((value == n) == is_complete_shape(&adj), || format!("{e:?}: pd_s {value} vs complete"));
        o.check((value + 1 == n) == is_near_complete_shape(&adj), || {
            format!("{e:?}: pd_s {value} vs n-1 families")
        });
    }
    o
}

fn closed_formulas() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=12 {
        o.eq(pds(&gen(&format!("path:n={n}"))).value, 2, &format!("P_{n}"));
    }
    for n in 3..=12 {
        o.eq(pds(&gen(&format!("cycle:n={n}"))).value, 3, &format!("C_{n}"));
    }
    for n in 2..=8 {
        o.eq(pds(&gen(&format!("complete:n={n}"))).value, n, &format!("K_{n}"));
    }
    for seed in 0..20u64 {
        let n = 3 + (seed as usize % 10);
        let g = gen(&format!("tree_random:seed={seed},n={n}"));
        o.eq(pds(&g).value, leaf_count(&adjacency(&g)), &format!("tree seed {seed}"));
    }
    for seed in 0..10u64 {
        let g = gen(&format!("block_random:seed={seed},blocks={},min=2,max=4", 2 + seed % 3));
        assert!(g.order() <= 12);
        let adj = adjacency(&g);
        o.eq(pds(&g).value, g.order() - cut_vertex_count(&adj), &format!("block graph seed {seed}"));
    }
    for m in 2..=4 {
        for n in 2..=4 {
            o.eq(pds(&gen(&format!("grid:m={m},n={n}"))).value, 3, &format!("P_{m} x P_{n}"));
        }
    }
    o.eq(pds(&gen("wheel:r=4")).value, 3, "W_1,4");
    for r in 5..=9usize {
        o.eq(pds(&gen(&format!("wheel:r={r}"))).value, r.div_ceil(2), &format!("W_1,{r}"));
    }
    for r in [3, 4] {
        o.eq(pds(&gen(&format!("fan:r={r}"))).value, 3, &format!("F_1,{r}"));
    }
    for r in 5..=9usize {
        o.eq(pds(&gen(&format!("fan:r={r}"))).value, r.div_ceil(2), &format!("F_1,{r}"));
    }
    o
}

fn c1_family() -> Outcome {
    let mut o = Outcome::new();
    for r in [2, 3] {
        for t in 4..=7 {
            let g = gen(&format!("c1:r={r},t={t}"));
            let want_dims = if t % 2 == 1 { r + (t - 1) / 2 } else { r + (t - 2) / 2 };
            o.eq(pds(&g).value, r + 1, &format!("pd_s G({r},{t})"));
            o.eq(dims(&g), want_dims, &format!("dim_s G({r},{t})"));
        }
        let g = gen(&format!("c1:r={r},t=4"));
        let sr = strong_resolving_graph(&g, &all_pairs_distances(&g).unwrap());
        let mut profile: Vec<(usize, bool)> = sr
            .graph
            .components()
            .iter()
            .map(|c| (c.len(), sr.graph.is_clique(c)))
            .collect();
        profile.sort();
        o.eq(profile, vec![(2, true), (r + 1, true)], &format!("G_SR profile of G({r},4)"));
    }
    o
}

fn srg_shapes() -> Outcome {
    let mut o = Outcome::new();
    let sr_of = |g: &Graph| strong_resolving_graph(g, &all_pairs_distances(g).unwrap()).graph;
    let iso = |a: &Graph, b: &Graph| are_isomorphic(a, b).unwrap();
    for n in 2..=6 {
        let k = complete(n);
        o.check(iso(&sr_of(&k), &k), || format!("(K_{n})_SR"));
    }
    for seed in 0..10u64 {
        let n = 3 + (seed as usize % 8);
        let t = gen(&format!("tree_random:seed={seed},n={n}"));
        let leaves = leaf_count(&adjacency(&t));
        o.check(iso(&sr_of(&t), &complete(leaves)), || format!("tree seed {seed}: SR is not K_{leaves}"));
    }
    for k in 2..=4 {
        o.check(iso(&sr_of(&cycle(2 * k)), &matching(k)), || format!("(C_{})_SR", 2 * k));
    }
    for k in 1..=4 {
        let c = cycle(2 * k + 1);
        o.check(iso(&sr_of(&c), &c), || format!("(C_{})_SR", 2 * k + 1));
    }
    o.check(iso(&sr_of(&gen("hypercube:k=3")), &matching(4)), || "(Q_3)_SR".into());
    // a shape mismatch is detected
    o.check(!iso(&sr_of(&cycle(6)), &disjoint_union(&path(3), &path(3))), || "iso sanity".into());
    o
}

fn realizability() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=9 {
        for r in 2..n {
            let g = gen(&format!("comet:n={n},r={r}"));
            o.eq(pds(&g).value, r, &format!("pd_s comet({n},{r})"));
            o.eq(dims(&g), r - 1, &format!("dim_s comet({n},{r})"));
        }
    }
    for r in [3, 4] {
        for n in r + 3..=r + 6 {
            let g = gen(&format!("realization_a:r={r},n={n}"));
            o.eq(g.order(), n, "realization_a order");
            o.eq(pds(&g).value, r, &format!("pd_s realization_a({r},{n})"));
            o.eq(dims(&g), r, &format!("dim_s realization_a({r},{n})"));
        }
    }
    for (r, t, n) in [(3, 4, 10), (3, 5, 12), (4, 5, 12)] {
        let g = gen(&format!("realization_b:r={r},t={t},n={n}"));
        o.eq(g.order(), n, "realization_b order");
        o.eq(pds(&g).value, r, &format!("pd_s realization_b({r},{t},{n})"));
        o.eq(dims(&g), t, &format!("dim_s realization_b({r},{t},{n})"));
    }
    o
}

/// Seeded unicyclic corpus: (spec, graph) pairs for the three shapes.
fn unicyclic_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut free = 0;
    let mut seed = 0u64;
    while free < 50 {
        let n = 5 + (seed as usize % 8);
        let spec = format!("unicyclic_random:seed={seed},n={n},shape=free");
        let g = gen(&spec);
        if end_vertices(&g).len() >= 2 {
            out.push((spec, g));
            free += 1;
        }
        seed += 1;
    }
    for seed in 0..15u64 {
        let n = 4 + (seed as usize % 9);
        let spec = format!("unicyclic_random:seed={seed},n={n},shape=leg");
        out.push((spec.clone(), gen(&spec)));
    }
    for seed in 0..15u64 {
        let n = 6 + (seed as usize % 7);
        let spec = format!("unicyclic_random:seed={seed},n={n},shape=majors");
        out.push((spec.clone(), gen(&spec)));
    }
    out
}

fn all_cycle_vertices_major(g: &Graph) -> bool {
    // vertices left after repeatedly stripping leaves all carry a branch
    let adj = adjacency(g);
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).all(|v| adj[v].len() > 2)
}

fn unicyclic(corpus: &[(String, Graph)]) -> Outcome {
    let mut o = Outcome::new();
    for (spec, g) in corpus {
        let tau = leaf_count(&adjacency(g));
        let value = pds(g).value;
        let d = all_pairs_distances(g).unwrap();
        let p = unicyclic_partition(g, &d).unwrap();
        sound(&mut o, g, &p, spec);
        if tau == 1 {
            o.eq(value, 3, spec);
        } else {
            o.check(tau <= value && value <= tau + 2, || format!("{spec}: pd_s {value}, tau {tau}"));
            o.check(p.len() <= tau + 2, || format!("{spec}: construction {} > tau + 2", p.len()));
        }
        if all_cycle_vertices_major(g) {
            o.eq(value, tau, &format!("{spec} (all majors)"));
        }
    }
    let majors = corpus.iter().filter(|(s, _)| s.ends_with("majors")).count();
    o.check(majors == 15 && corpus.iter().all(|(s, g)| !s.ends_with("majors") || all_cycle_vertices_major(g)), || {
        "majors corpus is not all-majors".into()
    });
    o
}

fn random_connected() -> Vec<Graph> {
    (0..300u64)
        .map(|seed| {
            let n = 4 + (seed as usize % 6);
            let p = [0.3, 0.45, 0.6][seed as usize % 3];
            gen(&format!("gnp:seed={seed},n={n},p={p}"))
        })
        .collect()
}

fn sandwich(graphs: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    for g in graphs {
        let adj = adjacency(g);
        let d = distances(&adj).unwrap();
        let n = g.order();
        let omega = sr_clique(&adj, &d);
        let value = pds(g).value;
        let upper = (dims_exhaustive(&d) + 1).min(n - diameter(&d) + 1);
        let e = g.edges();
        o.check(omega <= value && value <= upper, || {
            format!("{e:?}: omega {omega}, pd_s {value}, upper {upper}")
        });
        if omega == 2 && !is_path_shape(&adj) {
            o.check(value >= 3, || format!("{e:?}: non-path with pd_s {value}"));
        }
    }
    o
}

fn heuristic_soundness(graphs: &[Graph]) -> Outcome {
    let mut o = Outcome::new();
    for g in graphs {
        let d = all_pairs_distances(g).unwrap();
        sound(&mut o, g, &p1_partition(g, &d), "P1");
        if let Some(p) = p2_partition(g, &d) {
            sound(&mut o, g, &p, "P2");
        }
        if g.is_unicyclic() && !end_vertices(g).is_empty() {
            sound(&mut o, g, &unicyclic_partition(g, &d).unwrap(), "unicyclic");
        }
    }
    o
}

fn main() {
    let small = corpus(6);
    let unicyclic_graphs = unicyclic_corpus();
    let random = random_connected();

    let mut heuristic_corpus: Vec<Graph> = small.clone();
    heuristic_corpus.extend(unicyclic_graphs.iter().map(|(_, g)| g.clone()));
    heuristic_corpus.extend(random.iter().cloned());
    for spec in ["c1:r=3,t=7", "realization_b:r=4,t=5,n=12", "grid:m=4,n=4", "wheel:r=9", "sphere:k=3,r=4"] {
        heuristic_corpus.push(gen(spec));
    }

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("dim_s brute force equals vertex cover of G_SR, n <= 6", Box::new(|| oracle_equivalence(&small))),
        ("pd_s characterizations (2, n, n-1), n <= 6", Box::new(|| characterizations(&small))),
        ("closed formulas for paths, cycles, complete, trees, block graphs, grids, wheels, fans", Box::new(closed_formulas)),
        ("G(r,t) values and the G(r,4) G_SR profile", Box::new(c1_family)),
        ("strong resolving graph shapes up to isomorphism", Box::new(srg_shapes)),
        ("realizability: comet, realization_a, realization_b", Box::new(realizability)),
        ("unicyclic bounds and constructions", Box::new(|| unicyclic(&unicyclic_graphs))),
        ("bounds sandwich on 300 random graphs", Box::new(|| sandwich(&random))),
        ("heuristic partitions verify", Box::new(|| heuristic_soundness(&heuristic_corpus))),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = run();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} [{}] {name}: {} checks, {} failures ({:.1}s)",
            i + 1,
            outcome.checks,
            outcome.failures.len(),
            start.elapsed().as_secs_f64()
        );
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
