//! Verification suites. Each check belongs to a named group; the report lists
//! passed and total checks per group in first-seen order.

use std::process::ExitCode;

use rayon::prelude::*;
use strongres::boundary::{end_vertices, strong_resolving_graph};
use strongres::families::{labeled_connected_graphs, FamilySpec};
use strongres::graph::{all_pairs_distances, are_isomorphic, Graph};
use strongres::heuristics::{p1_partition, p2_partition, unicyclic_partition};
use strongres::kernels::{clique_number, vertex_cover_number};
use strongres::resolve::{
    brute_force_strong_metric_dimension, is_strong_resolving_partition, strong_metric_dimension,
    strong_partition_dimension,
};

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Suite {
    Formulas,
    Characterizations,
    Bounds,
    SrgShapes,
    Unicyclic,
    Oracle,
}

struct Check {
    group: &'static str,
    ok: bool,
    detail: String,
}

fn check(group: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        group,
        ok,
        detail: detail.into(),
    }
}

fn gen(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.generate())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

struct Ctx {
    budget: u64,
}

impl Ctx {
    fn pds(&self, g: &Graph) -> Result<usize, String> {
        let d = all_pairs_distances(g).map_err(|e| e.to_string())?;
        strong_partition_dimension(g, &d, self.budget)
            .map(|r| r.value)
            .map_err(|e| e.to_string())
    }

    fn dims(&self, g: &Graph) -> Result<usize, String> {
        let d = all_pairs_distances(g).map_err(|e| e.to_string())?;
        strong_metric_dimension(g, &d).map(|r| r.value).map_err(|e| e.to_string())
    }

    fn expect_pds(&self, group: &'static str, label: &str, g: &Graph, want: usize) -> Check {
        match self.pds(g) {
            Ok(v) => check(group, v == want, format!("{label}: pd_s {v}, expected {want}")),
            Err(e) => check(group, false, format!("{label}: {e}")),
        }
    }

    fn expect_dims(&self, group: &'static str, label: &str, g: &Graph, want: usize) -> Check {
        match self.dims(g) {
            Ok(v) => check(group, v == want, format!("{label}: dim_s {v}, expected {want}")),
            Err(e) => check(group, false, format!("{label}: {e}")),
        }
    }
}

fn family_checks(ctx: &Ctx, group: &'static str, specs: Vec<String>) -> Vec<Check> {
    specs
        .par_iter()
        .flat_map_iter(|s| {
            let spec: FamilySpec = s.parse().expect("suite specs are valid");
            let g = spec.generate().expect("suite specs generate");
            let mut out = Vec::new();
            if let Some(want) = spec.expected_pds() {
                out.push(ctx.expect_pds(group, s, &g, want));
            }
            if let Some(want) = spec.expected_dims() {
                out.push(ctx.expect_dims(group, s, &g, want));
            }
            out
        })
        .collect()
}

fn formulas(ctx: &Ctx, max_n: usize, count: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(family_checks(ctx, "paths", (2..=max_n).map(|n| format!("path:n={n}")).collect()));
    out.extend(family_checks(ctx, "cycles", (3..=max_n).map(|n| format!("cycle:n={n}")).collect()));
    out.extend(family_checks(ctx, "complete graphs", (2..=max_n.min(8)).map(|n| format!("complete:n={n}")).collect()));
    out.extend(family_checks(
        ctx,
        "trees",
        (0..count as u64).map(|s| format!("tree_random:seed={s},n={}", 3 + s as usize % (max_n - 2))).collect(),
    ));
    out.extend(family_checks(
        ctx,
        "block graphs",
        (0..count as u64 / 2)
            .map(|s| format!("block_random:seed={s},blocks={},min=2,max=4", 2 + s % 3))
            .collect(),
    ));
    let grids = (2..=4).flat_map(|m| (2..=4).map(move |n| format!("grid:m={m},n={n}")));
    out.extend(family_checks(ctx, "grids", grids.collect()));
    out.extend(family_checks(ctx, "wheels", (4..=9).map(|r| format!("wheel:r={r}")).collect()));
    out.extend(family_checks(ctx, "fans", (3..=9).map(|r| format!("fan:r={r}")).collect()));
    let c1 = [2, 3].into_iter().flat_map(|r| (4..=7).map(move |t| format!("c1:r={r},t={t}")));
    out.extend(family_checks(ctx, "G(r,t)", c1.collect()));
    let comets = (3..=9).flat_map(|n| (2..n).map(move |r| format!("comet:n={n},r={r}")));
    out.extend(family_checks(ctx, "comets", comets.collect()));
    let ra = [3, 4].into_iter().flat_map(|r| (r + 3..=r + 6).map(move |n| format!("realization_a:r={r},n={n}")));
    out.extend(family_checks(ctx, "realization A", ra.collect()));
    let rb = [(3, 4, 10), (3, 5, 12), (4, 5, 12)].map(|(r, t, n)| format!("realization_b:r={r},t={t},n={n}"));
    out.extend(family_checks(ctx, "realization B", rb.to_vec()));
    out.extend(family_checks(
        ctx,
        "n-1 families",
        ["kn_minus_e:n=5", "kn_minus_e:n=7", "k1_plus_cliques:sizes=2/3", "k1_plus_cliques:sizes=1/1/4"]
            .map(String::from)
            .to_vec(),
    ));
    out
}

fn corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(|n| labeled_connected_graphs(n).expect("order within enumeration cap"))
        .collect()
}

/// Structural membership in the graphs with `pd_s = n - 1`.
fn is_near_complete(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if (n == 3 && m == 2) || (n == 4 && g.is_cycle()) || (n >= 3 && m + 1 == n * (n - 1) / 2) {
        return true;
    }
    (0..n).filter(|&c| g.neighbors(c).len() + 1 == n).any(|c| {
        let rest: Vec<usize> = (0..n).filter(|&v| v != c).collect();
        let h = strongres::graph::induced_subgraph(g, &rest).expect("nonempty");
        let comps = h.components();
        comps.len() >= 2 && comps.iter().all(|comp| h.is_clique(comp))
    })
}

fn characterizations(ctx: &Ctx, max_n: usize) -> Vec<Check> {
    corpus(max_n)
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.order();
            let label = format!("{:?}", g.edges());
            match ctx.pds(g) {
                Ok(v) => vec![
                    check("pd_s = 2 iff path", (v == 2) == g.is_path(), format!("{label}: pd_s {v}")),
                    check("pd_s = n iff complete", (v == n) == g.is_complete(), format!("{label}: pd_s {v}")),
                    check(
                        "pd_s = n-1 iff P_3, C_4, K_n-e or K_1 + cliques",
                        (v + 1 == n) == is_near_complete(g),
                        format!("{label}: pd_s {v}"),
                    ),
                ],
                Err(e) => vec![check("pd_s computed", false, format!("{label}: {e}"))],
            }
        })
        .collect()
}

fn bounds(ctx: &Ctx, count: usize) -> Vec<Check> {
    (0..count as u64)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let n = 4 + seed as usize % 6;
            let p = [0.3, 0.45, 0.6][seed as usize % 3];
            let spec = format!("gnp:seed={seed},n={n},p={p}");
            let g = gen(&spec);
            let d = all_pairs_distances(&g).expect("connected");
            let sr = strong_resolving_graph(&g, &d);
            let omega = clique_number(&sr.graph).expect("small graph").value;
            let dims = strong_metric_dimension(&g, &d).expect("small graph").value;
            let Ok(v) = ctx.pds(&g) else {
                return vec![check("pd_s computed", false, spec)];
            };
            let diam = d.max() as usize;
            let mut out = vec![
                check("clique lower bound", omega <= v, format!("{spec}: omega {omega}, pd_s {v}")),
                check("dim_s + 1 upper bound", v <= dims + 1, format!("{spec}: dim_s {dims}, pd_s {v}")),
                check("n - D + 1 upper bound", v + diam <= n + 1, format!("{spec}: D {diam}, pd_s {v}")),
            ];
            if omega == 2 && !g.is_path() {
                out.push(check("non-path clique bound", v >= 3, format!("{spec}: pd_s {v}")));
            }
            let p1 = p1_partition(&g, &d);
            out.push(check(
                "P1 partition verifies",
                is_strong_resolving_partition(&g, &d, &p1).unwrap_or(false) && p1.len() >= v,
                format!("{spec}: {p1}"),
            ));
            if let Some(p2) = p2_partition(&g, &d) {
                out.push(check(
                    "P2 partition verifies",
                    is_strong_resolving_partition(&g, &d, &p2).unwrap_or(false) && p2.len() >= v,
                    format!("{spec}: {p2}"),
                ));
            }
            out
        })
        .collect()
}

fn complete(n: usize) -> Graph {
    gen(&format!("complete:n={n}"))
}

fn matching(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).expect("valid edges")
}

fn srg_shapes(count: usize) -> Vec<Check> {
    let sr = |g: &Graph| strong_resolving_graph(g, &all_pairs_distances(g).expect("connected")).graph;
    let iso = |a: &Graph, b: &Graph| are_isomorphic(a, b).unwrap_or(false);
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(check("complete graphs", iso(&sr(&complete(n)), &complete(n)), format!("K_{n}")));
    }
    for seed in 0..count as u64 {
        let t = gen(&format!("tree_random:seed={seed},n={}", 3 + seed as usize % 8));
        let leaves = end_vertices(&t).len();
        out.push(check("trees", iso(&sr(&t), &complete(leaves)), format!("tree seed {seed}")));
    }
    for k in 2..=4 {
        let c = gen(&format!("cycle:n={}", 2 * k));
        out.push(check("even cycles", iso(&sr(&c), &matching(k)), format!("C_{}", 2 * k)));
    }
    for k in 1..=4 {
        let c = gen(&format!("cycle:n={}", 2 * k + 1));
        out.push(check("odd cycles", iso(&sr(&c), &c), format!("C_{}", 2 * k + 1)));
    }
    out.push(check("hypercube Q_3", iso(&sr(&gen("hypercube:k=3")), &matching(4)), "Q_3"));
    for r in [2, 3] {
        let g = gen(&format!("c1:r={r},t=4"));
        let h = sr(&g);
        let mut profile: Vec<(usize, bool)> = h.components().iter().map(|c| (c.len(), h.is_clique(c))).collect();
        profile.sort();
        out.push(check(
            "G(r,4) components",
            profile == vec![(2, true), (r + 1, true)],
            format!("G({r},4): {profile:?}"),
        ));
    }
    out
}

fn unicyclic(ctx: &Ctx, count: usize) -> Vec<Check> {
    let mut specs = Vec::new();
    let mut seed = 0u64;
    while specs.len() < count {
        let s = format!("unicyclic_random:seed={seed},n={},shape=free", 5 + seed as usize % 8);
        if end_vertices(&gen(&s)).len() >= 2 {
            specs.push(s);
        }
        seed += 1;
    }
    for seed in 0..15u64 {
        specs.push(format!("unicyclic_random:seed={seed},n={},shape=leg", 4 + seed as usize % 9));
        specs.push(format!("unicyclic_random:seed={seed},n={},shape=majors", 6 + seed as usize % 7));
    }
    specs
        .par_iter()
        .flat_map_iter(|s| {
            let g = gen(s);
            let d = all_pairs_distances(&g).expect("connected");
            let tau = end_vertices(&g).len();
            let Ok(v) = ctx.pds(&g) else {
                return vec![check("pd_s computed", false, s.clone())];
            };
            let mut out = Vec::new();
            match unicyclic_partition(&g, &d) {
                Ok(p) => out.push(check(
                    "construction verifies within tau + 2",
                    is_strong_resolving_partition(&g, &d, &p).unwrap_or(false) && p.len() <= (tau + 2).max(3),
                    format!("{s}: {p}"),
                )),
                Err(e) => out.push(check("construction verifies within tau + 2", false, format!("{s}: {e}"))),
            }
            if tau == 1 {
                out.push(check("one end-vertex gives 3", v == 3, format!("{s}: pd_s {v}")));
            } else {
                out.push(check("tau <= pd_s <= tau + 2", tau <= v && v <= tau + 2, format!("{s}: tau {tau}, pd_s {v}")));
            }
            if s.ends_with("majors") {
                out.push(check("all majors gives tau", v == tau, format!("{s}: tau {tau}, pd_s {v}")));
            }
            out
        })
        .collect()
}

fn oracle(max_n: usize) -> Vec<Check> {
    corpus(max_n)
        .par_iter()
        .map(|g| {
            let d = all_pairs_distances(g).expect("connected");
            let bf = brute_force_strong_metric_dimension(g, &d).map(|r| r.value);
            let sr = strong_resolving_graph(g, &d);
            let alpha = vertex_cover_number(&sr.graph).map(|r| r.value);
            let ok = matches!((&bf, &alpha), (Ok(a), Ok(b)) if a == b);
            check("dim_s = vertex cover number of G_SR", ok, format!("{:?}: {bf:?} vs {alpha:?}", g.edges()))
        })
        .collect()
}

pub fn run(suite: Suite, max_n: Option<usize>, count: Option<usize>, budget: u64) -> anyhow::Result<ExitCode> {
    let ctx = Ctx { budget };
    let checks = match suite {
        Suite::Formulas => formulas(&ctx, max_n.unwrap_or(12).max(4), count.unwrap_or(20)),
        Suite::Characterizations => characterizations(&ctx, max_n.unwrap_or(6).min(7)),
        Suite::Bounds => bounds(&ctx, count.unwrap_or(300)),
        Suite::SrgShapes => srg_shapes(count.unwrap_or(10)),
        Suite::Unicyclic => unicyclic(&ctx, count.unwrap_or(50)),
        Suite::Oracle => oracle(max_n.unwrap_or(6).min(7)),
    };

    let mut groups: Vec<(&'static str, usize, usize)> = Vec::new();
    for c in &checks {
        let entry = match groups.iter_mut().find(|(g, _, _)| *g == c.group) {
            Some(e) => e,
            None => {
                groups.push((c.group, 0, 0));
                groups.last_mut().expect("just pushed")
            }
        };
        entry.2 += 1;
        if c.ok {
            entry.1 += 1;
        }
    }
    let width = groups.iter().map(|(g, _, _)| g.len()).max().unwrap_or(0);
    for (g, passed, total) in &groups {
        let status = if passed == total { "PASS" } else { "FAIL" };
        println!("{status}  {g:<width$}  {passed}/{total}");
    }
    let failures: Vec<&Check> = checks.iter().filter(|c| !c.ok).collect();
    for c in failures.iter().take(20) {
        println!("  failed: {}", c.detail);
    }
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} of {} checks failed", failures.len(), checks.len());
        Ok(ExitCode::from(1))
    }
}
