use std::process::ExitCode;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use strongres::boundary::{boundary, strong_resolving_graph};
use strongres::graph::all_pairs_distances;
use strongres::kernels::{clique_number, vertex_cover_number};
use strongres::resolve::{
    is_strong_resolving_partition, is_strong_resolving_set, pds_bounds, strong_metric_dimension,
    strong_partition_dimension, BoundsReport,
};
use strongres::{Certificate, Error, Method};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy)]
pub struct Want {
    pub srg: bool,
    pub dims: bool,
    pub pds: bool,
    pub bounds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Input {
    File(String),
    Spec(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgSummary {
    pub order: usize,
    pub size: usize,
    pub clique_number: usize,
    pub vertex_cover_number: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRecord {
    pub value: usize,
    pub basis: Vec<usize>,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PdsRecord {
    Exact {
        value: usize,
        partition: Vec<Vec<usize>>,
        method: String,
    },
    BudgetExceeded {
        nodes: u64,
        lower: usize,
        upper: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub srg_ms: Option<f64>,
    pub dims_ms: Option<f64>,
    pub pds_ms: Option<f64>,
    pub bounds_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub schema: u32,
    pub input: Input,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub boundary_size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub srg: Option<SrgSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dims: Option<DimsRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pds: Option<PdsRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<BoundsReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

pub fn method_name(m: &Method) -> String {
    match m {
        Method::BruteForce => "brute-force".into(),
        Method::VertexCover => "vertex-cover".into(),
        Method::BoundsMeet(source) => format!("bounds-meet:{source}"),
        Method::Search => "search".into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1000.0)
}

pub fn run(input: &str, want: Want, json: bool, timings: bool, budget: u64) -> anyhow::Result<ExitCode> {
    let (input, g) = crate::load_graph(input)?;
    let d = all_pairs_distances(&g)?;
    let n = g.order();
    if n < 2 && (want.dims || want.pds || want.bounds) {
        return Err(Error::Domain("dim_s and pd_s require n >= 2".into()).into());
    }
    let mut t = Timings::default();

    let srg = if want.srg {
        let (summary, ms) = timed(|| -> anyhow::Result<SrgSummary> {
            let sr = strong_resolving_graph(&g, &d);
            Ok(SrgSummary {
                order: sr.order(),
                size: sr.graph.size(),
                clique_number: clique_number(&sr.graph)?.value,
                vertex_cover_number: vertex_cover_number(&sr.graph)?.value,
            })
        });
        t.srg_ms = Some(ms);
        Some(summary?)
    } else {
        None
    };

    let dims = if want.dims {
        let (r, ms) = timed(|| strong_metric_dimension(&g, &d));
        t.dims_ms = Some(ms);
        let r = r?;
        let Certificate::Basis(basis) = r.certificate else {
            unreachable!("dim_s certificate is a basis");
        };
        anyhow::ensure!(is_strong_resolving_set(&g, &d, &basis), "basis failed verification");
        Some(DimsRecord {
            value: r.value,
            basis,
            method: method_name(&r.method),
        })
    } else {
        None
    };

    let bounds = if want.bounds {
        let (b, ms) = timed(|| pds_bounds(&g, &d));
        t.bounds_ms = Some(ms);
        Some(b?)
    } else {
        None
    };

    let mut budget_hit = false;
    let pds = if want.pds {
        let (r, ms) = timed(|| strong_partition_dimension(&g, &d, budget));
        t.pds_ms = Some(ms);
        match r {
            Ok(r) => {
                let Certificate::Partition(p) = r.certificate else {
                    unreachable!("pd_s certificate is a partition");
                };
                anyhow::ensure!(is_strong_resolving_partition(&g, &d, &p)?, "partition failed verification");
                Some(PdsRecord::Exact {
                    value: r.value,
                    partition: p.blocks().to_vec(),
                    method: method_name(&r.method),
                })
            }
            Err(Error::BudgetExceeded { nodes, bounds }) => {
                budget_hit = true;
                Some(PdsRecord::BudgetExceeded {
                    nodes,
                    lower: bounds.best_lower(),
                    upper: bounds.best_upper(),
                })
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let record = AnalysisRecord {
        schema: SCHEMA_VERSION,
        input,
        n,
        m: g.size(),
        diameter: d.max(),
        boundary_size: boundary(&g, &d).len(),
        srg,
        dims,
        pds,
        bounds,
        timings: timings.then_some(t),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&record)?);
    } else {
        print!("{}", render_text(&record));
    }
    if budget_hit {
        eprintln!("error: search budget of {budget} nodes exceeded; bounds reported");
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn blocks_text(blocks: &[Vec<usize>]) -> String {
    let inner: Vec<String> = blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn render_text(r: &AnalysisRecord) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    let input = match &r.input {
        Input::File(p) => format!("file {p}"),
        Input::Spec(s) => format!("spec {s}"),
    };
    rows.push(("input".into(), input));
    rows.push(("n".into(), r.n.to_string()));
    rows.push(("m".into(), r.m.to_string()));
    rows.push(("diameter".into(), r.diameter.to_string()));
    rows.push(("boundary size".into(), r.boundary_size.to_string()));
    if let Some(s) = &r.srg {
        rows.push((
            "G_SR".into(),
            format!(
                "order {}, size {}, clique number {}, vertex cover number {}",
                s.order, s.size, s.clique_number, s.vertex_cover_number
            ),
        ));
    }
    if let Some(dm) = &r.dims {
        rows.push(("dim_s".into(), format!("{} basis {:?} ({})", dm.value, dm.basis, dm.method)));
    }
    match &r.pds {
        Some(PdsRecord::Exact { value, partition, method }) => {
            rows.push(("pd_s".into(), format!("{value} partition {} ({method})", blocks_text(partition))));
        }
        Some(PdsRecord::BudgetExceeded { nodes, lower, upper }) => {
            rows.push((
                "pd_s".into(),
                format!("budget exceeded after {nodes} nodes, {lower} <= pd_s <= {upper}"),
            ));
        }
        None => {}
    }
    if let Some(b) = &r.bounds {
        let fmt = |v: &[strongres::resolve::Bound]| {
            v.iter().map(|b| format!("{} ({})", b.value, b.source)).collect::<Vec<_>>().join(", ")
        };
        rows.push(("lower bounds".into(), fmt(&b.lower)));
        rows.push(("upper bounds".into(), fmt(&b.upper)));
    }
    if let Some(t) = &r.timings {
        let parts: Vec<String> = [("srg", t.srg_ms), ("dims", t.dims_ms), ("pds", t.pds_ms), ("bounds", t.bounds_ms)]
            .iter()
            .filter_map(|(k, v)| v.map(|ms| format!("{k} {ms:.2}ms")))
            .collect();
        if !parts.is_empty() {
            rows.push(("timings".into(), parts.join(", ")));
        }
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}
