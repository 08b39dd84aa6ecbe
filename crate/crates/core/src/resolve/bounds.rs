use serde::{Deserialize, Serialize};

use super::dimension::{require_nontrivial, strong_metric_dimension_from_sr};
use super::{Certificate, VertexPartition};
use crate::boundary::{end_vertices, strong_resolving_graph, SrGraph};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::heuristics;
use crate::kernels::clique_number;

/// Which result a bound on `pd_s` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundSource {
    /// `pd_s >= ω(G_SR)`.
    #[serde(rename = "clique")]
    Clique,
    /// `pd_s >= 3` for non-paths with `ω(G_SR) = 2`.
    #[serde(rename = "clique+1-nonpath")]
    CliquePlusOneNonpath,
    /// `pd_s <= dim_s + 1`, realized by basis singletons plus the rest.
    #[serde(rename = "dim+1")]
    DimPlusOne,
    /// `pd_s <= n - D + 1`, realized by a diametral geodesic.
    #[serde(rename = "diameter")]
    Diameter,
    #[serde(rename = "P1")]
    P1,
    #[serde(rename = "P2")]
    P2,
    /// `pd_s >= |τ|` for unicyclic graphs with `|τ| >= 2`.
    #[serde(rename = "unicyclic-tau")]
    UnicyclicTau,
    /// `pd_s <= |τ| + 2` for unicyclic graphs other than cycles.
    #[serde(rename = "unicyclic-tau+2")]
    UnicyclicTauPlus2,
    /// Size of the partition built by [`crate::heuristics::unicyclic_partition`].
    #[serde(rename = "unicyclic-construction")]
    UnicyclicConstruction,
    /// Every level below this value was exhausted by the partition search.
    #[serde(rename = "search")]
    Search,
}

impl std::fmt::Display for BoundSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundSource::Clique => "clique",
            BoundSource::CliquePlusOneNonpath => "clique+1-nonpath",
            BoundSource::DimPlusOne => "dim+1",
            BoundSource::Diameter => "diameter",
            BoundSource::P1 => "P1",
            BoundSource::P2 => "P2",
            BoundSource::UnicyclicTau => "unicyclic-tau",
            BoundSource::UnicyclicTauPlus2 => "unicyclic-tau+2",
            BoundSource::UnicyclicConstruction => "unicyclic-construction",
            BoundSource::Search => "search",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub source: BoundSource,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
}

impl BoundsReport {
    /// Largest lower bound; 2 when none is recorded.
    pub fn best_lower(&self) -> usize {
        self.lower.iter().map(|b| b.value).max().unwrap_or(2).max(2)
    }

    /// Smallest upper bound; `usize::MAX` when none is recorded.
    pub fn best_upper(&self) -> usize {
        self.upper.iter().map(|b| b.value).min().unwrap_or(usize::MAX)
    }

    pub fn lower_from(&self, source: BoundSource) -> Option<usize> {
        self.lower.iter().find(|b| b.source == source).map(|b| b.value)
    }

    pub fn upper_from(&self, source: BoundSource) -> Option<usize> {
        self.upper.iter().find(|b| b.source == source).map(|b| b.value)
    }
}

/// Everything the solvers learn about a graph before searching.
pub(crate) struct Analysis {
    pub sr: SrGraph,
    pub report: BoundsReport,
    /// Verified partitions backing the constructive upper bounds, in the
    /// order they were recorded.
    pub certificates: Vec<(BoundSource, VertexPartition)>,
}

pub(crate) fn analyze(g: &Graph, d: &DistanceMatrix) -> Result<Analysis> {
    require_nontrivial(g, "pd_s")?;
    let n = g.order();
    let sr = strong_resolving_graph(g, d);
    let clique = clique_number(&sr.graph)?;
    let dim = strong_metric_dimension_from_sr(g, d, &sr)?;
    let is_path = g.is_path();

    let mut report = BoundsReport::default();
    let mut certificates = Vec::new();

    report.lower.push(Bound {
        value: clique.value,
        source: BoundSource::Clique,
    });
    if clique.value == 2 && !is_path {
        report.lower.push(Bound {
            value: 3,
            source: BoundSource::CliquePlusOneNonpath,
        });
    }

    let Certificate::Basis(basis) = &dim.certificate else {
        unreachable!("dim_s certificate is a basis");
    };
    certificates.push((BoundSource::DimPlusOne, heuristics::basis_partition(n, basis)));
    certificates.push((BoundSource::Diameter, heuristics::diameter_partition(g, d)));
    certificates.push((BoundSource::P1, heuristics::p1_partition(g, d)));
    if let Some(p) = heuristics::p2_partition(g, d) {
        certificates.push((BoundSource::P2, p));
    }

    if g.is_unicyclic() && !g.is_cycle() {
        let tau = end_vertices(g).len();
        if tau >= 2 {
            report.lower.push(Bound {
                value: tau,
                source: BoundSource::UnicyclicTau,
            });
        }
        report.upper.push(Bound {
            value: tau + 2,
            source: BoundSource::UnicyclicTauPlus2,
        });
        if let Ok(p) = heuristics::unicyclic_partition(g, d) {
            certificates.push((BoundSource::UnicyclicConstruction, p));
        }
    }

    // constructive bounds first, then the value-only ones
    let mut uppers: Vec<Bound> = certificates
        .iter()
        .map(|(source, p)| Bound {
            value: p.len(),
            source: *source,
        })
        .collect();
    uppers.append(&mut report.upper);
    report.upper = uppers;

    Ok(Analysis {
        sr,
        report,
        certificates,
    })
}

/// Lower and upper bounds on `pd_s` with the result each one comes from.
pub fn pds_bounds(g: &Graph, d: &DistanceMatrix) -> Result<BoundsReport> {
    Ok(analyze(g, d)?.report)
}
