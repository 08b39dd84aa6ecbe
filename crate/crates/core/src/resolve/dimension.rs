use super::predicates::{is_strong_resolving_set, resolves_unchecked};
use super::{Certificate, DimensionResult, Method};
use crate::boundary::{strong_resolving_graph, SrGraph};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::kernels::vertex_cover_number;

/// Default order cap for [`brute_force_strong_metric_dimension`].
pub const BRUTE_FORCE_CAP: usize = 10;

pub(crate) fn require_nontrivial(g: &Graph, what: &str) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Domain(format!("{what} requires n >= 2")));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

pub fn brute_force_strong_metric_dimension(g: &Graph, d: &DistanceMatrix) -> Result<DimensionResult> {
    brute_force_strong_metric_dimension_with_cap(g, d, BRUTE_FORCE_CAP)
}

/// Tries every subset in size-ascending, then lexicographic order and
/// returns the first strong resolving set found. Independent of the
/// boundary machinery.
pub fn brute_force_strong_metric_dimension_with_cap(
    g: &Graph,
    d: &DistanceMatrix,
    cap: usize,
) -> Result<DimensionResult> {
    require_nontrivial(g, "dim_s")?;
    let n = g.order();
    let cap = cap.min(63);
    if n > cap {
        return Err(Error::TooLarge {
            what: "brute-force strong metric dimension",
            n,
            cap,
        });
    }
    // One mask per pair: the vertices that strongly resolve it.
    let mut pair_masks = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let mask = (0..n)
                .filter(|&v| resolves_unchecked(d, v, x, y))
                .fold(0u64, |m, v| m | 1 << v);
            pair_masks.push(mask);
        }
    }
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if pair_masks.iter().all(|&pm| pm & mask != 0) {
                debug_assert!(is_strong_resolving_set(g, d, &combo));
                return Ok(DimensionResult {
                    value: size,
                    certificate: Certificate::Basis(combo),
                    method: Method::BruteForce,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Err(Error::Internal("no strong resolving set found".into()))
}

/// Advances to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// `dim_s(G) = α(G_SR)`: a minimum vertex cover of the strong resolving
/// graph, mapped back to `G`, is a strong metric basis.
pub fn strong_metric_dimension(g: &Graph, d: &DistanceMatrix) -> Result<DimensionResult> {
    require_nontrivial(g, "dim_s")?;
    let sr = strong_resolving_graph(g, d);
    strong_metric_dimension_from_sr(g, d, &sr)
}

pub(crate) fn strong_metric_dimension_from_sr(
    g: &Graph,
    d: &DistanceMatrix,
    sr: &SrGraph,
) -> Result<DimensionResult> {
    let cover = vertex_cover_number(&sr.graph)?;
    let basis = sr.map_back(&cover.witness);
    if !is_strong_resolving_set(g, d, &basis) {
        return Err(Error::Internal(format!(
            "vertex cover {basis:?} of the strong resolving graph is not a strong resolving set"
        )));
    }
    Ok(DimensionResult {
        value: cover.value,
        certificate: Certificate::Basis(basis),
        method: Method::VertexCover,
    })
}
