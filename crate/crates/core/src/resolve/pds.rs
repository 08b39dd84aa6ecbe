use super::bounds::{analyze, Bound, BoundSource};
use super::search::PartitionSearch;
use super::{is_strong_resolving_partition, Certificate, DimensionResult, Method, VertexPartition};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Default node limit for the partition search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Largest order the partition search accepts (one bit per vertex).
pub const SEARCH_ORDER_CAP: usize = 64;

/// Exact strong partition dimension with a verified strong partition basis.
///
/// When the best lower bound already equals the smallest constructive upper
/// bound, that construction is returned. Otherwise every level from the lower
/// bound up to one below the upper bound is searched exhaustively, and the
/// first level with a strong resolving partition wins. `budget` caps the
/// number of search nodes over all levels.
pub fn strong_partition_dimension(g: &Graph, d: &DistanceMatrix, budget: u64) -> Result<DimensionResult> {
    let analysis = analyze(g, d)?;
    let mut report = analysis.report;
    let lower = report.best_lower();
    let (source, upper_cert) = analysis
        .certificates
        .iter()
        .min_by_key(|(_, p)| p.len())
        .cloned()
        .expect("the dim+1 construction is always recorded");
    let upper = upper_cert.len();

    let (partition, method) = if lower >= upper {
        if lower > upper {
            return Err(Error::Internal(format!(
                "lower bound {lower} exceeds constructive upper bound {upper}"
            )));
        }
        (upper_cert, Method::BoundsMeet(source))
    } else {
        let n = g.order();
        if n > SEARCH_ORDER_CAP {
            return Err(Error::TooLarge {
                what: "strong partition dimension search",
                n,
                cap: SEARCH_ORDER_CAP,
            });
        }
        let mut search = PartitionSearch::new(g, d, &analysis.sr, budget);
        let mut found = None;
        for k in lower..upper {
            match search.level(k) {
                Ok(Some(p)) => {
                    found = Some(p);
                    break;
                }
                Ok(None) => {}
                Err(_) => {
                    if k > lower {
                        report.lower.push(Bound {
                            value: k,
                            source: BoundSource::Search,
                        });
                    }
                    return Err(Error::BudgetExceeded {
                        nodes: search.nodes,
                        bounds: Box::new(report),
                    });
                }
            }
        }
        (found.unwrap_or(upper_cert), Method::Search)
    };

    check(g, d, &partition)?;
    Ok(DimensionResult {
        value: partition.len(),
        certificate: Certificate::Partition(partition),
        method,
    })
}

fn check(g: &Graph, d: &DistanceMatrix, p: &VertexPartition) -> Result<()> {
    if is_strong_resolving_partition(g, d, p)? {
        Ok(())
    } else {
        Err(Error::Internal(format!("partition {p} is not a strong resolving partition")))
    }
}
