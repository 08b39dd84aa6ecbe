use anyhow::{bail, Context};
use rayon::prelude::*;
use strongres::families::FamilySpec;
use strongres::graph::all_pairs_distances;
use strongres::resolve::{pds_bounds, strong_metric_dimension, strong_partition_dimension};
use strongres::Error;

/// `KEY=A..B` (inclusive) or `KEY=VALUE`.
fn parse_range(text: &str) -> anyhow::Result<(String, Vec<String>)> {
    let (key, value) = text
        .split_once('=')
        .with_context(|| format!("expected KEY=A..B or KEY=VALUE, got `{text}`"))?;
    let values = match value.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.parse().with_context(|| format!("bad range start in `{text}`"))?;
            let b: u64 = b.parse().with_context(|| format!("bad range end in `{text}`"))?;
            if a > b {
                bail!("empty range `{text}`");
            }
            (a..=b).map(|v| v.to_string()).collect()
        }
        None => vec![value.to_string()],
    };
    Ok((key.to_string(), values))
}

/// All assignments, the last key varying fastest.
fn assignments(ranges: &[(String, Vec<String>)]) -> Vec<Vec<String>> {
    ranges.iter().fold(vec![Vec::new()], |acc, (_, values)| {
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut row = prefix.clone();
                    row.push(v.clone());
                    row
                })
            })
            .collect()
    })
}

struct Row {
    params: Vec<String>,
    cells: Vec<String>,
}

fn solve(spec: &FamilySpec, explore: bool, budget: u64) -> anyhow::Result<Vec<String>> {
    let g = spec.generate()?;
    let d = all_pairs_distances(&g)?;
    let n = g.order();
    let dims = strong_metric_dimension(&g, &d)?.value;
    let bounds = pds_bounds(&g, &d)?;
    let (pds, status) = match strong_partition_dimension(&g, &d, budget) {
        Ok(r) => (Some(r.value), "ok"),
        Err(Error::BudgetExceeded { .. }) => (None, "budget_exceeded"),
        Err(e) => return Err(e.into()),
    };
    let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
    let mut cells = vec![
        n.to_string(),
        g.size().to_string(),
        dims.to_string(),
        opt(pds),
        bounds.best_lower().to_string(),
        bounds.best_upper().to_string(),
        opt(spec.expected_pds()),
        opt(spec.expected_dims()),
        status.to_string(),
    ];
    if explore {
        let rhs = pds.map(|p| p + n - 2);
        cells.push((2 * dims).to_string());
        cells.push(opt(rhs));
        cells.push(rhs.map_or(String::new(), |r| u8::from(2 * dims <= r).to_string()));
    }
    Ok(cells)
}

pub fn run(family: &str, ranges: &[String], explore: bool, budget: u64) -> anyhow::Result<String> {
    let ranges: Vec<(String, Vec<String>)> = ranges.iter().map(|r| parse_range(r)).collect::<anyhow::Result<_>>()?;
    let keys: Vec<&str> = ranges.iter().map(|(k, _)| k.as_str()).collect();
    let specs: Vec<(Vec<String>, FamilySpec)> = assignments(&ranges)
        .into_iter()
        .map(|values| {
            let body: Vec<String> = keys.iter().zip(&values).map(|(k, v)| format!("{k}={v}")).collect();
            let spec: FamilySpec = format!("{family}:{}", body.join(",")).parse()?;
            Ok((values, spec))
        })
        .collect::<anyhow::Result<_>>()?;

    let rows: Vec<Row> = specs
        .par_iter()
        .map(|(params, spec)| {
            Ok(Row {
                params: params.clone(),
                cells: solve(spec, explore, budget)?,
            })
        })
        .collect::<anyhow::Result<_>>()?;

    let mut header: Vec<&str> = keys.clone();
    header.extend([
        "n",
        "m",
        "dim_s",
        "pd_s",
        "pd_s_lower",
        "pd_s_upper",
        "expected_pd_s",
        "expected_dim_s",
        "status",
    ]);
    if explore {
        header.extend(["twice_dim_s", "pd_s_plus_n_minus_2", "inequality_holds"]);
    }
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.params.iter().chain(&row.cells).cloned().collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    Ok(out)
}
