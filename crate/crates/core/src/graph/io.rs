use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected two integers, got {line:?}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("not a nonnegative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, format!("trailing tokens in {line:?}")));
    }
    Ok((a, b))
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based indices. Blank lines and lines starting with `#` are
/// skipped. Duplicate edges collapse to one.
pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let (n, m) = parse_pair(header_no, header)?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if seen == m {
            return Err(parse_err(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        g.try_add_edge(u, v).map_err(|e| match e {
            Error::SameVertex(x) => parse_err(line_no, format!("self-loop at vertex {x}")),
            Error::VertexOutOfRange { vertex, n } => {
                parse_err(line_no, format!("vertex {vertex} out of range (n = {n})"))
            }
            other => other,
        })?;
        seen += 1;
    }
    if seen < m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {seen}"),
        ));
    }
    Ok(g)
}
