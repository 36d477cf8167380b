//! Plain-text edge-list codec.
//!
//! Line one is `n m`; the next `m` significant lines are `a b` pairs of
//! 0-based vertex indices. Anything from `#` to end of line is a comment;
//! blank lines are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list text format. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });

    let (header_line, header) = lines.next().ok_or(Error::MalformedEdgeList {
        line: 0,
        reason: "missing `n m` header line".into(),
    })?;
    let mut fields = header.split_whitespace();
    let n = parse_field(fields.next(), header_line, "vertex count")?;
    let m: usize = parse_field(fields.next(), header_line, "edge count")?;
    if fields.next().is_some() {
        return Err(Error::MalformedEdgeList {
            line: header_line,
            reason: "header line must be exactly `n m`".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = lines.next().ok_or(Error::MalformedEdgeList {
            line: 0,
            reason: format!("expected {m} edge lines, input ended after {}", edges.len()),
        })?;
        let mut fields = body.split_whitespace();
        let a: usize = parse_field(fields.next(), line, "edge endpoint")?;
        let b: usize = parse_field(fields.next(), line, "edge endpoint")?;
        if fields.next().is_some() {
            return Err(Error::MalformedEdgeList {
                line,
                reason: "edge line must be exactly `a b`".into(),
            });
        }
        // Validate here so the error names the offending line.
        if a == b {
            return Err(Error::MalformedEdgeList {
                line,
                reason: format!("loop edge {a} {b}"),
            });
        }
        if a >= n || b >= n {
            return Err(Error::MalformedEdgeList {
                line,
                reason: format!("edge {a} {b} out of range for n={n}"),
            });
        }
        edges.push((a, b));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::MalformedEdgeList {
            line,
            reason: format!("trailing content after the declared {m} edges"),
        });
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes `g` in the edge-list text format, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let (a, b) = e.endpoints();
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::MalformedEdgeList {
            line,
            reason: format!("expected {what} as a nonnegative integer"),
        })
}
