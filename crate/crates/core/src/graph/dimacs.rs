//! DIMACS edge format (`p edge n m`, `e u v`, 1-indexed endpoints).

use super::{Graph, GraphError};
use std::fmt::Write;

fn parse_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Parses DIMACS edge text. Duplicate edges collapse; a self-loop or an
/// endpoint outside `1..=n` is reported with its line number.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line_no, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!("malformed header: expected `p edge`, got {other:?}"),
                        ))
                    }
                }
                let vertices = parse_num(toks.next(), line_no, "vertex count")?;
                let _declared_edges = parse_num(toks.next(), line_no, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line_no, "malformed header: trailing tokens"));
                }
                n = Some(vertices);
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_err(line_no, "edge line before header"))?;
                let u = parse_num(toks.next(), line_no, "endpoint")?;
                let v = parse_num(toks.next(), line_no, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens on edge line"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(
                            line_no,
                            format!("endpoint {x} out of range [1..{n}]"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tag) => return Err(parse_err(line_no, format!("unknown line type `{tag}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p edge` header"))?;
    Graph::from_edges(n, edges)
}

/// Canonical DIMACS text: header, then edges sorted by (min, max) endpoint.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
