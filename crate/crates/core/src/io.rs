//! Text formats for graphs: edge-list, JSON, and DOT export.
//!
//! Edge-list format: a first data line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Lines whose first non-blank character is `#` are
//! comments; blank lines are ignored. JSON format:
//! `{"n": int, "edges": [[u, v], ...]}`.

use crate::{Error, Graph, Result};

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t))
        }
    });
    let (line_no, header) = data
        .next()
        .ok_or_else(|| Error::Parse("missing 'n m' header line".into()))?;
    let mut head = header.split_whitespace();
    let n = parse_num(head.next(), line_no, "vertex count")?;
    let m = parse_num(head.next(), line_no, "edge count")?;
    if head.next().is_some() {
        return Err(Error::Parse(format!(
            "line {line_no}: expected exactly 'n m'"
        )));
    }
    if n > crate::graph::MAX_IO_VERTICES {
        return Err(Error::Parse(format!(
            "line {line_no}: vertex count {n} exceeds the input bound {}",
            crate::graph::MAX_IO_VERTICES
        )));
    }
    if (m as u128) > (n as u128) * (n.saturating_sub(1) as u128) / 2 {
        return Err(Error::Parse(format!(
            "line {line_no}: {m} edges cannot fit a simple graph on {n} vertices"
        )));
    }
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = data
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), line_no, "endpoint")?;
        let v = parse_num(it.next(), line_no, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {line_no}: expected 'u v'")));
        }
        pairs.push((u, v));
    }
    if let Some((line_no, _)) = data.next() {
        return Err(Error::Parse(format!(
            "line {line_no}: trailing content after {m} edges"
        )));
    }
    Graph::new(n, pairs).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_num(tok: Option<&str>, line_no: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("line {line_no}: missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line_no}: bad {what} '{tok}'")))
}

/// Writes the edge-list text format; parses back to an equal graph.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the JSON graph format.
pub fn parse_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Writes the JSON graph format (compact, deterministic field order).
pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

/// Sniffs the format from the content: JSON when the first non-blank
/// character is `{`, edge-list otherwise.
pub fn parse_auto(text: &str) -> Result<Graph> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        _ => parse_edge_list(text),
    }
}

/// Renders an undirected DOT document; isolated vertices are listed
/// explicitly so the rendering is lossless.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
