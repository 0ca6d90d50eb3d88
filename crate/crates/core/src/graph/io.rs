//! Edge-list text format: a header `n m [multi] [loops]` followed by `m`
//! lines `u v`, optionally with a trailing weight. Blank lines and text
//! after `#` are ignored.

use super::{Graph, GraphKind};
use crate::error::{Error, Result};

pub(crate) struct ParsedEdge<'a> {
    pub u: usize,
    pub v: usize,
    pub weight: Option<&'a str>,
    pub line: usize,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Splits the text into header data and edge records; a weight column is
/// required when `weighted` and rejected otherwise.
pub(crate) fn parse_records(text: &str, weighted: bool) -> Result<(usize, GraphKind, Vec<ParsedEdge<'_>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing header line `n m`"))?;
    let mut fields = header.split_whitespace();
    let num = |s: Option<&str>, what: &str| -> Result<usize> {
        let s = s.ok_or_else(|| perr(hline, format!("header is missing {what}")))?;
        s.parse().map_err(|_| perr(hline, format!("bad {what} {s:?}")))
    };
    let n = num(fields.next(), "vertex count")?;
    let m = num(fields.next(), "edge count")?;
    let mut kind = GraphKind::SIMPLE;
    for flag in fields {
        match flag {
            "multi" => kind.multi = true,
            "loops" => kind.loops = true,
            other => return Err(perr(hline, format!("unknown header flag {other:?}"))),
        }
    }
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(perr(line, format!("more than the {m} edges declared")));
        }
        let parts: Vec<&str> = text.split_whitespace().collect();
        let want = if weighted { 3 } else { 2 };
        if parts.len() != want {
            return Err(perr(line, format!("expected {want} fields, found {}", parts.len())));
        }
        let endpoint = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| perr(line, format!("bad vertex {s:?}")))?;
            if v >= n {
                return Err(perr(line, format!("vertex {v} out of range 0..{n}")));
            }
            Ok(v)
        };
        edges.push(ParsedEdge { u: endpoint(parts[0])?, v: endpoint(parts[1])?, weight: parts.get(2).copied(), line });
    }
    if edges.len() != m {
        return Err(perr(text.lines().count().max(1), format!("declared {m} edges, found {}", edges.len())));
    }
    Ok((n, kind, edges))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, kind, records) = parse_records(text, false)?;
    for (i, r) in records.iter().enumerate() {
        if r.u == r.v && !kind.loops {
            return Err(perr(r.line, "loop in a graph without the `loops` flag"));
        }
        if !kind.multi {
            let key = (r.u.min(r.v), r.u.max(r.v));
            if records[..i].iter().any(|p| (p.u.min(p.v), p.u.max(p.v)) == key) {
                return Err(perr(r.line, "repeated edge in a graph without the `multi` flag"));
            }
        }
    }
    Graph::new(n, records.iter().map(|r| (r.u, r.v)), kind)
}

pub(crate) fn header(g: &Graph) -> String {
    let mut h = format!("{} {}", g.n(), g.edge_count());
    if g.kind().multi {
        h.push_str(" multi");
    }
    if g.kind().loops {
        h.push_str(" loops");
    }
    h
}

pub fn write_graph_text(g: &Graph) -> String {
    let mut out = header(g);
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
