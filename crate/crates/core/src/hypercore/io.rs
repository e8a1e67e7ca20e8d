//! Text edge-list and JSON formats.
//!
//! Text: first line `n r` (`r = 0` when non-uniform), then one edge per line as
//! space-separated vertex indices. JSON: `{"schema":1,"n":..,"uniformity":..,"edges":[..]}`.

use serde::{Deserialize, Serialize};

use super::{Edge, Hypergraph};
use crate::error::{Error, Result};

pub const SCHEMA: u32 = 1;

pub fn to_text(g: &Hypergraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.uniformity().unwrap_or(0));
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn from_text(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header `n r`".into() })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse { line: hl + 1, msg: "header must be `n r`".into() });
    }
    let num = |tok: &str, line: usize| -> Result<usize> {
        tok.parse::<usize>()
            .map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not a nonnegative integer") })
    };
    let n = num(head[0], hl + 1)?;
    let r = num(head[1], hl + 1)?;
    let mut edges: Vec<Edge> = Vec::new();
    let mut line_of = Vec::new();
    for (i, l) in lines {
        let e: Vec<u32> = l
            .split_whitespace()
            .map(|t| num(t, i + 1).map(|v| v as u32))
            .collect::<Result<_>>()?;
        if e.len() < 2 {
            return Err(Error::Parse { line: i + 1, msg: "edge needs at least two vertices".into() });
        }
        if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
            return Err(Error::Parse { line: i + 1, msg: format!("vertex {v} out of range for n = {n}") });
        }
        if r != 0 && e.len() != r {
            return Err(Error::Parse { line: i + 1, msg: format!("edge has {} vertices, expected {r}", e.len()) });
        }
        edges.push(e);
        line_of.push(i + 1);
    }
    let uniformity = if r == 0 { None } else { Some(r) };
    Hypergraph::with_uniformity(n, uniformity, edges).map_err(|e| match e {
        Error::InvalidGraph(msg) => Error::Parse { line: locate(&msg, &line_of), msg },
        other => other,
    })
}

fn locate(msg: &str, line_of: &[usize]) -> usize {
    msg.split(|c: char| !c.is_ascii_digit())
        .find_map(|t| t.parse::<usize>().ok())
        .and_then(|id| line_of.get(id).copied())
        .unwrap_or(1)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    schema: u32,
    n: usize,
    uniformity: Option<usize>,
    edges: Vec<Edge>,
}

pub fn to_json(g: &Hypergraph) -> String {
    let j = GraphJson { schema: SCHEMA, n: g.n(), uniformity: g.uniformity(), edges: g.edges().to_vec() };
    let mut s = serde_json::to_string(&j).expect("plain data");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    let j: GraphJson = serde_json::from_str(text)?;
    if j.schema != SCHEMA {
        return Err(Error::arg(format!("unsupported schema {}", j.schema)));
    }
    Hypergraph::with_uniformity(j.n, j.uniformity, j.edges)
}

/// JSON value form, for embedding in larger reports.
pub fn to_value(g: &Hypergraph) -> serde_json::Value {
    serde_json::json!({"schema": SCHEMA, "n": g.n(), "uniformity": g.uniformity(), "edges": g.edges()})
}
