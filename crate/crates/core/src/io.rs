//! DIMACS (`p edge`) and plain edge-list graph formats.
//!
//! DIMACS vertices are 1-based on disk; edge-list vertices are 0-based.
//! Internally everything is 0-based.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" => Ok(GraphFormat::Dimacs),
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::InvalidParameter(format!("unknown graph format `{other}`"))),
        }
    }
}

/// Guesses the format from the first significant line: DIMACS files start
/// with `c` comments or a `p` header.
pub fn detect_format(bytes: &[u8]) -> GraphFormat {
    let text = String::from_utf8_lossy(bytes);
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        return if line.starts_with('p') || line.starts_with('c') {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        };
    }
    GraphFormat::EdgeList
}

pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Parse { line: 0, message: format!("input is not UTF-8: {e}") })?;
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(graph: &Graph, format: GraphFormat) -> Vec<u8> {
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", graph.n(), graph.m()).unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        GraphFormat::EdgeList => {
            writeln!(out, "{} {}", graph.n(), graph.m()).unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out.into_bytes()
}

/// Reads a graph file, detecting the format when `format` is `None`.
pub fn read_graph_file(path: impl AsRef<Path>, format: Option<GraphFormat>) -> Result<Graph> {
    let bytes = fs::read(path)?;
    let format = format.unwrap_or_else(|| detect_format(&bytes));
    parse_graph(&bytes, format)
}

pub fn write_graph_file(path: impl AsRef<Path>, graph: &Graph, format: GraphFormat) -> Result<()> {
    fs::write(path, write_graph(graph, format))?;
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token.parse().map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

fn check_endpoint(v: usize, n: usize, line: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(parse_err(line, format!("endpoint out of range (graph has {n} vertices)")))
    }
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") => {}
                    other => {
                        return Err(parse_err(line_no, format!("expected `p edge`, found `p {}`", other.unwrap_or(""))))
                    }
                }
                let n = parse_number(tokens.next(), line_no, "vertex count")?;
                let m = parse_number(tokens.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before `p edge` header"))?;
                let u = parse_number(tokens.next(), line_no, "endpoint")?;
                let v = parse_number(tokens.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line_no, "DIMACS vertices are 1-based"));
                }
                let (u, v) = (u - 1, v - 1);
                check_endpoint(u, n, line_no)?;
                check_endpoint(v, n, line_no)?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line_no, "duplicate edge"));
                }
                edges.push((u, v));
            }
            Some(tok) => return Err(parse_err(line_no, format!("unexpected line type `{tok}`"))),
            None => unreachable!(),
        }
        if tokens.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens"));
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge` header"))?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Graph::from_edge_list(n, edges)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let a = parse_number(tokens.next(), line_no, "number")?;
        let b = parse_number(tokens.next(), line_no, "number")?;
        if tokens.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens"));
        }
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                check_endpoint(a, n, line_no)?;
                check_endpoint(b, n, line_no)?;
                if a == b {
                    return Err(parse_err(line_no, format!("self-loop at vertex {a}")));
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `<n> <m>` header"))?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Graph::from_edge_list(n, edges)
}
