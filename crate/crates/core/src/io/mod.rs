//! Text graph format, instance generators and trace records.
//!
//! The format is line based:
//!
//! ```text
//! c any comment
//! p edge <n> <m>
//! e <u> <v> <w>
//! ```
//!
//! Vertex ids are 1-based, the weight is mandatory and at least 1, and the
//! header must precede every edge line and declare the exact number of edge
//! lines. Repeated pairs are allowed and merged by summing their weights.

pub mod gen;
pub mod trace;

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{normalize_multigraph, GraphError, Vertex, Weight, WeightedGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {0}: syntax error")]
    Syntax(usize),
    #[error("line {0}: self-loop")]
    SelfLoop(usize),
    #[error("bad or missing header: {0}")]
    BadHeader(String),
    #[error("line {line}: vertex id {id} outside 1..={n}")]
    IdOutOfRange { line: usize, id: u64, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
}

fn parse_fields<const N: usize>(fields: &[&str], line: usize) -> Result<[u64; N], IoError> {
    if fields.len() != N {
        return Err(IoError::Syntax(line));
    }
    let mut out = [0u64; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| IoError::Syntax(line))?;
    }
    Ok(out)
}

/// Parses a graph, mapping file ids `1..=n` to `0..n`.
pub fn parse_graph(text: &str) -> Result<WeightedGraph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex, Weight)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(IoError::BadHeader(format!("second header on line {line}")));
                }
                if fields.get(1) != Some(&"edge") {
                    return Err(IoError::BadHeader(format!("line {line}: expected `p edge <n> <m>`")));
                }
                let [n, m] = parse_fields::<2>(&fields[2..], line)?;
                header = Some((n as usize, m as usize));
            }
            Some("e") => {
                let [u, v, w] = parse_fields::<3>(&fields[1..], line)?;
                if w == 0 || w > Weight::MAX as u64 {
                    return Err(IoError::Syntax(line));
                }
                if u == v {
                    return Err(IoError::SelfLoop(line));
                }
                let Some((n, _)) = header else {
                    return Err(IoError::BadHeader(format!("edge on line {line} before the header")));
                };
                for id in [u, v] {
                    if id == 0 || id > n as u64 {
                        return Err(IoError::IdOutOfRange { line, id, n });
                    }
                }
                edges.push((u as usize - 1, v as usize - 1, w as Weight));
            }
            Some(_) => return Err(IoError::Syntax(line)),
        }
    }
    let Some((n, m)) = header else {
        return Err(IoError::BadHeader("no `p edge` line".into()));
    };
    if edges.len() != m {
        return Err(IoError::BadHeader(format!(
            "header declares {m} edge lines, found {}",
            edges.len()
        )));
    }
    Ok(normalize_multigraph(n, edges)?)
}

/// Writes `g` in the text format, edges sorted by endpoints.
pub fn serialize_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    let mut edges: Vec<_> = g.edges().collect();
    edges.sort_unstable();
    for (u, v, w) in edges {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, w);
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<WeightedGraph, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

pub fn write_graph_file(path: &Path, g: &WeightedGraph) -> Result<(), IoError> {
    std::fs::write(path, serialize_graph(g)).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}
