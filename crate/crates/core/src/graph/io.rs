//! DIMACS edge format and a plain 0-based edge list.
//!
//! DIMACS files carry 1-based ids:
//!
//! ```text
//! c optional comment
//! c vertex 1 a
//! p edge 2 1
//! e 1 2
//! ```
//!
//! `c vertex <id> <label>` comments are how vertex labels survive a round
//! trip; every other comment is ignored. The writer is canonical: label lines,
//! then the problem line, then edges sorted by `(min, max)` endpoint.

use std::fmt::Write as _;

use super::{Graph, GraphError, VertexId};

/// How strictly [`parse_dimacs`] treats a sloppy file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Repeated edges and a wrong declared edge count are errors.
    #[default]
    Strict,
    /// Repeated edges are dropped and the declared edge count is not checked.
    /// Self-loops and out-of-range endpoints are still rejected.
    Lenient,
}

pub fn parse_dimacs(text: &str, mode: ParseMode) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_ascii_whitespace();
        match tok.next() {
            Some("c") => {
                if tok.next() == Some("vertex") {
                    let id = tok.next().and_then(|t| t.parse::<usize>().ok());
                    let name = tok.next();
                    match (id, name, tok.next()) {
                        (Some(id), Some(name), None) if id >= 1 => {
                            labels.push((lineno, id - 1, name.to_string()))
                        }
                        _ => return Err(GraphError::MalformedLine(lineno)),
                    }
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::MalformedLine(lineno));
                }
                let kind = tok.next();
                let n = tok.next().and_then(|t| t.parse().ok());
                let m = tok.next().and_then(|t| t.parse().ok());
                match (kind, n, m, tok.next()) {
                    (Some("edge" | "col"), Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(GraphError::MalformedLine(lineno)),
                }
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(GraphError::MissingProblemLine);
                };
                let u = tok.next().and_then(|t| t.parse::<usize>().ok());
                let v = tok.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (u, v, tok.next()) {
                    (Some(u), Some(v), None) if u >= 1 && v >= 1 => (u - 1, v - 1),
                    _ => return Err(GraphError::MalformedLine(lineno)),
                };
                for x in [u, v] {
                    if x >= n {
                        return Err(GraphError::VertexOutOfRange(x));
                    }
                }
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                pairs.push((u, v));
            }
            _ => return Err(GraphError::MalformedLine(lineno)),
        }
    }

    let (n, declared) = header.ok_or(GraphError::MissingProblemLine)?;
    let g = match mode {
        ParseMode::Strict => {
            if pairs.len() != declared {
                return Err(GraphError::EdgeCountMismatch {
                    declared,
                    parsed: pairs.len(),
                });
            }
            Graph::from_edge_list(n, pairs)?
        }
        ParseMode::Lenient => {
            let mut edges: Vec<_> = pairs
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_sorted_unique(n, edges)
        }
    };

    if labels.is_empty() {
        return Ok(g);
    }
    let mut names: Vec<Option<String>> = vec![None; n];
    for (lineno, id, name) in labels {
        if id >= n || names[id].is_some() {
            return Err(GraphError::MalformedLine(lineno));
        }
        names[id] = Some(name);
    }
    let names: Option<Vec<String>> = names.into_iter().collect();
    match names {
        Some(names) => g.with_labels(names),
        None => Err(GraphError::InvalidParam(
            "vertex labels must be given for every vertex or none".into(),
        )),
    }
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "c vertex {} {}", i + 1, l);
        }
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses `n m` followed by `m` lines of 0-based `u v` pairs. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or(GraphError::MissingProblemLine)?;
    let nums = parse_pair(header).ok_or(GraphError::MalformedLine(hl))?;
    let (n, declared) = nums;

    let mut pairs = Vec::with_capacity(declared);
    for (lineno, line) in lines {
        pairs.push(parse_pair(line).ok_or(GraphError::MalformedLine(lineno))?);
    }
    if pairs.len() != declared {
        return Err(GraphError::EdgeCountMismatch {
            declared,
            parsed: pairs.len(),
        });
    }
    Graph::from_edge_list(n, pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut tok = line.split_ascii_whitespace();
    let a = tok.next()?.parse().ok()?;
    let b = tok.next()?.parse().ok()?;
    tok.next().is_none().then_some((a, b))
}
