//! Shared edge-list text format.
//!
//! Lines starting with `#` are ignored. The first non-comment line is the
//! header `n m`; exactly m lines `u v` (single space, 0-indexed) follow.
//! Undirected files carry a line that is exactly `u` before the header.
//! Writers emit arcs sorted lexicographically, so emission is canonical.

use crate::digraph::{Digraph, GraphError};
use crate::undirected::UndirectedGraph;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {0}: expected header `n m`")]
    BadHeader(usize),
    #[error("line {0}: expected `u v`")]
    BadArc(usize),
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {0}: more arc lines than the header announced")]
    ExtraArc(usize),
    #[error("line {0}: file ends with fewer arc lines than the header announced")]
    MissingArcs(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Directed(Digraph),
    Undirected(UndirectedGraph),
}

fn parse_two(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split(' ');
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn parse_any(text: &str) -> Result<AnyGraph, ParseError> {
    let mut undirected = false;
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                if line == "u" && !undirected {
                    undirected = true;
                    continue;
                }
                header = Some(parse_two(line).ok_or(ParseError::BadHeader(lineno))?);
            }
            Some((n, m)) => {
                if pairs.len() == m {
                    return Err(ParseError::ExtraArc(lineno));
                }
                let (u, v) = parse_two(line).ok_or(ParseError::BadArc(lineno))?;
                let graph_err = |source| ParseError::Graph { line: lineno, source };
                if u >= n {
                    return Err(graph_err(GraphError::OutOfRange { v: u, n }));
                }
                if v >= n {
                    return Err(graph_err(GraphError::OutOfRange { v, n }));
                }
                if u == v {
                    return Err(graph_err(GraphError::LoopArc(u)));
                }
                let key = if undirected { (u.min(v), u.max(v)) } else { (u, v) };
                if !seen.insert(key) {
                    return Err(graph_err(GraphError::DuplicateArc(u, v)));
                }
                pairs.push((u, v));
            }
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if pairs.len() < m {
        return Err(ParseError::MissingArcs(last_line));
    }
    // validation above makes construction infallible
    if undirected {
        Ok(AnyGraph::Undirected(UndirectedGraph::from_edge_list(n, &pairs).unwrap()))
    } else {
        Ok(AnyGraph::Directed(Digraph::from_arc_list(n, &pairs).unwrap()))
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    match parse_any(text)? {
        AnyGraph::Directed(d) => Ok(d),
        AnyGraph::Undirected(_) => Err(ParseError::BadHeader(1)),
    }
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph, ParseError> {
    match parse_any(text)? {
        AnyGraph::Undirected(g) => Ok(g),
        AnyGraph::Directed(_) => Err(ParseError::BadHeader(1)),
    }
}

pub fn emit_digraph(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        s.push_str(&format!("{} {}\n", u, v));
    }
    s
}

pub fn emit_undirected(g: &UndirectedGraph) -> String {
    let mut s = format!("u\n{} {}\n", g.n(), g.edge_count());
    for &(a, b) in g.edges() {
        s.push_str(&format!("{} {}\n", a, b));
    }
    s
}
