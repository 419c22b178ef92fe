//! Plain-text graph and digraph formats.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v`.
//! Digraph: a header line `n` followed by one `u v` line per arc `u → v`.
//! Files may hold several graphs back to back; blank lines and lines
//! starting with `#` are ignored. Error line numbers are 1-based and refer
//! to the whole input.

use super::{parse_graph6, Digraph, Graph};
use crate::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn number(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got {token:?}")))
}

fn pair(line: usize, tokens: &[&str]) -> Result<(usize, usize)> {
    match tokens {
        [u, v] => Ok((number(line, u)?, number(line, v)?)),
        _ => Err(Error::parse(line, "expected two vertex ids")),
    }
}

fn with_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

type Lines<'a> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>;

fn next_edge_list(lines: &mut Lines<'_>) -> Result<Option<(Graph, usize)>> {
    let Some((hl, header)) = lines.next() else {
        return Ok(None);
    };
    let (n, m) = match header.as_slice() {
        [n, m] => (number(hl, n)?, number(hl, m)?),
        _ => return Err(Error::parse(hl, "expected header \"n m\"")),
    };
    if n > super::MAX_ORDER {
        return Err(with_line(hl, Error::OrderTooLarge(n)));
    }
    let mut g = Graph::empty(n);
    for found in 0..m {
        let Some((l, tokens)) = lines.next() else {
            return Err(with_line(
                hl,
                Error::EdgeCountMismatch { declared: m, found },
            ));
        };
        let (u, v) = pair(l, &tokens)?;
        if u >= n || v >= n {
            return Err(with_line(
                l,
                Error::VertexOutOfRange { vertex: u.max(v), n },
            ));
        }
        if u == v {
            return Err(with_line(l, Error::SelfLoop(u)));
        }
        if g.has_edge(u, v) {
            return Err(with_line(l, Error::DuplicateEdge(u.min(v), u.max(v))));
        }
        g.add_edge(u, v);
    }
    Ok(Some((g, m)))
}

fn lines_of(text: &str) -> Lines<'_> {
    let boxed: Box<dyn Iterator<Item = (usize, Vec<&str>)>> = Box::new(content_lines(text));
    boxed.peekable()
}

/// Parses every edge-list graph in `text`.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = lines_of(text);
    let mut graphs = Vec::new();
    while let Some((g, _)) = next_edge_list(&mut lines)? {
        graphs.push(g);
    }
    Ok(graphs)
}

/// Parses exactly one edge-list graph; lines beyond the declared edge count
/// are a count mismatch.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = lines_of(text);
    let Some((g, declared)) = next_edge_list(&mut lines)? else {
        return Err(Error::parse(1, "no graph in input"));
    };
    let extra = lines.count();
    if extra > 0 {
        return Err(Error::EdgeCountMismatch {
            declared,
            found: declared + extra,
        });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses every digraph in `text`; a line holding a single integer starts a
/// new digraph.
pub fn parse_digraphs(text: &str) -> Result<Vec<Digraph>> {
    let mut out: Vec<Digraph> = Vec::new();
    for (l, tokens) in content_lines(text) {
        match tokens.as_slice() {
            [n] => {
                let n = number(l, n)?;
                if n > super::MAX_ORDER {
                    return Err(with_line(l, Error::OrderTooLarge(n)));
                }
                out.push(Digraph::empty(n));
            }
            _ => {
                let (u, v) = pair(l, &tokens)?;
                let Some(d) = out.last_mut() else {
                    return Err(Error::parse(l, "arc before the \"n\" header"));
                };
                let n = d.order();
                if u >= n || v >= n {
                    return Err(with_line(
                        l,
                        Error::VertexOutOfRange { vertex: u.max(v), n },
                    ));
                }
                if u == v {
                    return Err(with_line(l, Error::SelfLoop(u)));
                }
                if d.has_arc(u, v) {
                    return Err(with_line(l, Error::DuplicateEdge(u, v)));
                }
                d.add_arc(u, v);
            }
        }
    }
    Ok(out)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut all = parse_digraphs(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Error::parse(1, "no digraph in input")),
        k => Err(Error::parse(1, format!("expected one digraph, found {k}"))),
    }
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.order());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One graph6 word per non-blank line; a leading `>>graph6<<` header is
/// skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| (i, l.strip_prefix(">>graph6<<").unwrap_or(l)))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(i, message),
                other => Error::parse(i, other.to_string()),
            })
        })
        .collect()
}
