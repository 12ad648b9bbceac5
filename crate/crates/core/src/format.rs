//! Text format for graphs and optional witness colorings.
//!
//! ```text
//! # comment
//! multigraph <n> <m>
//! e <u> <v>          (m lines, vertices 1-based, edge ids 0.. in file order)
//! c <edge_id> <color> (optional, one per edge, after the edges)
//! ```
//!
//! Blank lines and `#` lines are ignored anywhere. Serialization emits no
//! comments, so `serialize(parse(s)) == s` for canonical files.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::multigraph::{GraphError, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// A parsed file: the graph plus a coloring when `c` lines are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Multigraph,
    pub witness: Option<EdgeColoring>,
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    parse_document(text).map(|d| d.graph)
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `multigraph <n> <m>` header"))?;
    let [n, m] = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["multigraph", n, m] => [number(hline, n)?, number(hline, m)?],
        _ => return Err(err(hline, "expected `multigraph <n> <m>`")),
    };
    if n == 0 {
        return Err(err(hline, "vertex count must be at least 1"));
    }

    let mut pairs = Vec::with_capacity(m);
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut last_line = hline;
    for (ln, line) in lines {
        last_line = ln;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[..] {
            ["e", u, v] => {
                if !colors.is_empty() {
                    return Err(err(ln, "edge line after coloring lines"));
                }
                if pairs.len() == m {
                    return Err(err(ln, format!("more than {m} edge lines")));
                }
                let (u, v) = (vertex(ln, u, n)?, vertex(ln, v, n)?);
                if u == v {
                    return Err(err(ln, format!("loop at vertex {}", u + 1)));
                }
                pairs.push((u, v));
            }
            ["c", e, c] => {
                if pairs.len() != m {
                    return Err(err(ln, format!("coloring line before all {m} edges")));
                }
                if colors.is_empty() {
                    colors = vec![None; m];
                }
                let e = number(ln, e)?;
                let c = number(ln, c)?;
                if e >= m {
                    return Err(err(ln, format!("edge id {e} out of range 0..{m}")));
                }
                if c == 0 || c > Color::MAX as usize {
                    return Err(err(ln, format!("color {c} must be a positive integer")));
                }
                if colors[e].replace(c as Color).is_some() {
                    return Err(err(ln, format!("edge {e} colored twice")));
                }
            }
            _ => return Err(err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    if pairs.len() != m {
        return Err(err(
            last_line,
            format!("header promises {m} edges, found {}", pairs.len()),
        ));
    }
    let witness = if colors.is_empty() {
        None
    } else {
        let missing: Vec<String> = colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(e, _)| e.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(err(
                last_line,
                format!("edges without a color: {}", missing.join(" ")),
            ));
        }
        let colors = colors
            .into_iter()
            .map(|c| c.expect("checked above"))
            .collect();
        Some(EdgeColoring::from_colors(colors).expect("colors are positive"))
    };
    let graph = Multigraph::build(n, pairs).map_err(|e: GraphError| err(hline, e.to_string()))?;
    Ok(GraphDocument { graph, witness })
}

fn number(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("`{s}` is not a non-negative integer")))
}

fn vertex(line: usize, s: &str, n: usize) -> Result<usize, ParseError> {
    match number(line, s)? {
        v @ 1.. if v <= n => Ok(v - 1),
        v => Err(err(line, format!("vertex {v} out of range 1..={n}"))),
    }
}

pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = format!("multigraph {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

/// Graph body followed by one `c` line per edge.
pub fn serialize_document(g: &Multigraph, witness: &EdgeColoring) -> String {
    let mut out = serialize_graph(g);
    for (e, c) in witness.colors().iter().enumerate() {
        writeln!(out, "c {e} {c}").expect("writing to a String");
    }
    out
}
