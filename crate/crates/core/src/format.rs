//! Line-oriented text formats.
//!
//! ```text
//! ecg <n> <m> <t>        edge-coloured graph header
//! e <u> <v> <c>          one line per edge, m lines, 0-based ids
//!
//! dgr <n> <m>            digraph header
//! a <u> <v>              one line per arc
//!
//! cert <length> <0|1>    certificate header, second field is the rainbow flag
//! v <id>                 `length` lines, vertices in cycle order
//! eid <edge-index>       `length` lines, edge i joins v_i and v_(i+1 mod length)
//! ```
//!
//! Fields are separated by single spaces, every line ends with `\n`, and lines
//! starting with `#` are comments. Writers never emit comments, so
//! `parse(write(x)) == x` and `write(parse(s)) == s` for comment-free `s`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{CycleCertificate, Digraph, Edge, EdgeColouredGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Line<'a> {
    number: usize,
    fields: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }

    fn expect(&self, tag: &str, arity: usize) -> Result<Vec<usize>, ParseError> {
        let (col, head) = self.fields[0];
        if head != tag {
            return Err(self.err(col, format!("expected `{tag}`, found `{head}`")));
        }
        let values = self.fields[1..]
            .iter()
            .map(|&(col, f)| {
                if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(self.err(col, format!("expected a non-negative integer, found `{f}`")));
                }
                f.parse().map_err(|_| self.err(col, format!("integer `{f}` out of range")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        if values.len() != arity {
            let col = self.fields.last().map_or(1, |&(c, f)| c + f.len());
            return Err(self.err(col, format!("`{tag}` takes {arity} fields, found {}", values.len())));
        }
        Ok(values)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty()).map(|(i, l)| {
        let mut col = 1;
        let fields = l
            .split(' ')
            .map(|f| {
                let at = col;
                col += f.len() + 1;
                (at, f)
            })
            .collect();
        Line { number: i + 1, fields }
    })
}

fn end_of_input(text: &str) -> ParseError {
    ParseError { line: text.lines().count() + 1, column: 1, message: "unexpected end of input".into() }
}

fn expect_end<'a>(mut it: impl Iterator<Item = Line<'a>>) -> Result<(), ParseError> {
    match it.next() {
        Some(extra) => Err(extra.err(1, "more lines than the header declares")),
        None => Ok(()),
    }
}

pub fn parse_ecg(text: &str) -> Result<EdgeColouredGraph, ParseError> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| end_of_input(text))?;
    let h = header.expect("ecg", 3)?;
    let (n, m, t) = (h[0], h[1], h[2]);
    let mut edges = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for _ in 0..m {
        let line = it.next().ok_or_else(|| end_of_input(text))?;
        let f = line.expect("e", 3)?;
        edges.push(Edge::new(f[0], f[1], f[2]));
        line_of.push(line.number);
    }
    expect_end(it)?;
    EdgeColouredGraph::new(n, t, edges).map_err(|e| {
        let line = match e {
            GraphError::VertexOutOfRange { edge, .. }
            | GraphError::ColourOutOfRange { edge, .. }
            | GraphError::Loop { edge, .. }
            | GraphError::ParallelInColour { edge, .. } => line_of[edge],
            _ => header.number,
        };
        ParseError { line, column: 1, message: e.to_string() }
    })
}

pub fn write_ecg(g: &EdgeColouredGraph) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + 1));
    writeln!(out, "ecg {} {} {}", g.vertex_count(), g.edge_count(), g.colour_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.colour).unwrap();
    }
    out
}

pub fn parse_dgr(text: &str) -> Result<Digraph, ParseError> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| end_of_input(text))?;
    let h = header.expect("dgr", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut arcs = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for _ in 0..m {
        let line = it.next().ok_or_else(|| end_of_input(text))?;
        let f = line.expect("a", 2)?;
        arcs.push((f[0], f[1]));
        line_of.push(line.number);
    }
    expect_end(it)?;
    Digraph::new(n, arcs).map_err(|e| {
        let line = match e {
            GraphError::ArcLoop { arc, .. }
            | GraphError::ArcOutOfRange { arc, .. }
            | GraphError::DuplicateArc { arc, .. } => line_of[arc],
            _ => header.number,
        };
        ParseError { line, column: 1, message: e.to_string() }
    })
}

pub fn write_dgr(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "dgr {} {}", d.vertex_count(), d.arcs().len()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}

pub fn parse_cert(text: &str) -> Result<CycleCertificate, ParseError> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| end_of_input(text))?;
    let h = header.expect("cert", 2)?;
    let (len, flag) = (h[0], h[1]);
    if flag > 1 {
        return Err(header.err(header.fields[2].0, "rainbow flag must be 0 or 1"));
    }
    let mut vertices = Vec::with_capacity(len);
    for _ in 0..len {
        let line = it.next().ok_or_else(|| end_of_input(text))?;
        vertices.push(line.expect("v", 1)?[0]);
    }
    let mut edges = Vec::with_capacity(len);
    for _ in 0..len {
        let line = it.next().ok_or_else(|| end_of_input(text))?;
        edges.push(line.expect("eid", 1)?[0]);
    }
    expect_end(it)?;
    Ok(CycleCertificate { vertices, edges, rainbow: flag == 1 })
}

pub fn write_cert(c: &CycleCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "cert {} {}", c.len(), u8::from(c.rainbow)).unwrap();
    for v in &c.vertices {
        writeln!(out, "v {v}").unwrap();
    }
    for id in &c.edges {
        writeln!(out, "eid {id}").unwrap();
    }
    out
}

/// Which format a document is in, judged by its first non-comment line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Ecg,
    Dgr,
    Cert,
}

pub fn sniff(text: &str) -> Option<DocumentKind> {
    let first = lines(text).next()?;
    match first.fields[0].1 {
        "ecg" => Some(DocumentKind::Ecg),
        "dgr" => Some(DocumentKind::Dgr),
        "cert" => Some(DocumentKind::Cert),
        _ => None,
    }
}
