//! The `.sg` text format.
//!
//! ```text
//! # comments run to end of line
//! sgraph 4
//! e 0 1 +
//! e 1 3 +
//! e 2 3 -
//! ```
//!
//! The parser accepts any whitespace runs and CRLF line endings. The
//! serializer emits the canonical form: single spaces, edges sorted with
//! `u < v`, trailing newline.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{Sign, SignedGraph, VertexId};

pub fn parse_sg(text: &str) -> Result<SignedGraph, Error> {
    let mut graph: Option<SignedGraph> = None;
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        };
        let mut tokens = content.split_whitespace();
        let Some(head) = tokens.next() else {
            continue;
        };
        let rest: Vec<&str> = tokens.collect();
        match &mut graph {
            None => {
                if head != "sgraph" {
                    return Err(syntax(line, format!("expected `sgraph <n>` header, found `{head}`")));
                }
                let [n] = rest[..] else {
                    return Err(syntax(line, "header takes exactly one vertex count"));
                };
                let n = parse_index(n, line)?;
                graph = Some(SignedGraph::new(n).map_err(|e| at_line(line, e))?);
            }
            Some(g) => {
                if head != "e" {
                    return Err(syntax(line, format!("expected edge line `e <u> <v> <+|->`, found `{head}`")));
                }
                let [u, v, s] = rest[..] else {
                    return Err(syntax(line, "edge line takes exactly three fields"));
                };
                let u = parse_index(u, line)?;
                let v = parse_index(v, line)?;
                let s = Sign::from_symbol(s)
                    .ok_or_else(|| syntax(line, format!("edge sign must be `+` or `-`, found `{s}`")))?;
                g.add_edge(u, v, s).map_err(|e| at_line(line, e))?;
            }
        }
    }
    graph.ok_or_else(|| syntax(1, "missing `sgraph <n>` header"))
}

pub fn serialize_sg(g: &SignedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sgraph {}", g.vertex_count());
    for (u, v, s) in g.edges() {
        let _ = writeln!(out, "e {u} {v} {s}");
    }
    out
}

fn parse_index(tok: &str, line: usize) -> Result<VertexId, Error> {
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("expected a decimal index, found `{tok}`")));
    }
    tok.parse()
        .map_err(|_| syntax(line, format!("index `{tok}` is too large")))
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn at_line(line: usize, source: Error) -> Error {
    Error::AtLine {
        line,
        source: Box::new(source),
    }
}

impl FromStr for SignedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_sg(s)
    }
}
