//! Plain-text hypergraph format.
//!
//! ```text
//! # comment lines start with '#'
//! k n m
//! v1 v2 ... vk      (m lines, 0-based, strictly increasing)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{Hypergraph, HypergraphError};

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

impl Hypergraph {
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + self.edge_count() * self.k() * 7);
        writeln!(out, "{} {} {}", self.k(), self.n(), self.edge_count()).unwrap();
        for e in self.edges() {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
                first = false;
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `k n m` header"))?;
        let fields: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(hline, "header must be three non-negative integers `k n m`"))?;
        let [k, n, m] = fields[..] else {
            return Err(err(hline, "header must be three non-negative integers `k n m`"));
        };
        if k < 2 {
            return Err(err(hline, HypergraphError::Uniformity(k).to_string()));
        }
        let mut edges: Vec<Vec<u32>> = Vec::with_capacity(m);
        let mut edge_lines = Vec::with_capacity(m);
        for (lno, line) in lines {
            if edges.len() == m {
                return Err(err(lno, format!("more than the {m} declared edges")));
            }
            let edge: Vec<u32> =
                line.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| err(lno, "edge must be vertex ids"))?;
            edges.push(edge);
            edge_lines.push(lno);
        }
        if edges.len() < m {
            return Err(err(text.lines().count().max(1), format!("expected {m} edges, found {}", edges.len())));
        }
        Hypergraph::new(n, k, &edges).map_err(|e| {
            let line = match e {
                HypergraphError::Arity { edge, .. }
                | HypergraphError::VertexOutOfRange { edge, .. }
                | HypergraphError::Unsorted { edge }
                | HypergraphError::Duplicate { edge } => edge_lines[edge],
                _ => hline,
            };
            err(line, e.to_string())
        })
    }
}
