//! Graph file formats.
//!
//! Edge list: first non-blank line `n m`, then `m` lines `u v` (0-based,
//! whitespace separated). Lines starting with `#` are comments.
//!
//! JSON: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, when the failure is tied to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line: Some(line), message: message.into() }
    }

    fn general(message: impl Into<String>) -> Self {
        ParseError { line: None, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either format; JSON is detected by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::general(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError {
        line: Some(e.line()),
        message: format!("malformed graph JSON: {e}"),
    })?;
    for (i, [u, v]) in raw.edges.iter().enumerate() {
        check_endpoint(raw.n, *u, *v).map_err(|m| ParseError::general(format!("edge #{i}: {m}")))?;
    }
    Graph::new(raw.n, raw.edges.iter().map(|&[u, v]| (u, v)))
        .map_err(|e| ParseError::general(e.to_string()))
}

fn check_endpoint(n: usize, u: usize, v: usize) -> Result<(), String> {
    for w in [u, v] {
        if w >= n {
            return Err(format!("vertex {w} out of range 0..{n}"));
        }
    }
    if u == v {
        return Err(format!("loop at vertex {u}"));
    }
    Ok(())
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| ParseError::at(line_no, format!("expected two integers ({what})")))?;
        tok.parse::<usize>()
            .map_err(|_| ParseError::at(line_no, format!("{tok:?} is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(ParseError::at(line_no, format!("trailing fields after {what}")));
    }
    Ok((a, b))
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::general("empty input: expected header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header, "header \"n m\"")?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(ParseError::at(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line, "edge \"u v\"")?;
        check_endpoint(n, u, v).map_err(|msg| ParseError::at(line_no, msg))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::general(format!(
            "header declares {m} edges but {} were given",
            edges.len()
        )));
    }
    Graph::new(n, edges).map_err(|e| ParseError::general(e.to_string()))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &Graph) -> String {
    let raw = JsonGraph { n: g.order(), edges: g.edges().map(|(u, v)| [u, v]).collect() };
    serde_json::to_string(&raw).expect("graph JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2_edge_list() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn parses_k3_json() {
        let g = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn out_of_range_vertex_reports_line() {
        let err = parse_graph("2 1\n0 2\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(err.message.contains("vertex 2"), "{err}");
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_graph("3 2\n0 1\n# comment\n1 x\n").unwrap_err();
        assert_eq!(err.line, Some(4));
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(err.line, None);
        let err = parse_graph("3 1\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = parse_graph("3 1\n1 1\n").unwrap_err();
        assert!(err.message.contains("loop"));
    }

    #[test]
    fn round_trips_through_both_formats() {
        let g = crate::generators::petersen();
        let a = parse_graph(&to_edge_list(&g)).unwrap();
        let b = parse_graph(&to_json(&g)).unwrap();
        assert!(a.edges().eq(g.edges()));
        assert!(b.edges().eq(g.edges()));
    }
}
