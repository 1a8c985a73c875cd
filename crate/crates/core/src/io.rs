//! Line-oriented graph files.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>        (1-indexed, exactly m lines)
//! l <v> <role>     (optional role label)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_number(token: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

fn parse_vertex(token: Option<&str>, line: usize, n: usize) -> Result<usize, FormatError> {
    let v = parse_number(token, line, "vertex id")?;
    if v == 0 || v > n {
        return Err(syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses a graph file. Parsing is strict: unknown line types, a repeated
/// or late header and an edge-count mismatch are all errors.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else {
            continue;
        };
        if kind == "c" {
            continue;
        }
        match (kind, header) {
            ("p", None) => {
                if tokens.next() != Some("edge") {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_number(tokens.next(), line, "vertex count")?;
                let m = parse_number(tokens.next(), line, "edge count")?;
                header = Some((n, m));
            }
            ("p", Some(_)) => return Err(syntax(line, "duplicate header")),
            (_, None) => return Err(FormatError::MissingHeader),
            ("e", Some((n, _))) => {
                let u = parse_vertex(tokens.next(), line, n)?;
                let v = parse_vertex(tokens.next(), line, n)?;
                edges.push((u, v));
            }
            ("l", Some((n, _))) => {
                let v = parse_vertex(tokens.next(), line, n)?;
                let role = tokens
                    .next()
                    .ok_or_else(|| syntax(line, "missing role"))?;
                labels.push((v, role.to_string()));
            }
            (other, Some(_)) => {
                return Err(syntax(line, format!("unknown line type `{other}`")));
            }
        }
        if tokens.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }

    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?.with_labels(labels)?)
}

/// Serializes a graph, edges in lexicographic order followed by labels.
pub fn write_graph(graph: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p edge {} {}", graph.order(), graph.size());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (v, role) in graph.labels() {
        let _ = writeln!(out, "l {} {}", v + 1, role);
    }
    out
}
