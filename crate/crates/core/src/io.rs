//! Edge-list documents and result documents.
//!
//! Edge-list format: an optional run of `#` comment lines, a header `n m`,
//! then `m` lines `u v` with `0 <= u < v < n`. Comment lines may appear
//! anywhere; blank lines are ignored. [`write_edge_list`] emits edges in
//! lexicographic order, one per line, each terminated by `\n`.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::ParseError;
use crate::graph::{build_graph, Graph};

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 * (edges.len() + 1));
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Same as [`write_edge_list`] with leading `# ` comment lines.
pub fn write_edge_list_with_comments<'a, I>(g: &Graph, comments: I) -> String
where
    I: IntoIterator<Item = &'a str>,
{
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    out.push_str(&write_edge_list(g));
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), ParseError> {
    let syntax = |message: String| ParseError::Syntax {
        line: lineno,
        message,
    };
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| syntax("expected two integers".into()))?;
        tok.parse::<usize>()
            .map_err(|_| syntax(format!("invalid integer {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if let Some(extra) = it.next() {
        return Err(syntax(format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = parse_pair(line, lineno)?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= b || b >= n {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        message: format!("edge ({a}, {b}) must satisfy 0 <= u < v < {n}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(build_graph(n, &edges)?)
}

/// Hex SHA-256 of a document, used to identify file inputs.
pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResultKind {
    Number,
    Polynomial,
    Spectrum,
    Predicate,
    Report,
}

/// Structured output of one command. Coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub kind: ResultKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<serde_json::Value>,
    pub provenance: String,
    pub elapsed_ms: f64,
}

impl ResultDocument {
    pub fn new(input: impl Into<String>, kind: ResultKind, provenance: impl ToString) -> Self {
        ResultDocument {
            input: input.into(),
            variant: None,
            kind,
            coefficients: None,
            value: None,
            report: None,
            provenance: provenance.to_string(),
            elapsed_ms: 0.0,
        }
    }

    /// The document with input identity and timing cleared, for comparing
    /// results computed from different sources.
    pub fn result_only(&self) -> ResultDocument {
        ResultDocument {
            input: String::new(),
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input:      {}", self.input);
        if let Some(v) = &self.variant {
            let _ = writeln!(out, "variant:    {v}");
        }
        let _ = writeln!(out, "kind:       {}", serde_json::to_value(self.kind).unwrap().as_str().unwrap_or(""));
        if let Some(c) = &self.coefficients {
            let _ = writeln!(out, "coeffs:     [{}]", c.join(","));
        }
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value:      {v}");
        }
        if let Some(r) = &self.report {
            let body = serde_json::to_string_pretty(r).unwrap_or_default();
            let _ = writeln!(out, "report:");
            for line in body.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "provenance: {}", self.provenance);
        let _ = writeln!(out, "elapsed_ms: {:.3}", self.elapsed_ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct, Family};
    use crate::error::GraphError;

    #[test]
    fn writes_exact_format() {
        let g = build_graph(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(
            write_edge_list_with_comments(&g, ["P3"]),
            "# P3\n3 2\n0 1\n1 2\n"
        );
    }

    #[test]
    fn parse_round_trip_keeps_labels() {
        let c = construct(&Family::FOneEll(3)).unwrap();
        let text = write_edge_list(&c.graph);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), c.graph.edges());
        assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn parse_accepts_comments_anywhere() {
        let g = parse_edge_list("# hello\n2 1\n# edge follows\n0 1\n\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("# only\n"), Err(ParseError::MissingHeader)));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 0\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("4 2\n0 1\n2 3\n"),
            Err(ParseError::Graph(GraphError::DisconnectedGraph { .. }))
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(ParseError::Graph(GraphError::DuplicateEdge { .. }))
        ));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            digest(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
