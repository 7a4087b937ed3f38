//! The JSON graph file format.
//!
//! ```json
//! {"vertices": ["u", "v"], "edges": [{"src": "u", "dst": "v", "mult": "inf"}]}
//! ```

use std::collections::HashSet;

use gia_core::{EGraph, Multiplicity};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Vertex ids starting with this are reserved for quotient sinks.
pub const RESERVED_PREFIX: &str = "beta(";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub src: String,
    pub dst: String,
    pub mult: Value,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("malformed graph document at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("the vertex list is empty")]
    NoVertices,
    #[error("vertex {index}: {message}")]
    Vertex { index: usize, message: String },
    #[error("edge {index} ({src} -> {dst}): {message}")]
    Edge {
        index: usize,
        src: String,
        dst: String,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] gia_core::Error),
}

/// Parses a graph document, keeping vertices in declaration order.
pub fn parse_graph(text: &str) -> Result<EGraph, ParseError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_graph()
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<EGraph, ParseError> {
        if self.vertices.is_empty() {
            return Err(ParseError::NoVertices);
        }
        let mut seen = HashSet::new();
        for (index, v) in self.vertices.iter().enumerate() {
            let message = if v.is_empty() {
                "vertex ids must be nonempty".to_owned()
            } else if v.starts_with(RESERVED_PREFIX) {
                format!("`{v}` uses the reserved prefix `{RESERVED_PREFIX}`")
            } else if !seen.insert(v.as_str()) {
                format!("`{v}` is declared twice")
            } else {
                continue;
            };
            return Err(ParseError::Vertex { index, message });
        }

        let mut builder = EGraph::builder().vertices(self.vertices.iter().cloned());
        for (index, e) in self.edges.iter().enumerate() {
            let fail = |message: String| ParseError::Edge {
                index,
                src: e.src.clone(),
                dst: e.dst.clone(),
                message,
            };
            for end in [&e.src, &e.dst] {
                if !seen.contains(end.as_str()) {
                    return Err(fail(format!("undeclared vertex `{end}`")));
                }
            }
            let mult = parse_mult(&e.mult).map_err(fail)?;
            builder = builder.edge(e.src.as_str(), e.dst.as_str(), mult);
        }
        Ok(builder.build()?)
    }

    /// One edge entry per `(src, dst)` pair, in source then range order.
    pub fn from_graph(g: &EGraph) -> Self {
        let edges = g
            .edges()
            .map(|(s, d, k)| EdgeDocument {
                src: g.name(s).to_owned(),
                dst: g.name(d).to_owned(),
                mult: match k {
                    Multiplicity::Inf => Value::from("inf"),
                    Multiplicity::Finite(k) => Value::from(k),
                },
            })
            .collect();
        Self {
            vertices: g.names().to_vec(),
            edges,
        }
    }
}

fn parse_mult(v: &Value) -> Result<Multiplicity, String> {
    match v {
        Value::String(s) if s == "inf" => Ok(Multiplicity::Inf),
        Value::Number(n) => match n.as_u64() {
            Some(0) => Err("multiplicity must be positive".into()),
            Some(k) => Ok(Multiplicity::Finite(k)),
            None => Err(format!("multiplicity {n} is not a positive 64-bit integer")),
        },
        other => Err(format!(
            "multiplicity must be a positive integer or \"inf\", got {other}"
        )),
    }
}

/// Pretty-printed document with a trailing newline.
pub fn emit_graph(g: &EGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_graph(g))
        .expect("documents always serialize");
    s.push('\n');
    s
}
