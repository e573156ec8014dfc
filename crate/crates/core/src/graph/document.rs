use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ColorId, ColorKind, ColoredGraph, Edge};
use crate::error::{Error, Result};

/// The on-disk JSON form of a colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<VertexEntry>,
    #[serde(default)]
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: i64,
    pub color: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: i64,
    pub v: i64,
    pub color: String,
}

/// A violated graph invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    InvalidVertexId { id: i64 },
    DuplicateVertex { id: i64 },
    VertexIdGap { missing: i64 },
    Loop { vertex: i64 },
    DuplicateEdge { u: i64, v: i64 },
    UnknownEndpoint { u: i64, v: i64 },
    MissingColor { element: String },
    NamespaceCollision { element: String, color: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidVertexId { id } => write!(f, "vertex id {id} is not positive"),
            Violation::DuplicateVertex { id } => write!(f, "vertex {id} is declared twice"),
            Violation::VertexIdGap { missing } => write!(f, "vertex id {missing} is missing"),
            Violation::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Violation::DuplicateEdge { u, v } => write!(f, "edge {{{u},{v}}} is declared twice"),
            Violation::UnknownEndpoint { u, v } => {
                write!(f, "edge {{{u},{v}}} references an undeclared vertex")
            }
            Violation::MissingColor { element } => write!(f, "{element} has no color"),
            Violation::NamespaceCollision { element, color } => {
                write!(f, "{element} uses color {color:?} from the wrong namespace")
            }
        }
    }
}

/// Result of [`validate`]: every violated invariant plus a connectivity flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub connected: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Resolves a color string at a given position. A label may name its namespace
/// explicitly (`vertex:r`, `edge:c`); naming the other namespace is a collision.
fn resolve_color(
    raw: &str,
    position: ColorKind,
    element: impl FnOnce() -> String,
) -> std::result::Result<ColorId, Violation> {
    let (kind, label) = match raw.split_once(':') {
        Some(("vertex", rest)) => (ColorKind::Vertex, rest),
        Some(("edge", rest)) => (ColorKind::Edge, rest),
        _ => (position, raw),
    };
    if label.is_empty() {
        return Err(Violation::MissingColor { element: element() });
    }
    if kind != position {
        return Err(Violation::NamespaceCollision {
            element: element(),
            color: raw.to_string(),
        });
    }
    Ok(match kind {
        ColorKind::Vertex => ColorId::vertex(label),
        ColorKind::Edge => ColorId::edge(label),
    })
}

impl GraphDocument {
    fn check(&self) -> (Vec<Violation>, Option<ColoredGraph>, bool) {
        let mut violations = Vec::new();
        let mut colors: BTreeMap<i64, ColorId> = BTreeMap::new();
        for entry in &self.vertices {
            if entry.id < 1 {
                violations.push(Violation::InvalidVertexId { id: entry.id });
                continue;
            }
            let color = resolve_color(&entry.color, ColorKind::Vertex, || {
                format!("vertex {}", entry.id)
            });
            match color {
                Err(v) => violations.push(v),
                Ok(c) => {
                    if colors.insert(entry.id, c).is_some() {
                        violations.push(Violation::DuplicateVertex { id: entry.id });
                    }
                }
            }
        }
        let declared: BTreeSet<i64> = self
            .vertices
            .iter()
            .map(|v| v.id)
            .filter(|&id| id >= 1)
            .collect();
        let n = declared.iter().next_back().copied().unwrap_or(0);
        for missing in (1..=n).filter(|id| !declared.contains(id)) {
            violations.push(Violation::VertexIdGap { missing });
        }

        let mut edge_colors = BTreeMap::new();
        let mut adjacency: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for entry in &self.edges {
            let (u, v) = (entry.u, entry.v);
            if u == v {
                violations.push(Violation::Loop { vertex: u });
                continue;
            }
            if !declared.contains(&u) || !declared.contains(&v) {
                violations.push(Violation::UnknownEndpoint { u, v });
                continue;
            }
            let color = resolve_color(&entry.color, ColorKind::Edge, || {
                format!("edge {{{u},{v}}}")
            });
            let edge = Edge::new(u as usize, v as usize).expect("not a loop");
            match color {
                Err(violation) => violations.push(violation),
                Ok(c) => {
                    if edge_colors.insert(edge, c).is_some() {
                        violations.push(Violation::DuplicateEdge {
                            u: u.min(v),
                            v: u.max(v),
                        });
                    }
                }
            }
            adjacency.entry(u).or_default().push(v);
            adjacency.entry(v).or_default().push(u);
        }

        let connected = match declared.iter().next() {
            None => true,
            Some(&start) => {
                let mut seen = BTreeSet::from([start]);
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for &y in adjacency.get(&x).into_iter().flatten() {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
                seen.len() == declared.len()
            }
        };

        let graph = if violations.is_empty() {
            let vertex_colors = colors.into_values().collect();
            Some(ColoredGraph::from_parts(vertex_colors, edge_colors))
        } else {
            None
        };
        (violations, graph, connected)
    }

    /// Converts to a validated graph, failing on the first violation.
    pub fn into_graph(self) -> Result<ColoredGraph> {
        let (violations, graph, _) = self.check();
        match violations.into_iter().next() {
            Some(v) => Err(Error::InvalidGraph(v)),
            None => Ok(graph.expect("no violations")),
        }
    }
}

impl From<&ColoredGraph> for GraphDocument {
    fn from(g: &ColoredGraph) -> Self {
        GraphDocument {
            vertices: g
                .vertices()
                .map(|v| VertexEntry {
                    id: v as i64,
                    color: g.vertex_color(v).label().to_string(),
                })
                .collect(),
            edges: g
                .edges()
                .map(|(e, c)| EdgeEntry {
                    u: e.u() as i64,
                    v: e.v() as i64,
                    color: c.label().to_string(),
                })
                .collect(),
        }
    }
}

/// Parses and validates a JSON graph document.
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Syntax | Category::Eof | Category::Io => Error::Syntax(e.to_string()),
            Category::Data => Error::Schema(e.to_string()),
        }
    })?;
    doc.into_graph()
}

/// Serializes with vertices sorted by id and edges sorted by `(u, v)`.
pub fn serialize_graph(g: &ColoredGraph) -> String {
    serde_json::to_string_pretty(&GraphDocument::from(g)).expect("graph documents serialize")
}

/// Reports every violated invariant of a raw document.
pub fn validate_document(doc: &GraphDocument) -> ValidationReport {
    let (violations, _, connected) = doc.check();
    ValidationReport {
        violations,
        connected,
    }
}

/// Validation report for an already-constructed graph.
pub fn validate(g: &ColoredGraph) -> ValidationReport {
    validate_document(&GraphDocument::from(g))
}
