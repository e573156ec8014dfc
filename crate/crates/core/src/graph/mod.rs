//! Colored graphs: the data model, JSON documents, validation and the local
//! structural predicates (regularity, neighborhoods, c-components).

mod document;
mod local;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use document::{
    parse_graph, serialize_graph, validate, validate_document, EdgeEntry, GraphDocument,
    ValidationReport, VertexEntry, Violation,
};
pub use local::{
    c_components, neighborhood, regularity_report, EdgeRegularityWitness, RegularityReport,
    Subgraph, VertexRegularityWitness,
};

/// Which namespace a color lives in. Vertex and edge colors never compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorKind {
    Vertex,
    Edge,
}

impl ColorKind {
    pub fn prefix(self) -> &'static str {
        match self {
            ColorKind::Vertex => "vertex",
            ColorKind::Edge => "edge",
        }
    }
}

/// A color: a label qualified by its namespace.
///
/// The qualified text form is `vertex:<label>` or `edge:<label>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId {
    kind: ColorKind,
    label: Arc<str>,
}

impl ColorId {
    pub fn vertex(label: impl Into<Arc<str>>) -> Self {
        ColorId {
            kind: ColorKind::Vertex,
            label: label.into(),
        }
    }

    pub fn edge(label: impl Into<Arc<str>>) -> Self {
        ColorId {
            kind: ColorKind::Edge,
            label: label.into(),
        }
    }

    pub fn kind(&self) -> ColorKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_vertex_color(&self) -> bool {
        self.kind == ColorKind::Vertex
    }

    /// Parses the qualified form produced by `Display`.
    pub fn parse_qualified(text: &str) -> Option<ColorId> {
        let (prefix, label) = text.split_once(':')?;
        if label.is_empty() {
            return None;
        }
        match prefix {
            "vertex" => Some(ColorId::vertex(label)),
            "edge" => Some(ColorId::edge(label)),
            _ => None,
        }
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.prefix(), self.label)
    }
}

impl Serialize for ColorId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ColorId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        ColorId::parse_qualified(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("not a qualified color: {text:?}")))
    }
}

/// An undirected edge with endpoints stored in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Returns `None` for a loop.
    pub fn new(a: usize, b: usize) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`.
    pub fn other(self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

/// A validated colored graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    vertex_colors: Vec<ColorId>,
    edge_colors: BTreeMap<Edge, ColorId>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl ColoredGraph {
    /// Builds a graph from vertex color labels (vertex `i` gets `vertex_labels[i-1]`)
    /// and `(u, v, label)` edge triples. Labels are unqualified; their namespace is
    /// implied by position.
    pub fn new<V, E, L>(vertex_labels: V, edges: E) -> Result<ColoredGraph>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        E: IntoIterator<Item = (usize, usize, L)>,
        L: AsRef<str>,
    {
        let vertices: Vec<VertexEntry> = vertex_labels
            .into_iter()
            .enumerate()
            .map(|(i, label)| VertexEntry {
                id: i as i64 + 1,
                color: label.as_ref().to_string(),
            })
            .collect();
        let edges: Vec<EdgeEntry> = edges
            .into_iter()
            .map(|(u, v, label)| EdgeEntry {
                u: u as i64,
                v: v as i64,
                color: label.as_ref().to_string(),
            })
            .collect();
        GraphDocument { vertices, edges }.into_graph()
    }

    /// Assembles a graph from parts that are already known to be consistent.
    pub(crate) fn from_parts(
        vertex_colors: Vec<ColorId>,
        edge_colors: BTreeMap<Edge, ColorId>,
    ) -> ColoredGraph {
        let n = vertex_colors.len();
        let mut adjacency = vec![BTreeSet::new(); n];
        for e in edge_colors.keys() {
            debug_assert!(e.v() <= n);
            adjacency[e.u() - 1].insert(e.v());
            adjacency[e.v() - 1].insert(e.u());
        }
        debug_assert!(vertex_colors.iter().all(ColorId::is_vertex_color));
        debug_assert!(edge_colors.values().all(|c| !c.is_vertex_color()));
        ColoredGraph {
            vertex_colors,
            edge_colors,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.n()).contains(&v)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Panics if `v` is not a vertex.
    pub fn vertex_color(&self, v: usize) -> &ColorId {
        &self.vertex_colors[v - 1]
    }

    pub fn edge_color(&self, a: usize, b: usize) -> Option<&ColorId> {
        Edge::new(a, b).and_then(|e| self.edge_colors.get(&e))
    }

    pub fn color_of_edge(&self, e: Edge) -> Option<&ColorId> {
        self.edge_colors.get(&e)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_color(a, b).is_some()
    }

    /// Edges in lexicographic order with their colors.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &ColorId)> + '_ {
        self.edge_colors.iter().map(|(e, c)| (*e, c))
    }

    pub fn edge_count(&self) -> usize {
        self.edge_colors.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// The first non-edge in lexicographic order, if any.
    pub fn first_non_edge(&self) -> Option<Edge> {
        for u in self.vertices() {
            for v in u + 1..=self.n() {
                if !self.has_edge(u, v) {
                    return Edge::new(u, v);
                }
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reachable_from(1, None).len() == self.n()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Vertices reachable from `start`, optionally treating `removed` as deleted.
    pub(crate) fn reachable_from(&self, start: usize, removed: Option<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if Some(y) != removed && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn vertex_color_classes(&self) -> BTreeMap<ColorId, Vec<usize>> {
        let mut classes: BTreeMap<ColorId, Vec<usize>> = BTreeMap::new();
        for v in self.vertices() {
            classes
                .entry(self.vertex_color(v).clone())
                .or_default()
                .push(v);
        }
        classes
    }

    pub fn edge_color_classes(&self) -> BTreeMap<ColorId, Vec<Edge>> {
        let mut classes: BTreeMap<ColorId, Vec<Edge>> = BTreeMap::new();
        for (e, c) in self.edges() {
            classes.entry(c.clone()).or_default().push(e);
        }
        classes
    }

    /// All colors in canonical order: vertex colors by their smallest vertex,
    /// then edge colors by their lexicographically smallest edge.
    pub fn colors(&self) -> Vec<ColorId> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for c in self.vertex_colors.iter().chain(self.edge_colors.values()) {
            if seen.insert(c) {
                out.push(c.clone());
            }
        }
        out
    }

    pub fn color_count(&self) -> usize {
        self.colors().len()
    }

    /// The same graph with every vertex and edge color replaced.
    pub fn recolored<F, G>(&self, mut vertex: F, mut edge: G) -> ColoredGraph
    where
        F: FnMut(usize) -> String,
        G: FnMut(Edge) -> String,
    {
        let vertex_colors = self
            .vertices()
            .map(|v| ColorId::vertex(vertex(v)))
            .collect();
        let edge_colors = self
            .edge_colors
            .keys()
            .map(|&e| (e, ColorId::edge(edge(e))))
            .collect();
        ColoredGraph::from_parts(vertex_colors, edge_colors)
    }
}
