use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{ColorId, ColoredGraph, Edge};
use crate::error::Result;

/// An induced subgraph of a parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph<'g> {
    parent: &'g ColoredGraph,
    vertices: BTreeSet<usize>,
}

impl<'g> Subgraph<'g> {
    pub fn induced(parent: &'g ColoredGraph, vertices: BTreeSet<usize>) -> Self {
        Subgraph { parent, vertices }
    }

    pub fn parent(&self) -> &'g ColoredGraph {
        self.parent
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Parent edges with both ends inside the subgraph.
    pub fn edges(&self) -> Vec<Edge> {
        self.parent
            .edges()
            .map(|(e, _)| e)
            .filter(|e| self.contains(e.u()) && self.contains(e.v()))
            .collect()
    }
}

/// Two same-colored edges joining different vertex-color pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRegularityWitness {
    pub color: ColorId,
    pub first: Edge,
    pub second: Edge,
}

/// Two same-colored vertices meeting a different number of `edge_color` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRegularityWitness {
    pub edge_color: ColorId,
    pub first: usize,
    pub second: usize,
    pub first_count: usize,
    pub second_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub edge_regular: bool,
    pub vertex_regular: bool,
    pub edge_witness: Option<EdgeRegularityWitness>,
    pub vertex_witness: Option<VertexRegularityWitness>,
}

fn endpoint_colors(g: &ColoredGraph, e: Edge) -> [&ColorId; 2] {
    let (a, b) = (g.vertex_color(e.u()), g.vertex_color(e.v()));
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

pub fn regularity_report(g: &ColoredGraph) -> RegularityReport {
    let mut edge_witness = None;
    'classes: for (color, edges) in g.edge_color_classes() {
        let first = edges[0];
        for &e in &edges[1..] {
            if endpoint_colors(g, e) != endpoint_colors(g, first) {
                edge_witness = Some(EdgeRegularityWitness {
                    color,
                    first,
                    second: e,
                });
                break 'classes;
            }
        }
    }

    // incidence[v][edge color] = number of incident edges of that color
    let incidence: Vec<BTreeMap<&ColorId, usize>> = g
        .vertices()
        .map(|v| {
            let mut counts = BTreeMap::new();
            for &w in g.neighbors(v) {
                *counts
                    .entry(g.edge_color(v, w).expect("neighbor"))
                    .or_insert(0) += 1;
            }
            counts
        })
        .collect();
    let edge_colors: Vec<ColorId> = g.edge_color_classes().into_keys().collect();
    let mut vertex_witness = None;
    'vclasses: for members in g.vertex_color_classes().values() {
        let first = members[0];
        for &other in &members[1..] {
            for color in &edge_colors {
                let a = incidence[first - 1].get(color).copied().unwrap_or(0);
                let b = incidence[other - 1].get(color).copied().unwrap_or(0);
                if a != b {
                    vertex_witness = Some(VertexRegularityWitness {
                        edge_color: color.clone(),
                        first,
                        second: other,
                        first_count: a,
                        second_count: b,
                    });
                    break 'vclasses;
                }
            }
        }
    }

    RegularityReport {
        edge_regular: edge_witness.is_none(),
        vertex_regular: vertex_witness.is_none(),
        edge_witness,
        vertex_witness,
    }
}

/// The subgraph induced by `c` and its neighbors.
pub fn neighborhood(g: &ColoredGraph, c: usize) -> Result<Subgraph<'_>> {
    g.check_vertex(c)?;
    let mut vertices = g.neighbors(c).clone();
    vertices.insert(c);
    Ok(Subgraph::induced(g, vertices))
}

/// The components of `g - c`, each with `c` added back, ordered by smallest vertex.
pub fn c_components(g: &ColoredGraph, c: usize) -> Result<Vec<Subgraph<'_>>> {
    g.check_vertex(c)?;
    g.require_connected()?;
    let mut assigned = BTreeSet::from([c]);
    let mut out = Vec::new();
    for start in g.vertices() {
        if assigned.contains(&start) {
            continue;
        }
        let mut component = g.reachable_from(start, Some(c));
        assigned.extend(component.iter().copied());
        component.insert(c);
        out.push(Subgraph::induced(g, component));
    }
    if out.is_empty() {
        out.push(Subgraph::induced(g, BTreeSet::from([c])));
    }
    Ok(out)
}
