use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::blockpath::{is_block_graph, path_lambda, LambdaMultiset, ShortestPaths};
use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph, Edge};
use crate::symmetry::{is_rcop, require_rcop};

/// Prefix of every color introduced by [`completion`].
pub const COMPLETION_COLOR_PREFIX: &str = "cmp:";

/// The complete graph extending an RCOP block graph, with new edges colored
/// by the color multiset of the path they shortcut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionGraph {
    #[serde(skip)]
    pub graph: ColoredGraph,
    /// Color multiset of the original path behind each added edge.
    pub provenance: BTreeMap<Edge, LambdaMultiset>,
}

impl CompletionGraph {
    pub fn added_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.provenance.keys().copied()
    }

    /// Colors that appear only on added edges.
    pub fn fresh_colors(&self) -> BTreeSet<&ColorId> {
        self.added_edges()
            .map(|e| self.graph.color_of_edge(e).expect("complete"))
            .collect()
    }
}

/// Deterministic edge color for a multiset: the prefix plus a SHA-256 digest
/// of its qualified labels.
pub fn completion_color(lambda: &LambdaMultiset) -> ColorId {
    let mut hasher = Sha256::new();
    for c in lambda.iter() {
        hasher.update(c.to_string().as_bytes());
        hasher.update([0u8]);
    }
    let digest = hasher.finalize();
    ColorId::edge(format!(
        "{COMPLETION_COLOR_PREFIX}{}",
        hex::encode(&digest[..8])
    ))
}

pub fn completion(g: &ColoredGraph) -> Result<CompletionGraph> {
    require_rcop(g)?;
    is_block_graph(g)?.into_result()?;
    let table = ShortestPaths::new(g)?;
    let existing: BTreeSet<ColorId> = g.colors().into_iter().collect();

    let mut edge_colors: BTreeMap<Edge, ColorId> = g.edges().map(|(e, c)| (e, c.clone())).collect();
    let mut provenance = BTreeMap::new();
    let mut fresh: BTreeMap<ColorId, LambdaMultiset> = BTreeMap::new();
    for u in g.vertices() {
        for v in u + 1..=g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let lambda = path_lambda(table.get(u, v));
            let color = completion_color(&lambda);
            if existing.contains(&color) {
                return Err(Error::Internal(format!(
                    "completion color {color} already used by the input"
                )));
            }
            if let Some(previous) = fresh.insert(color.clone(), lambda.clone()) {
                if previous != lambda {
                    return Err(Error::Internal(format!(
                        "completion color {color} collides"
                    )));
                }
            }
            let e = Edge::new(u, v).expect("u < v");
            edge_colors.insert(e, color);
            provenance.insert(e, lambda);
        }
    }
    let vertex_colors = g.vertices().map(|v| g.vertex_color(v).clone()).collect();
    let graph = ColoredGraph::from_parts(vertex_colors, edge_colors);
    let verdict = is_rcop(&graph)?;
    if let Some(w) = verdict.witness {
        return Err(Error::Internal(format!("completion is not RCOP: {w}")));
    }
    Ok(CompletionGraph { graph, provenance })
}
