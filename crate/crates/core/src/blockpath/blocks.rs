use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Edge};

/// Biconnected components of a connected graph and its cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// A biconnected component that is not a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonBlockWitness {
    pub block: Vec<usize>,
    pub missing: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BlockVerdict {
    Block(BlockDecomposition),
    NotBlock(NonBlockWitness),
}

impl BlockVerdict {
    pub fn is_block(&self) -> bool {
        matches!(self, BlockVerdict::Block(_))
    }

    pub fn into_result(self) -> Result<BlockDecomposition> {
        match self {
            BlockVerdict::Block(d) => Ok(d),
            BlockVerdict::NotBlock(w) => Err(Error::NotBlockGraph {
                block: w.block,
                missing: w.missing,
            }),
        }
    }
}

/// Biconnected components (as vertex sets) via Hopcroft-Tarjan low-points.
pub fn biconnected_components(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();

    for root in g.vertices() {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        if g.degree(root) == 0 {
            components.push(vec![root]);
            continue;
        }
        // frames: (vertex, parent, neighbor list, next neighbor index)
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
            vec![(root, 0, g.neighbors(root).iter().copied().collect(), 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.3 < frame.2.len() {
                let w = frame.2[frame.3];
                frame.3 += 1;
                if disc[w] == 0 {
                    edge_stack.push((v, w));
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    stack.push((w, v, g.neighbors(w).iter().copied().collect(), 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last() {
                    let u = up.0;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        components.push(block.into_iter().collect());
                    }
                }
            }
        }
    }
    components.sort();
    components
}

/// Decides whether a connected graph is a block graph.
pub fn is_block_graph(g: &ColoredGraph) -> Result<BlockVerdict> {
    g.require_connected()?;
    let blocks = biconnected_components(g);
    for block in &blocks {
        for (k, &a) in block.iter().enumerate() {
            for &b in &block[k + 1..] {
                if !g.has_edge(a, b) {
                    return Ok(BlockVerdict::NotBlock(NonBlockWitness {
                        block: block.clone(),
                        missing: Edge::new(a, b).expect("distinct"),
                    }));
                }
            }
        }
    }
    let cut_vertices = g
        .vertices()
        .filter(|&v| blocks.iter().filter(|b| b.contains(&v)).count() > 1)
        .collect();
    Ok(BlockVerdict::Block(BlockDecomposition {
        blocks,
        cut_vertices,
    }))
}
