//! Random RCOP block graphs.
//!
//! A random rooted block graph (the arm) is built from cliques of size 2 and 3,
//! vertex-labeled at random, and glued in several copies around a center. The
//! result is then colored by the orbits of its automorphism group, which always
//! yields an RCOP coloring.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{ColorId, ColoredGraph, Edge};
use crate::symmetry::automorphism_group;

/// Recolors `g` so that color classes are exactly the orbits of its
/// color-preserving automorphism group.
pub fn orbit_coloring(g: &ColoredGraph) -> ColoredGraph {
    let group = automorphism_group(g);
    let mut vertex_labels = vec![String::new(); g.n()];
    for (k, orbit) in group.vertex_orbits.iter().enumerate() {
        for &v in orbit {
            vertex_labels[v - 1] = format!("v{}", k + 1);
        }
    }
    let mut edge_labels: BTreeMap<Edge, String> = BTreeMap::new();
    for (k, orbit) in group.edge_orbits.iter().enumerate() {
        for &e in orbit {
            edge_labels.insert(e, format!("e{}", k + 1));
        }
    }
    g.recolored(
        |v| vertex_labels[v - 1].clone(),
        |e| edge_labels[&e].clone(),
    )
}

/// A random rooted block graph as an edge list on `0..size`, root `0`.
fn random_arm(rng: &mut impl Rng, size: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut count = 1;
    while count < size {
        let anchor = rng.gen_range(0..count);
        let clique = rng.gen_range(2..=4).min(size - count + 1);
        let members: Vec<usize> = std::iter::once(anchor)
            .chain(count..count + clique - 1)
            .collect();
        for (k, &x) in members.iter().enumerate() {
            for &y in &members[k + 1..] {
                edges.push((x, y));
            }
        }
        count += clique - 1;
    }
    edges
}

/// A random connected RCOP block graph with at most `max_n` vertices.
pub fn random_rcop_block_graph(seed: u64, max_n: usize) -> ColoredGraph {
    assert!(max_n >= 1, "need room for one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // center clique size and number of arm copies per center vertex
    let center = if max_n >= 3 { rng.gen_range(1..=3) } else { 1 };
    let copies_per_vertex = if center == 1 { rng.gen_range(1..=3) } else { 1 };
    let copies = center * copies_per_vertex;
    let budget = max_n.saturating_sub(center) / copies;
    let arm_size = 1 + if budget == 0 {
        0
    } else {
        rng.gen_range(budget.div_ceil(2)..=budget)
    };
    let arm = random_arm(&mut rng, arm_size);
    // usually every copy carries the same labels; otherwise copies may differ
    let shared = rng.gen_bool(0.8);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<&str> {
        (0..arm_size)
            .map(|_| if rng.gen_bool(0.3) { "y" } else { "x" })
            .collect()
    };
    let first = draw(&mut rng);

    let mut labels: Vec<String> = vec!["center".to_string(); center];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 1..=center {
        for b in a + 1..=center {
            edges.push((a, b));
        }
    }
    for c in 1..=center {
        for _ in 0..copies_per_vertex {
            // arm vertex k > 0 becomes vertex offset + k; the root is c
            let offset = labels.len();
            let arm_labels = if shared {
                first.clone()
            } else {
                draw(&mut rng)
            };
            labels.extend(arm_labels[1..].iter().map(|s| s.to_string()));
            let id = |k: usize| if k == 0 { c } else { offset + k };
            edges.extend(arm.iter().map(|&(x, y)| (id(x), id(y))));
        }
    }
    debug_assert!(labels.len() <= max_n.max(center));
    let g = ColoredGraph::new(&labels, edges.into_iter().map(|(u, v)| (u, v, "edge")))
        .expect("generated graph is valid");
    orbit_coloring(&g)
}

/// Whether some vertex or edge color is shared by two elements.
pub fn has_nontrivial_color_class(g: &ColoredGraph) -> bool {
    let classes: Vec<usize> = g
        .vertex_color_classes()
        .values()
        .map(Vec::len)
        .chain(g.edge_color_classes().values().map(Vec::len))
        .collect();
    classes.iter().any(|&k| k > 1)
}

/// Colors used by `g`, for convenience in reports.
pub fn color_labels(g: &ColoredGraph) -> Vec<ColorId> {
    g.colors()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blockpath::is_block_graph;
    use crate::symmetry::is_rcop;

    #[test]
    fn generated_graphs_are_rcop_block_graphs() {
        for seed in 0..40 {
            let g = random_rcop_block_graph(seed, 12);
            assert!(g.n() <= 12, "seed {seed}: n = {}", g.n());
            assert!(is_block_graph(&g).unwrap().is_block(), "seed {seed}");
            assert!(is_rcop(&g).unwrap().rcop, "seed {seed}");
        }
    }

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(
            random_rcop_block_graph(7, 10),
            random_rcop_block_graph(7, 10)
        );
    }

    #[test]
    fn orbit_coloring_of_uniform_path() {
        let p = ColoredGraph::new(["a"; 4], [(1, 2, "e"), (2, 3, "e"), (3, 4, "e")]).unwrap();
        let g = orbit_coloring(&p);
        assert_eq!(g.vertex_color(1), g.vertex_color(4));
        assert_ne!(g.vertex_color(1), g.vertex_color(2));
        assert_ne!(g.edge_color(1, 2), g.edge_color(2, 3));
        assert!(is_rcop(&g).unwrap().rcop);
    }
}
