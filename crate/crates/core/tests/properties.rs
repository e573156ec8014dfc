//! Property tests over arbitrary small colored graphs and random RCOP block graphs.

use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;

use rcop_toric::blockpath::{
    is_block_graph, path_lambda, paths_equivalent, structural_audit, PathDescriptor, PathRelation,
    ShortestPaths,
};
use rcop_toric::generate::random_rcop_block_graph;
use rcop_toric::graph::{
    c_components, neighborhood, parse_graph, regularity_report, serialize_graph,
};
use rcop_toric::markov::{
    certify_markov, rcop_basis, uncolored_basis, MarkovMove, DEFAULT_FIBER_CAP,
};
use rcop_toric::symmetry::{automorphism_group, is_rcop, path_automorphism, Permutation};
use rcop_toric::toric::{
    completion, exponent_matrix_endpoint, exponent_matrix_full, kernel_member, rowspan_equal,
    SigmaIndex,
};
use rcop_toric::verify::{
    evaluate_move, invert_exact, jordan_square_closed, sample_concentration, verify_vanishing,
};
use rcop_toric::{ColorKind, ColoredGraph, Edge};

const ELEMENT_CEILING: usize = 200_000;

/// Arbitrary graph on up to 7 vertices with labels from small alphabets.
fn colored_graph() -> impl Strategy<Value = ColoredGraph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(0usize..3, n),
            prop::collection::vec(prop::option::weighted(0.5, 0usize..3), pairs),
        )
            .prop_map(move |(vertex, edge)| {
                let vertex_labels: Vec<String> = vertex.iter().map(|k| format!("v{k}")).collect();
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if let Some(c) = edge[k] {
                            edges.push((u, v, format!("e{c}")));
                        }
                        k += 1;
                    }
                }
                ColoredGraph::new(vertex_labels, edges).expect("valid")
            })
    })
}

/// Arbitrary connected graph: a random tree plus random extra edges.
fn connected_graph() -> impl Strategy<Value = ColoredGraph> {
    colored_graph().prop_filter("connected", ColoredGraph::is_connected)
}

fn rcop_block_graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (any::<u64>(), 1..=max_n).prop_map(|(seed, n)| random_rcop_block_graph(seed, n))
}

fn same_colored_pairs(g: &ColoredGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for members in g.vertex_color_classes().values() {
        for (k, &u) in members.iter().enumerate() {
            for &v in &members[k + 1..] {
                out.push((u, v));
            }
        }
    }
    out
}

/// `c` plus every `c`-component except the one containing `other`.
fn components_away_from(g: &ColoredGraph, c: usize, other: usize) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = c_components(g, c)
        .unwrap()
        .into_iter()
        .filter(|s| !s.contains(other))
        .flat_map(|s| s.vertices().clone())
        .collect();
    out.insert(c);
    out
}

fn index(p: &PathDescriptor) -> SigmaIndex {
    SigmaIndex::new(p.source(), p.target()).unwrap()
}

fn image(p: &Permutation, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    set.iter().map(|&v| p.apply(v)).collect()
}

/// Looks for a group element swapping `a` and `b`, fixing every vertex
/// outside `x ∪ y` and exchanging `x` with `y`.
fn has_swap(
    elements: &[Permutation],
    a: usize,
    b: usize,
    x: &BTreeSet<usize>,
    y: &BTreeSet<usize>,
    n: usize,
) -> bool {
    elements.iter().any(|p| {
        p.apply(a) == b
            && p.apply(b) == a
            && image(p, x) == *y
            && image(p, y) == *x
            && (1..=n)
                .filter(|w| !x.contains(w) && !y.contains(w))
                .all(|w| p.apply(w) == w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(g in colored_graph()) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn color_namespaces_are_disjoint(g in colored_graph()) {
        for v in g.vertices() {
            prop_assert_eq!(g.vertex_color(v).kind(), ColorKind::Vertex);
        }
        for (_, c) in g.edges() {
            prop_assert_eq!(c.kind(), ColorKind::Edge);
        }
    }

    #[test]
    fn c_components_split_at_c(g in connected_graph()) {
        for c in g.vertices() {
            let parts = c_components(&g, c).unwrap();
            for (k, a) in parts.iter().enumerate() {
                for b in &parts[k + 1..] {
                    let common: BTreeSet<usize> = a.vertices().intersection(b.vertices()).copied().collect();
                    prop_assert_eq!(common, BTreeSet::from([c]));
                }
            }
            let mut edges: Vec<Edge> = parts.iter().flat_map(|s| s.edges()).collect();
            edges.sort();
            let all: Vec<Edge> = g.edges().map(|(e, _)| e).collect();
            prop_assert_eq!(edges, all);
        }
    }

    #[test]
    fn generators_are_automorphisms_and_orbits_refine_colors(g in colored_graph()) {
        let group = automorphism_group(&g);
        for p in &group.generators {
            prop_assert!(p.is_automorphism_of(&g));
        }
        for orbit in &group.vertex_orbits {
            prop_assert!(orbit.iter().all(|&v| g.vertex_color(v) == g.vertex_color(orbit[0])));
        }
        for orbit in &group.edge_orbits {
            prop_assert!(orbit.iter().all(|&e| g.color_of_edge(e) == g.color_of_edge(orbit[0])));
        }
        if g.is_connected() {
            let equal = group.vertex_orbits.len() == g.vertex_color_classes().len()
                && group.edge_orbits.len() == g.edge_color_classes().len();
            prop_assert_eq!(is_rcop(&g).unwrap().rcop, equal);
        }
    }

    #[test]
    fn rcop_graphs_are_regular(g in connected_graph()) {
        if is_rcop(&g).unwrap().rcop {
            let r = regularity_report(&g);
            prop_assert!(r.edge_regular && r.vertex_regular);
        }
    }

    #[test]
    fn uncolored_basis_ignores_colors(g in connected_graph(), salt in any::<u64>()) {
        prop_assume!(is_block_graph(&g).unwrap().is_block());
        let recolored = g.recolored(
            |v| format!("w{}", (v as u64 ^ salt) % 3),
            |e| format!("f{}", (e.u() as u64 * 7 + e.v() as u64 + salt) % 2),
        );
        prop_assert_eq!(uncolored_basis(&g).unwrap(), uncolored_basis(&recolored).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_graphs_are_rcop_block_graphs(g in rcop_block_graph(12)) {
        prop_assert!(g.n() <= 12);
        prop_assert!(is_block_graph(&g).unwrap().is_block());
        prop_assert!(is_rcop(&g).unwrap().rcop);
        prop_assert!(ShortestPaths::new(&g).is_ok());
    }

    #[test]
    fn audit_passes(g in rcop_block_graph(12)) {
        let report = structural_audit(&g).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn equivalent_paths_are_isomorphic_and_related_by_automorphisms(g in rcop_block_graph(9)) {
        let table = ShortestPaths::new(&g).unwrap();
        let paths: Vec<_> = table.upper().filter(|p| !p.is_empty()).collect();
        for (k, p) in paths.iter().enumerate() {
            for q in &paths[k + 1..] {
                let relation = paths_equivalent(p, q);
                prop_assert_ne!(relation, PathRelation::Combinatorial);
                if p.len() == q.len() {
                    let found = path_automorphism(&g, p, q).unwrap().is_some();
                    prop_assert_eq!(found, relation == PathRelation::Isomorphic, "{:?} {:?}", p, q);
                }
            }
        }
    }

    #[test]
    fn same_colored_edge_ends_can_be_swapped(g in rcop_block_graph(9)) {
        let elements = automorphism_group(&g).elements(ELEMENT_CEILING).unwrap();
        for (e, _) in g.edges() {
            let (u, v) = (e.u(), e.v());
            if g.vertex_color(u) == g.vertex_color(v) {
                let gu = components_away_from(&g, u, v);
                let gv = components_away_from(&g, v, u);
                prop_assert!(has_swap(&elements, u, v, &gu, &gv, g.n()), "edge {}", e);
            }
        }
        // two same-colored edges at a common vertex c: swap their c-components
        for c in g.vertices() {
            for &u in g.neighbors(c) {
                for &v in g.neighbors(c) {
                    if u < v && g.edge_color(c, u) == g.edge_color(c, v) {
                        let parts = c_components(&g, c).unwrap();
                        let hu = parts.iter().find(|s| s.contains(u)).unwrap().vertices().clone();
                        let hv = parts.iter().find(|s| s.contains(v)).unwrap().vertices().clone();
                        if hu == hv {
                            continue;
                        }
                        let mut hu_only = hu.clone();
                        hu_only.remove(&c);
                        let mut hv_only = hv.clone();
                        hv_only.remove(&c);
                        prop_assert!(has_swap(&elements, u, v, &hu_only, &hv_only, g.n()), "{} {} {}", c, u, v);
                    }
                }
            }
        }
    }

    #[test]
    fn same_colored_vertices_have_isomorphic_neighborhoods(g in rcop_block_graph(9)) {
        let elements = automorphism_group(&g).elements(ELEMENT_CEILING).unwrap();
        for (c, d) in same_colored_pairs(&g) {
            let gamma = elements.iter().find(|p| p.apply(c) == d);
            prop_assert!(gamma.is_some());
            let gamma = gamma.unwrap();
            let nc = neighborhood(&g, c).unwrap();
            let nd = neighborhood(&g, d).unwrap();
            prop_assert_eq!(&image(gamma, nc.vertices()), nd.vertices());
            let mapped: BTreeSet<Edge> = nc.edges().into_iter().map(|e| gamma.apply_edge(e)).collect();
            prop_assert_eq!(mapped, nd.edges().into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn exponent_matrices_agree(g in rcop_block_graph(12)) {
        let a = exponent_matrix_endpoint(&g).unwrap();
        let b = exponent_matrix_full(&g).unwrap();
        let table = ShortestPaths::new(&g).unwrap();
        prop_assert_eq!(&a.rows, &b.rows);
        for (c, s) in a.cols.iter().enumerate() {
            let len = table.get(s.i(), s.j()).len() as i64;
            prop_assert_eq!(a.column(c).iter().sum::<i64>(), 2 + len);
            prop_assert_eq!(b.column(c).iter().sum::<i64>(), 2 * len + 1);
        }
        for (r, color) in a.rows.iter().enumerate() {
            if color.kind() == ColorKind::Edge {
                prop_assert_eq!(&a.entries[r], &b.entries[r]);
            }
        }
        prop_assert!(rowspan_equal(&a, &b, Some(&g)).unwrap().passed());
        prop_assert_eq!(a.rank(), g.color_count());
    }

    #[test]
    fn completion_extends_the_coloring(g in rcop_block_graph(10)) {
        let c = completion(&g).unwrap();
        prop_assert!(c.graph.is_complete());
        for v in g.vertices() {
            prop_assert_eq!(c.graph.vertex_color(v), g.vertex_color(v));
        }
        for (e, color) in g.edges() {
            prop_assert_eq!(c.graph.color_of_edge(e), Some(color));
        }
        prop_assert!(is_rcop(&c.graph).unwrap().rcop);
        prop_assert!(jordan_square_closed(&c.graph, 2, 5).unwrap().closed);
    }

    #[test]
    fn basis_lies_in_kernel_and_vanishes(g in rcop_block_graph(7), seed in any::<u64>()) {
        let a = exponent_matrix_endpoint(&g).unwrap();
        let basis = rcop_basis(&g).unwrap();
        for m in &basis {
            prop_assert!(kernel_member(&a, m).unwrap());
        }
        prop_assert!(verify_vanishing(&g, &basis, 2, seed).unwrap().passed());
    }

    #[test]
    fn inequivalent_linear_forms_do_not_vanish(g in rcop_block_graph(8), seed in any::<u64>()) {
        let table = ShortestPaths::new(&g).unwrap();
        let sigma = invert_exact(&sample_concentration(&g, seed).matrix).unwrap();
        let paths: Vec<_> = table.upper().collect();
        for (k, p) in paths.iter().enumerate() {
            for q in &paths[k + 1..] {
                if path_lambda(p) != path_lambda(q) {
                    let m = MarkovMove::new(vec![index(p)], vec![index(q)]).unwrap();
                    prop_assert!(!evaluate_move(&sigma, &m).unwrap().is_zero(), "{}", m);
                }
            }
        }
    }

    #[test]
    fn inversion_is_an_involution(g in rcop_block_graph(8), seed in any::<u64>()) {
        let k = sample_concentration(&g, seed).matrix;
        let sigma = invert_exact(&k).unwrap();
        prop_assert_eq!(invert_exact(&sigma).unwrap(), k);
    }

    #[test]
    fn small_graphs_are_certified(g in rcop_block_graph(6)) {
        let a = exponent_matrix_endpoint(&g).unwrap();
        let cert = certify_markov(&a, &rcop_basis(&g).unwrap(), 2, DEFAULT_FIBER_CAP).unwrap();
        prop_assert!(cert.connected(), "{:?}", cert.disconnected);
    }
}
