//! Named example graphs used by tests, the CLI data files and the web demo.

use crate::graph::ColoredGraph;

/// Triangle `{1,2,3}` with pendant vertex 4 attached at 3.
///
/// Vertex colors `r = {1,2}`, `b = {3}`, `p = {4}`; edge colors
/// `c = {12}`, `g = {13,23}`, `y = {34}`.
pub fn paw() -> ColoredGraph {
    ColoredGraph::new(
        ["r", "r", "b", "p"],
        [(1, 2, "c"), (1, 3, "g"), (2, 3, "g"), (3, 4, "y")],
    )
    .expect("valid")
}

/// An 11-vertex RCOP block graph whose color-preserving automorphism group is
/// `<(1 2), (4 5)(6 7)(8 10)(9 11), (8 9), (10 11)>`.
///
/// Leaves 1 and 2 hang off vertex 3, which sits in the triangle `{3,4,5}`;
/// 4 and 5 each carry a path to a vertex (6, 7) with two leaves.
pub fn two_level_tree() -> ColoredGraph {
    two_level_tree_with(["a", "a", "b", "c", "c", "d", "d", "e", "e", "e", "e"])
}

/// [`two_level_tree`] with vertex 2 moved to a fresh color; no longer RCOP.
pub fn two_level_tree_recolored() -> ColoredGraph {
    two_level_tree_with(["a", "z", "b", "c", "c", "d", "d", "e", "e", "e", "e"])
}

fn two_level_tree_with(vertex_colors: [&str; 11]) -> ColoredGraph {
    ColoredGraph::new(
        vertex_colors,
        [
            (1, 3, "leaf"),
            (2, 3, "leaf"),
            (3, 4, "spoke"),
            (3, 5, "spoke"),
            (4, 5, "rim"),
            (4, 6, "stem"),
            (5, 7, "stem"),
            (6, 8, "twig"),
            (6, 9, "twig"),
            (7, 10, "twig"),
            (7, 11, "twig"),
        ],
    )
    .expect("valid")
}

/// Path `1-2-3` with distinct vertex colors and one shared edge color.
pub fn path_shared_edge_color() -> ColoredGraph {
    ColoredGraph::new(["a", "b", "c"], [(1, 2, "e"), (2, 3, "e")]).expect("valid")
}

/// The 4-cycle `1-2-3-4-1` with `λ(1)=λ(2)`, `λ(3)=λ(4)`, `λ({1,4})=λ({2,3})`.
pub fn frets_heads() -> ColoredGraph {
    ColoredGraph::new(
        ["a", "a", "b", "b"],
        [(1, 2, "x"), (2, 3, "f"), (3, 4, "y"), (1, 4, "f")],
    )
    .expect("valid")
}

pub fn single_vertex() -> ColoredGraph {
    ColoredGraph::new(["a"], Vec::<(usize, usize, &str)>::new()).expect("valid")
}

/// `K_n` with every vertex and edge in its own color.
pub fn complete_distinct(n: usize) -> ColoredGraph {
    let vertex_colors: Vec<String> = (1..=n).map(|v| format!("v{v}")).collect();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v, format!("e{u}_{v}")));
        }
    }
    ColoredGraph::new(vertex_colors, edges).expect("valid")
}

/// `K_n` with a single vertex color and a single edge color.
pub fn complete_uniform(n: usize) -> ColoredGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v, "e"));
        }
    }
    ColoredGraph::new(vec!["v"; n], edges).expect("valid")
}

/// Star with `leaves` leaves around center 1, leaves and spokes uniformly colored.
pub fn star(leaves: usize) -> ColoredGraph {
    let mut colors = vec!["center"];
    colors.extend(std::iter::repeat_n("leaf", leaves));
    let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v, "spoke")).collect();
    ColoredGraph::new(colors, edges).expect("valid")
}

/// Path `1-2-...-n` colored by its reflection symmetry.
pub fn symmetric_path(n: usize) -> ColoredGraph {
    let vertex_colors: Vec<String> = (1..=n).map(|v| format!("v{}", v.min(n + 1 - v))).collect();
    let edges: Vec<_> = (1..n)
        .map(|v| (v, v + 1, format!("e{}", v.min(n - v))))
        .collect();
    ColoredGraph::new(vertex_colors, edges).expect("valid")
}

/// Every named RCOP block graph in the corpus.
pub fn rcop_block_graphs() -> Vec<(&'static str, ColoredGraph)> {
    vec![
        ("paw", paw()),
        ("two_level_tree", two_level_tree()),
        ("single_vertex", single_vertex()),
        ("k2_distinct", complete_distinct(2)),
        ("k3_uniform", complete_uniform(3)),
        ("k4_uniform", complete_uniform(4)),
        ("star4", star(4)),
        ("path5", symmetric_path(5)),
        ("path6", symmetric_path(6)),
    ]
}
