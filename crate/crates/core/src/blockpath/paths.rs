use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph, Edge};

/// A shortest path `v_1, ..., v_s` together with its colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathDescriptor {
    vertices: Vec<usize>,
    #[serde(skip)]
    vertex_colors: Vec<ColorId>,
    edge_colors: Vec<ColorId>,
}

impl PathDescriptor {
    /// Reads colors for a vertex sequence off `g`. Consecutive vertices must be adjacent.
    pub fn from_vertices(g: &ColoredGraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition(
                "a path needs at least one vertex".into(),
            ));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        let edge_colors = vertices
            .windows(2)
            .map(|w| {
                g.edge_color(w[0], w[1]).cloned().ok_or_else(|| {
                    Error::Precondition(format!("{} and {} are not adjacent", w[0], w[1]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let vertex_colors = vertices
            .iter()
            .map(|&v| g.vertex_color(v).clone())
            .collect();
        Ok(PathDescriptor {
            vertices,
            vertex_colors,
            edge_colors,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_colors(&self) -> &[ColorId] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[ColorId] {
        &self.edge_colors
    }

    pub fn source(&self) -> usize {
        self.vertices[0]
    }

    pub fn target(&self) -> usize {
        *self.vertices.last().expect("nonempty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edge_colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_colors.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]).expect("consecutive vertices differ"))
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> PathDescriptor {
        let mut p = self.clone();
        p.vertices.reverse();
        p.vertex_colors.reverse();
        p.edge_colors.reverse();
        p
    }

    /// The orientation whose first endpoint is the smaller id.
    pub fn normalized(&self) -> PathDescriptor {
        if self.source() <= self.target() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    /// The sub-path from position `from` to the end.
    pub fn suffix(&self, from: usize) -> PathDescriptor {
        PathDescriptor {
            vertices: self.vertices[from..].to_vec(),
            vertex_colors: self.vertex_colors[from..].to_vec(),
            edge_colors: self.edge_colors[from..].to_vec(),
        }
    }
}

/// Breadth-first search from `u` that counts shortest paths (saturating at 2).
/// Returns `(distance, path count, predecessor)` per vertex.
fn bfs_counts(g: &ColoredGraph, u: usize) -> (Vec<usize>, Vec<u8>, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![usize::MAX; n + 1];
    let mut count = vec![0u8; n + 1];
    let mut pred = vec![0usize; n + 1];
    dist[u] = 0;
    count[u] = 1;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                count[y] = count[x];
                pred[y] = x;
                queue.push_back(y);
            } else if dist[y] == dist[x] + 1 {
                count[y] = (count[y] + count[x]).min(2);
            }
        }
    }
    (dist, count, pred)
}

fn trace(pred: &[usize], u: usize, v: usize) -> Vec<usize> {
    let mut vertices = vec![v];
    let mut x = v;
    while x != u {
        x = pred[x];
        vertices.push(x);
    }
    vertices.reverse();
    vertices
}

/// The unique shortest path from `u` to `v`.
///
/// Fails with [`Error::NonUniquePath`] when two shortest paths exist, which
/// cannot happen in a block graph.
pub fn shortest_path(g: &ColoredGraph, u: usize, v: usize) -> Result<PathDescriptor> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (dist, count, pred) = bfs_counts(g, u);
    if dist[v] == usize::MAX {
        return Err(Error::Disconnected);
    }
    if count[v] > 1 {
        return Err(Error::NonUniquePath { u, v });
    }
    PathDescriptor::from_vertices(g, trace(&pred, u, v))
}

/// All-pairs unique shortest paths of a connected block graph.
#[derive(Clone, Debug)]
pub struct ShortestPaths {
    n: usize,
    // paths[(u-1)*n + (v-1)] runs from u to v
    paths: Vec<PathDescriptor>,
}

impl ShortestPaths {
    pub fn new(g: &ColoredGraph) -> Result<Self> {
        g.require_connected()?;
        let n = g.n();
        let mut paths = Vec::with_capacity(n * n);
        for u in g.vertices() {
            let (_, count, pred) = bfs_counts(g, u);
            for v in g.vertices() {
                if count[v] > 1 {
                    return Err(Error::NonUniquePath {
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                paths.push(PathDescriptor::from_vertices(g, trace(&pred, u, v))?);
            }
        }
        Ok(ShortestPaths { n, paths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The path from `u` to `v`. Panics on out-of-range ids.
    pub fn get(&self, u: usize, v: usize) -> &PathDescriptor {
        &self.paths[(u - 1) * self.n + (v - 1)]
    }

    /// Paths `u -> v` for all `u <= v`, in lexicographic order.
    pub fn upper(&self) -> impl Iterator<Item = &PathDescriptor> + '_ {
        (1..=self.n).flat_map(move |u| (u..=self.n).map(move |v| self.get(u, v)))
    }

    /// All oriented paths, including `u -> u`.
    pub fn all(&self) -> impl Iterator<Item = &PathDescriptor> + '_ {
        self.paths.iter()
    }
}

/// The multiset of endpoint colors and path edge colors, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LambdaMultiset {
    pub endpoint_colors: [ColorId; 2],
    pub edge_colors: Vec<ColorId>,
}

impl LambdaMultiset {
    /// All colors with multiplicity: endpoints first, then edges.
    pub fn iter(&self) -> impl Iterator<Item = &ColorId> + '_ {
        self.endpoint_colors.iter().chain(self.edge_colors.iter())
    }
}

pub fn path_lambda(p: &PathDescriptor) -> LambdaMultiset {
    let mut ends = [
        p.vertex_colors[0].clone(),
        p.vertex_colors[p.vertex_colors.len() - 1].clone(),
    ];
    ends.sort();
    let mut edge_colors = p.edge_colors.clone();
    edge_colors.sort();
    LambdaMultiset {
        endpoint_colors: ends,
        edge_colors,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathRelation {
    NotEquivalent,
    Combinatorial,
    Isomorphic,
}

fn same_sequences(p: &PathDescriptor, q: &PathDescriptor) -> bool {
    p.vertex_colors == q.vertex_colors && p.edge_colors == q.edge_colors
}

/// Whether the color sequences of `p` and `q` agree in order, allowing one to be reversed.
pub fn paths_isomorphic(p: &PathDescriptor, q: &PathDescriptor) -> bool {
    same_sequences(p, q) || same_sequences(p, &q.reversed())
}

pub fn paths_equivalent(p: &PathDescriptor, q: &PathDescriptor) -> PathRelation {
    if paths_isomorphic(p, q) {
        PathRelation::Isomorphic
    } else if path_lambda(p) == path_lambda(q) {
        PathRelation::Combinatorial
    } else {
        PathRelation::NotEquivalent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn paw_paths() {
        let g = corpus::paw();
        let p = shortest_path(&g, 1, 4).unwrap();
        assert_eq!(p.vertices(), &[1, 3, 4]);
        assert_eq!(p.edge_colors(), &[ColorId::edge("g"), ColorId::edge("y")]);
        let p = shortest_path(&g, 1, 2).unwrap();
        assert_eq!(p.vertices(), &[1, 2]);
        assert_eq!(p.edge_colors(), &[ColorId::edge("c")]);
        let p = shortest_path(&g, 3, 3).unwrap();
        assert_eq!(p.vertices(), &[3]);
        assert!(p.is_empty());
        assert_eq!(
            shortest_path(&g, 0, 1).unwrap_err(),
            Error::UnknownVertex(0)
        );
    }

    #[test]
    fn four_cycle_antipodes_are_ambiguous() {
        let g = corpus::frets_heads();
        assert_eq!(
            shortest_path(&g, 1, 3).unwrap_err(),
            Error::NonUniquePath { u: 1, v: 3 }
        );
        assert_eq!(
            shortest_path(&g, 2, 4).unwrap_err(),
            Error::NonUniquePath { u: 2, v: 4 }
        );
        assert!(shortest_path(&g, 1, 2).is_ok());
        assert!(matches!(
            ShortestPaths::new(&g),
            Err(Error::NonUniquePath { .. })
        ));
    }

    #[test]
    fn serializes_vertices_and_edge_colors() {
        let g = corpus::paw();
        let p = shortest_path(&g, 4, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"vertices":[4,3,1],"edge_colors":["edge:y","edge:g"]}"#
        );
        assert_eq!(p.normalized().vertices(), &[1, 3, 4]);
    }

    #[test]
    fn table_matches_single_queries() {
        let g = corpus::two_level_tree();
        let table = ShortestPaths::new(&g).unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(table.get(u, v), &shortest_path(&g, u, v).unwrap());
                assert_eq!(table.get(u, v), &table.get(v, u).reversed());
            }
        }
        assert_eq!(table.upper().count(), 66);
    }

    #[test]
    fn lambda_of_paw_paths() {
        let g = corpus::paw();
        let l14 = path_lambda(&shortest_path(&g, 1, 4).unwrap());
        let l24 = path_lambda(&shortest_path(&g, 4, 2).unwrap());
        assert_eq!(l14, l24);
        assert_eq!(
            l14.endpoint_colors,
            [ColorId::vertex("p"), ColorId::vertex("r")]
        );
        assert_eq!(
            l14.edge_colors,
            vec![ColorId::edge("g"), ColorId::edge("y")]
        );
        let l11 = path_lambda(&shortest_path(&g, 1, 1).unwrap());
        assert_eq!(
            l11.endpoint_colors,
            [ColorId::vertex("r"), ColorId::vertex("r")]
        );
        assert!(l11.edge_colors.is_empty());
    }

    #[test]
    fn equivalence_classification() {
        let g = corpus::paw();
        let p = |u, v| shortest_path(&g, u, v).unwrap();
        assert_eq!(
            paths_equivalent(&p(1, 4), &p(2, 4)),
            PathRelation::Isomorphic
        );
        assert_eq!(
            paths_equivalent(&p(1, 4), &p(4, 2)),
            PathRelation::Isomorphic
        );
        assert_eq!(
            paths_equivalent(&p(1, 2), &p(3, 4)),
            PathRelation::NotEquivalent
        );
        assert_eq!(
            paths_equivalent(&p(1, 3), &p(1, 3)),
            PathRelation::Isomorphic
        );

        // same multiset, different order
        let h = ColoredGraph::new(
            ["a", "b", "b", "a"],
            [(1, 2, "x"), (2, 3, "y"), (3, 4, "x")],
        )
        .unwrap();
        let g2 = ColoredGraph::new(
            ["a", "b", "b", "a", "b", "b", "a"],
            [
                (1, 2, "x"),
                (2, 3, "y"),
                (3, 4, "x"),
                (4, 5, "y"),
                (5, 6, "x"),
                (6, 7, "y"),
            ],
        )
        .unwrap();
        let q1 = shortest_path(&g2, 1, 3).unwrap();
        let q2 = shortest_path(&g2, 4, 6).unwrap();
        assert_eq!(paths_equivalent(&q1, &q2), PathRelation::Combinatorial);
        assert!(shortest_path(&h, 1, 4).is_ok());
    }
}
