//! Backtracking search for color-preserving automorphisms.

use std::collections::BTreeMap;

use crate::graph::{ColorId, ColoredGraph};

use super::Permutation;

/// Stable vertex partition from iterated color refinement. Every
/// color-preserving automorphism maps each cell onto itself.
pub(crate) fn refined_cells(g: &ColoredGraph) -> Vec<usize> {
    let n = g.n();
    let vertex_ranks: BTreeMap<ColorId, usize> = g
        .vertex_color_classes()
        .into_keys()
        .enumerate()
        .map(|(k, c)| (c, k))
        .collect();
    let mut cells: Vec<usize> = g
        .vertices()
        .map(|v| vertex_ranks[g.vertex_color(v)])
        .collect();
    let mut cell_count = cells.iter().max().map_or(0, |m| m + 1);
    loop {
        let signatures: Vec<(usize, Vec<(&ColorId, usize)>)> = g
            .vertices()
            .map(|v| {
                let mut around: Vec<(&ColorId, usize)> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| (g.edge_color(v, w).expect("neighbor"), cells[w - 1]))
                    .collect();
                around.sort();
                (cells[v - 1], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<(&ColorId, usize)>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == cell_count || n == 0 {
            return cells;
        }
        cell_count = distinct.len();
        cells = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
    }
}

pub(crate) struct Searcher<'g> {
    g: &'g ColoredGraph,
    cells: Vec<usize>,
    cell_sizes: Vec<usize>,
}

impl<'g> Searcher<'g> {
    pub fn new(g: &'g ColoredGraph) -> Self {
        let cells = refined_cells(g);
        let mut cell_sizes = vec![0; cells.iter().max().map_or(0, |m| m + 1)];
        for &c in &cells {
            cell_sizes[c] += 1;
        }
        Searcher {
            g,
            cells,
            cell_sizes,
        }
    }

    pub fn cell(&self, v: usize) -> usize {
        self.cells[v - 1]
    }

    /// Assignment order: `first`, then greedily the vertex with the most
    /// already-ordered neighbors, breaking ties by cell size, degree and id.
    pub fn order_from(&self, first: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &v in first {
            if !placed[v - 1] {
                placed[v - 1] = true;
                order.push(v);
            }
        }
        let mut placed_neighbors = vec![0usize; n];
        for &v in &order {
            for &w in self.g.neighbors(v) {
                placed_neighbors[w - 1] += 1;
            }
        }
        while order.len() < n {
            let next = self
                .g
                .vertices()
                .filter(|&v| !placed[v - 1])
                .min_by_key(|&v| {
                    (
                        std::cmp::Reverse(placed_neighbors[v - 1]),
                        self.cell_sizes[self.cell(v)],
                        std::cmp::Reverse(self.g.degree(v)),
                        v,
                    )
                })
                .expect("unplaced vertex remains");
            placed[next - 1] = true;
            order.push(next);
            for &w in self.g.neighbors(next) {
                placed_neighbors[w - 1] += 1;
            }
        }
        order
    }

    /// Whether mapping `x -> y` agrees with every assignment in `assigned`.
    fn compatible(&self, x: usize, y: usize, assigned: &[usize], map: &[usize]) -> bool {
        if self.cell(x) != self.cell(y) {
            return false;
        }
        assigned.iter().all(|&a| {
            let b = map[a - 1];
            self.g.edge_color(x, a) == self.g.edge_color(y, b)
        })
    }

    /// Finds an automorphism extending the `(from, to)` pairs, if one exists.
    pub fn extend(&self, prescribed: &[(usize, usize)]) -> Option<Permutation> {
        let n = self.g.n();
        let mut map = vec![0usize; n];
        let mut used = vec![false; n];
        let mut assigned: Vec<usize> = Vec::with_capacity(n);
        for &(x, y) in prescribed {
            if map[x - 1] != 0 {
                if map[x - 1] != y {
                    return None;
                }
                continue;
            }
            if used[y - 1] || !self.compatible(x, y, &assigned, &map) {
                return None;
            }
            map[x - 1] = y;
            used[y - 1] = true;
            assigned.push(x);
        }
        let first: Vec<usize> = assigned.clone();
        let order = self.order_from(&first);
        if self.descend(&order, assigned.len(), &mut map, &mut used, &mut assigned) {
            let p = Permutation::from_images(map).expect("search builds a bijection");
            debug_assert!(p.is_automorphism_of(self.g));
            Some(p)
        } else {
            None
        }
    }

    fn descend(
        &self,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        assigned: &mut Vec<usize>,
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        let cell = self.cell(x);
        for y in self.g.vertices() {
            if used[y - 1] || self.cell(y) != cell || !self.compatible(x, y, assigned, map) {
                continue;
            }
            map[x - 1] = y;
            used[y - 1] = true;
            assigned.push(x);
            if self.descend(order, depth + 1, map, used, assigned) {
                return true;
            }
            assigned.pop();
            used[y - 1] = false;
            map[x - 1] = 0;
        }
        false
    }
}
