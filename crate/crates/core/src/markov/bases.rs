use std::collections::{BTreeMap, BTreeSet};

use crate::blockpath::{is_block_graph, path_lambda, LambdaMultiset, ShortestPaths};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Edge};
use crate::symmetry::require_rcop;
use crate::toric::{exponent_matrix_from, kernel_member, PathMap, SigmaIndex};

use super::MarkovMove;

/// How each class of equal color multisets is turned into linear moves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LinearMoves {
    /// The class minimum against every other member.
    #[default]
    Star,
    /// Every pair of members.
    AllPairs,
}

fn sigma(a: usize, b: usize) -> SigmaIndex {
    SigmaIndex::new(a, b).expect("vertex ids start at 1")
}

/// Quadratic moves `(i,j)(k,l) - (i,k)(j,l)` whose two sides use the same
/// multiset of edges, ignoring colors.
pub fn uncolored_basis(g: &ColoredGraph) -> Result<Vec<MarkovMove>> {
    is_block_graph(g)?.into_result()?;
    let table = ShortestPaths::new(g)?;
    Ok(uncolored_from(g, &table))
}

fn uncolored_from(g: &ColoredGraph, table: &ShortestPaths) -> Vec<MarkovMove> {
    let n = g.n();
    let edges_of = |u: usize, v: usize| -> Vec<Edge> { table.get(u, v).edges() };
    let mut edge_sets: Vec<Vec<Edge>> = Vec::with_capacity(n * n);
    for u in 1..=n {
        for v in 1..=n {
            let mut e = edges_of(u, v);
            e.sort();
            edge_sets.push(e);
        }
    }
    let path = |u: usize, v: usize| &edge_sets[(u - 1) * n + (v - 1)];
    let union = |x: &[Edge], y: &[Edge]| {
        let mut z: Vec<Edge> = x.iter().chain(y).copied().collect();
        z.sort();
        z
    };
    let mut moves = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    if union(path(i, j), path(k, l)) != union(path(i, k), path(j, l)) {
                        continue;
                    }
                    let m = MarkovMove::new(
                        vec![sigma(i, j), sigma(k, l)],
                        vec![sigma(i, k), sigma(j, l)],
                    )
                    .expect("both sides are quadratic");
                    if !m.is_zero() {
                        moves.insert(m);
                    }
                }
            }
        }
    }
    moves.into_iter().collect()
}

/// Indices grouped by the color multiset of their shortest path, each group sorted.
pub fn lambda_classes(g: &ColoredGraph) -> Result<BTreeMap<LambdaMultiset, Vec<SigmaIndex>>> {
    let table = ShortestPaths::new(g)?;
    Ok(lambda_classes_from(&table))
}

fn lambda_classes_from(table: &ShortestPaths) -> BTreeMap<LambdaMultiset, Vec<SigmaIndex>> {
    let mut classes: BTreeMap<LambdaMultiset, Vec<SigmaIndex>> = BTreeMap::new();
    for p in table.upper() {
        classes
            .entry(path_lambda(p))
            .or_default()
            .push(sigma(p.source(), p.target()));
    }
    classes
}

/// Linear moves `(i,j) - (k,l)` between indices whose paths share a color multiset.
pub fn completion_basis(g: &ColoredGraph, mode: LinearMoves) -> Result<Vec<MarkovMove>> {
    require_rcop(g)?;
    is_block_graph(g)?.into_result()?;
    let table = ShortestPaths::new(g)?;
    Ok(completion_from(&table, mode))
}

fn completion_from(table: &ShortestPaths, mode: LinearMoves) -> Vec<MarkovMove> {
    let mut moves = BTreeSet::new();
    for members in lambda_classes_from(table).values() {
        let pairs: Vec<(SigmaIndex, SigmaIndex)> = match mode {
            LinearMoves::Star => members[1..].iter().map(|&s| (members[0], s)).collect(),
            LinearMoves::AllPairs => members
                .iter()
                .enumerate()
                .flat_map(|(k, &a)| members[k + 1..].iter().map(move |&b| (a, b)))
                .collect(),
        };
        for (a, b) in pairs {
            moves.insert(MarkovMove::new(vec![a], vec![b]).expect("linear"));
        }
    }
    moves.into_iter().collect()
}

/// The union of [`uncolored_basis`] and the star-shaped [`completion_basis`],
/// every move checked against the endpoint exponent matrix.
pub fn rcop_basis(g: &ColoredGraph) -> Result<Vec<MarkovMove>> {
    rcop_basis_with(g, LinearMoves::Star)
}

pub fn rcop_basis_with(g: &ColoredGraph, mode: LinearMoves) -> Result<Vec<MarkovMove>> {
    require_rcop(g)?;
    is_block_graph(g)?.into_result()?;
    let table = ShortestPaths::new(g)?;
    let a = exponent_matrix_from(g, &table, PathMap::Endpoint);
    let mut moves: BTreeSet<MarkovMove> = uncolored_from(g, &table).into_iter().collect();
    moves.extend(completion_from(&table, mode));
    for m in &moves {
        if !kernel_member(&a, m)? {
            return Err(Error::Internal(format!("{m} is not in the kernel")));
        }
    }
    Ok(moves.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn strings(moves: &[MarkovMove]) -> Vec<String> {
        moves.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn paw_uncolored() {
        let b = uncolored_basis(&corpus::paw()).unwrap();
        let mut got = strings(&b);
        got.sort();
        assert_eq!(
            got,
            [
                "(1,3)(2,4)-(1,4)(2,3)",
                "(1,3)(3,4)-(1,4)(3,3)",
                "(2,3)(3,4)-(2,4)(3,3)"
            ]
        );
    }

    #[test]
    fn complete_graphs_have_no_quadratic_moves() {
        for n in 2..=4 {
            assert!(uncolored_basis(&corpus::complete_distinct(n))
                .unwrap()
                .is_empty());
        }
        let k2 = ColoredGraph::new(["a", "b"], [(1, 2, "e")]).unwrap();
        assert!(uncolored_basis(&k2).unwrap().is_empty());
    }

    #[test]
    fn paw_linear() {
        let b = completion_basis(&corpus::paw(), LinearMoves::Star).unwrap();
        assert_eq!(strings(&b), ["(1,1)-(2,2)", "(1,3)-(2,3)", "(1,4)-(2,4)"]);
        assert!(
            completion_basis(&corpus::complete_distinct(3), LinearMoves::Star)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn star_and_all_pairs_differ_on_large_classes() {
        let g = corpus::complete_uniform(3);
        let star = completion_basis(&g, LinearMoves::Star).unwrap();
        let all = completion_basis(&g, LinearMoves::AllPairs).unwrap();
        // classes {11,22,33} and {12,13,23}
        assert_eq!(star.len(), 4);
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn paw_full_basis() {
        let b = rcop_basis(&corpus::paw()).unwrap();
        assert_eq!(b.len(), 6);
        assert!(b[..3].iter().all(|m| m.degree() == 1));
        assert!(rcop_basis(&corpus::complete_distinct(4))
            .unwrap()
            .is_empty());
        assert!(!rcop_basis(&corpus::two_level_tree()).unwrap().is_empty());
    }

    #[test]
    fn non_rcop_inputs_are_rejected() {
        assert!(matches!(
            rcop_basis(&corpus::path_shared_edge_color()),
            Err(Error::NotRcop(_))
        ));
        assert!(matches!(
            uncolored_basis(&corpus::frets_heads()),
            Err(Error::NotBlockGraph { .. })
        ));
    }
}
