//! The color-preserving automorphism group, its orbits, the RCOP test and
//! automorphisms carrying one shortest path onto another.

mod permutation;
mod search;

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::blockpath::PathDescriptor;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Edge};
use crate::union_find::UnionFind;

pub use permutation::Permutation;
pub(crate) use search::Searcher;

/// Default ceiling for enumerating all group elements.
pub const DEFAULT_CLOSURE_CEILING: usize = 1_000_000;

/// Generators and orbits of the color-preserving automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupDescription {
    pub generators: Vec<Permutation>,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<Edge>>,
    /// Group order from the stabilizer chain built during the search.
    #[serde(serialize_with = "serialize_u128")]
    pub order: u128,
    #[serde(skip)]
    degree: usize,
}

fn serialize_u128<S: serde::Serializer>(x: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl GroupDescription {
    /// Builds the description of the group generated by `generators` on `g`.
    pub fn from_generators(g: &ColoredGraph, generators: Vec<Permutation>) -> Self {
        let vertex_orbits = vertex_orbits(g.n(), &generators);
        let edge_orbits = edge_orbits(g, &generators);
        let mut description = GroupDescription {
            generators,
            vertex_orbits,
            edge_orbits,
            order: 0,
            degree: g.n(),
        };
        description.order = description
            .elements(DEFAULT_CLOSURE_CEILING)
            .map_or(0, |e| e.len() as u128);
        description
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All group elements by breadth-first closure; fails beyond `ceiling`.
    pub fn elements(&self, ceiling: usize) -> Result<Vec<Permutation>> {
        let identity = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut out = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for gen in &self.generators {
                let q = gen.compose(&p);
                if seen.insert(q.clone()) {
                    if seen.len() > ceiling {
                        return Err(Error::GroupTooLarge(ceiling));
                    }
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Group order by closure enumeration.
    pub fn order_by_closure(&self, ceiling: usize) -> Result<usize> {
        self.elements(ceiling).map(|e| e.len())
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.vertex_orbits
            .iter()
            .any(|orbit| orbit.contains(&a) && orbit.contains(&b))
    }
}

fn vertex_orbits(n: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for p in generators {
        for v in 1..=n {
            uf.union(v - 1, p.apply(v) - 1);
        }
    }
    uf.groups()
        .into_iter()
        .map(|group| group.into_iter().map(|i| i + 1).collect())
        .collect()
}

fn edge_orbits(g: &ColoredGraph, generators: &[Permutation]) -> Vec<Vec<Edge>> {
    let edges: Vec<Edge> = g.edges().map(|(e, _)| e).collect();
    let mut uf = UnionFind::new(edges.len());
    for p in generators {
        for (k, &e) in edges.iter().enumerate() {
            let image = p.apply_edge(e);
            let j = edges
                .binary_search(&image)
                .expect("automorphisms map edges to edges");
            uf.union(k, j);
        }
    }
    uf.groups()
        .into_iter()
        .map(|group| group.into_iter().map(|i| edges[i]).collect())
        .collect()
}

/// Orbit of `v` under the group generated by `generators`.
fn orbit_of(v: usize, generators: &[Permutation]) -> BTreeSet<usize> {
    let mut orbit = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for p in generators {
            let y = p.apply(x);
            if orbit.insert(y) {
                queue.push_back(y);
            }
        }
    }
    orbit
}

/// Computes a generating set of the color-preserving automorphism group.
///
/// Generators are found level by level along a base: at level `k` the search
/// looks for automorphisms fixing the first `k` base points and moving the
/// next one to each point not yet reached by the generators found so far. The
/// generators found at levels `>= k` generate the pointwise stabilizer of the
/// first `k` base points, so the group order is the product of the orbit sizes.
pub fn automorphism_group(g: &ColoredGraph) -> GroupDescription {
    let searcher = Searcher::new(g);
    let base = searcher.order_from(&[]);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for k in (0..base.len()).rev() {
        let b = base[k];
        let fixed = &base[..k];
        let mut orbit = orbit_of(b, &generators);
        for w in g.vertices() {
            if orbit.contains(&w) || fixed.contains(&w) || searcher.cell(w) != searcher.cell(b) {
                continue;
            }
            let mut prescribed: Vec<(usize, usize)> = fixed.iter().map(|&x| (x, x)).collect();
            prescribed.push((b, w));
            if let Some(p) = searcher.extend(&prescribed) {
                generators.push(p);
                orbit = orbit_of(b, &generators);
            }
        }
        order *= orbit.len() as u128;
    }
    // generators were found from the deepest level up; list top level first
    generators.reverse();
    GroupDescription {
        vertex_orbits: vertex_orbits(g.n(), &generators),
        edge_orbits: edge_orbits(g, &generators),
        generators,
        order,
        degree: g.n(),
    }
}

/// Two same-colored elements in different orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RcopWitness {
    Vertices { first: usize, second: usize },
    Edges { first: Edge, second: Edge },
}

impl std::fmt::Display for RcopWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RcopWitness::Vertices { first, second } => write!(
                f,
                "vertices {first} and {second} share a color but lie in different orbits"
            ),
            RcopWitness::Edges { first, second } => write!(
                f,
                "edges {first} and {second} share a color but lie in different orbits"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RcopVerdict {
    pub rcop: bool,
    pub witness: Option<RcopWitness>,
    pub group: GroupDescription,
}

/// Decides whether every color class is a single orbit.
pub fn is_rcop(g: &ColoredGraph) -> Result<RcopVerdict> {
    g.require_connected()?;
    let group = automorphism_group(g);
    Ok(rcop_verdict(g, group))
}

pub(crate) fn rcop_verdict(g: &ColoredGraph, group: GroupDescription) -> RcopVerdict {
    let orbit_index = |v: usize| {
        group
            .vertex_orbits
            .iter()
            .position(|o| o.contains(&v))
            .expect("orbits partition the vertices")
    };
    let mut witness = None;
    for members in g.vertex_color_classes().values() {
        if let Some(&other) = members
            .iter()
            .find(|&&v| orbit_index(v) != orbit_index(members[0]))
        {
            witness = Some(RcopWitness::Vertices {
                first: members[0],
                second: other,
            });
            break;
        }
    }
    if witness.is_none() {
        let edge_orbit = |e: Edge| {
            group
                .edge_orbits
                .iter()
                .position(|o| o.contains(&e))
                .expect("orbits partition the edges")
        };
        for members in g.edge_color_classes().values() {
            if let Some(&other) = members
                .iter()
                .find(|&&e| edge_orbit(e) != edge_orbit(members[0]))
            {
                witness = Some(RcopWitness::Edges {
                    first: members[0],
                    second: other,
                });
                break;
            }
        }
    }
    RcopVerdict {
        rcop: witness.is_none(),
        witness,
        group,
    }
}

/// Fails with [`Error::NotRcop`] unless `g` is RCOP.
pub(crate) fn require_rcop(g: &ColoredGraph) -> Result<RcopVerdict> {
    let verdict = is_rcop(g)?;
    match &verdict.witness {
        Some(w) => Err(Error::NotRcop(w.to_string())),
        None => Ok(verdict),
    }
}

fn check_path(g: &ColoredGraph, p: &PathDescriptor) -> Result<()> {
    for &v in p.vertices() {
        g.check_vertex(v)?;
    }
    if p.vertices().windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::Precondition(format!(
            "{:?} is not a path of the graph",
            p.vertices()
        )));
    }
    Ok(())
}

/// An automorphism carrying path `p` onto path `q` vertex by vertex.
///
/// Tries `p_i -> q_i` first and then the reversed orientation
/// `p_i -> q_{s+1-i}`. Returns `None` when neither exists.
pub fn path_automorphism(
    g: &ColoredGraph,
    p: &PathDescriptor,
    q: &PathDescriptor,
) -> Result<Option<Permutation>> {
    if p.vertices().len() != q.vertices().len() {
        return Err(Error::Precondition(format!(
            "paths have different lengths: {} and {}",
            p.len(),
            q.len()
        )));
    }
    check_path(g, p)?;
    check_path(g, q)?;
    let searcher = Searcher::new(g);
    let forward: Vec<(usize, usize)> = p
        .vertices()
        .iter()
        .copied()
        .zip(q.vertices().iter().copied())
        .collect();
    let backward: Vec<(usize, usize)> = p
        .vertices()
        .iter()
        .copied()
        .zip(q.vertices().iter().rev().copied())
        .collect();
    for prescribed in [forward, backward] {
        if let Some(gamma) = searcher.extend(&prescribed) {
            if !gamma.is_automorphism_of(g) {
                return Err(Error::Internal(format!(
                    "search returned {gamma}, which is not an automorphism"
                )));
            }
            return Ok(Some(gamma));
        }
    }
    Ok(None)
}
