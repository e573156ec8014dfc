//! Exhaustive scans of the shortest-path structure of a block graph.
//!
//! Every check holds on RCOP block graphs; on other block graphs a check may
//! fail, and the report carries the first offending paths.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

use super::blocks::is_block_graph;
use super::paths::{path_lambda, paths_isomorphic, LambdaMultiset, PathDescriptor, ShortestPaths};

/// Largest vertex count the audit accepts.
pub const AUDIT_VERTEX_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    /// No configuration the check applies to exists in this graph.
    VacuousPass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Number of configurations examined.
    pub cases: usize,
    /// The paths involved in the first failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<PathDescriptor>>,
}

impl CheckResult {
    fn new(name: &'static str, cases: usize, witness: Option<Vec<PathDescriptor>>) -> Self {
        let status = match (&witness, cases) {
            (Some(_), _) => CheckStatus::Fail,
            (None, 0) => CheckStatus::VacuousPass,
            (None, _) => CheckStatus::Pass,
        };
        CheckResult {
            name,
            status,
            cases,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<CheckResult>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const SYMMETRIC_SAME_COLOR_PATHS: &str = "symmetric_same_color_paths";
pub const OVERLAPPING_PATH_UNION: &str = "overlapping_path_union";
pub const AT_MOST_TWO_PER_COLOR: &str = "at_most_two_per_color";
pub const EQUIVALENT_PATHS_ISOMORPHIC: &str = "equivalent_paths_isomorphic";
pub const BRANCH_COLOR_EXCLUSION: &str = "branch_color_exclusion";

/// Runs all five scans on a connected block graph.
pub fn structural_audit(g: &ColoredGraph) -> Result<AuditReport> {
    if g.n() > AUDIT_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "audit vertex count",
            n: g.n(),
            limit: AUDIT_VERTEX_LIMIT,
        });
    }
    is_block_graph(g)?.into_result()?;
    let table = ShortestPaths::new(g)?;
    Ok(AuditReport {
        checks: vec![
            symmetric_same_color_paths(&table),
            overlapping_path_union(g, &table),
            at_most_two_per_color(&table),
            equivalent_paths_isomorphic(&table),
            branch_color_exclusion(g, &table),
        ],
    })
}

fn is_palindrome<T: PartialEq>(xs: &[T]) -> bool {
    xs.iter().eq(xs.iter().rev())
}

/// Paths between distinct same-colored vertices read the same in both directions.
fn symmetric_same_color_paths(table: &ShortestPaths) -> CheckResult {
    let mut cases = 0;
    let mut witness = None;
    for p in table.upper().filter(|p| !p.is_empty()) {
        let colors = p.vertex_colors();
        if colors[0] != colors[colors.len() - 1] {
            continue;
        }
        cases += 1;
        if witness.is_none() && !(is_palindrome(colors) && is_palindrome(p.edge_colors())) {
            witness = Some(vec![p.clone()]);
        }
    }
    CheckResult::new(SYMMETRIC_SAME_COLOR_PATHS, cases, witness)
}

/// For `p = v_1..v_{k+1}` and `q = v_k, v_{k+1}, ..., v_s`, the concatenation is the path `v_1 -> v_s`.
fn overlapping_path_union(g: &ColoredGraph, table: &ShortestPaths) -> CheckResult {
    let mut cases = 0;
    let mut witness = None;
    for p in table.all().filter(|p| !p.is_empty()) {
        let vs = p.vertices();
        let (vk, vk1) = (vs[vs.len() - 2], vs[vs.len() - 1]);
        for z in g.vertices() {
            let q = table.get(vk, z);
            if q.is_empty() || q.vertices()[1] != vk1 {
                continue;
            }
            cases += 1;
            let union: Vec<usize> = vs.iter().chain(&q.vertices()[2..]).copied().collect();
            let expected = table.get(p.source(), z);
            if witness.is_none() && expected.vertices() != union.as_slice() {
                witness = Some(vec![p.clone(), q.clone(), expected.clone()]);
            }
        }
    }
    CheckResult::new(OVERLAPPING_PATH_UNION, cases, witness)
}

/// No shortest path visits three vertices of one color.
fn at_most_two_per_color(table: &ShortestPaths) -> CheckResult {
    let mut cases = 0;
    let mut witness = None;
    for p in table.upper() {
        cases += 1;
        let mut counts: BTreeMap<_, usize> = BTreeMap::new();
        for c in p.vertex_colors() {
            *counts.entry(c).or_default() += 1;
        }
        if witness.is_none() && counts.values().any(|&k| k > 2) {
            witness = Some(vec![p.clone()]);
        }
    }
    CheckResult::new(AT_MOST_TWO_PER_COLOR, cases, witness)
}

/// Paths with equal color multisets have equal color sequences up to reversal.
fn equivalent_paths_isomorphic(table: &ShortestPaths) -> CheckResult {
    let mut classes: BTreeMap<LambdaMultiset, Vec<&PathDescriptor>> = BTreeMap::new();
    for p in table.upper() {
        classes.entry(path_lambda(p)).or_default().push(p);
    }
    let mut cases = 0;
    let mut witness = None;
    // isomorphism up to reversal is an equivalence, so comparing with the first member suffices
    for members in classes.values() {
        let first = members[0];
        for &q in &members[1..] {
            cases += 1;
            if witness.is_none() && !paths_isomorphic(first, q) {
                witness = Some(vec![first.clone(), q.clone()]);
            }
        }
    }
    CheckResult::new(EQUIVALENT_PATHS_ISOMORPHIC, cases, witness)
}

/// For paths `c -> j` and `c -> l` meeting only at `c`, with first steps `a` and `b`
/// of different edge colors, `a -> j` avoids the color of `{c, b}` or `b -> l`
/// avoids the color of `{c, a}`.
fn branch_color_exclusion(g: &ColoredGraph, table: &ShortestPaths) -> CheckResult {
    let mut cases = 0;
    let mut witness = None;
    for c in g.vertices() {
        for j in g.vertices().filter(|&j| j != c) {
            let pj = table.get(c, j);
            let ca = &pj.edge_colors()[0];
            for l in g.vertices().filter(|&l| l != c && l != j) {
                let pl = table.get(c, l);
                let cb = &pl.edge_colors()[0];
                if ca == cb || pl.vertices()[1..].iter().any(|&x| pj.contains(x)) {
                    continue;
                }
                cases += 1;
                let j_side = pj.edge_colors()[1..].contains(cb);
                let l_side = pl.edge_colors()[1..].contains(ca);
                if witness.is_none() && j_side && l_side {
                    witness = Some(vec![pj.clone(), pl.clone()]);
                }
            }
        }
    }
    CheckResult::new(BRANCH_COLOR_EXCLUSION, cases, witness)
}
