use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::toric::{ExponentMatrix, SigmaIndex};
use crate::union_find::UnionFind;

use super::MarkovMove;

/// Default bound on the number of points [`enumerate_fiber`] may return.
pub const DEFAULT_FIBER_CAP: usize = 5000;
/// Default bound on the total degree of certified fibers.
pub const DEFAULT_DEGREE_BOUND: usize = 3;

/// All nonnegative integer vectors with a common image under an exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    #[serde(skip)]
    pub cols: Vec<SigmaIndex>,
    pub target: Vec<i64>,
    /// Points in lexicographic order.
    pub points: Vec<Vec<i64>>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// A point as a sorted list of indices with multiplicity.
    pub fn monomial(&self, point: &[i64]) -> Vec<SigmaIndex> {
        point
            .iter()
            .zip(&self.cols)
            .flat_map(|(&k, &s)| std::iter::repeat_n(s, k as usize))
            .collect()
    }
}

struct Search<'a> {
    a: &'a ExponentMatrix,
    // for each row, the last column with a positive entry
    last_positive: Vec<Option<usize>>,
    cap: usize,
    point: Vec<i64>,
    points: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn descend(&mut self, c: usize, remaining: &mut [i64]) -> Result<()> {
        if c == self.a.cols.len() {
            if remaining.iter().all(|&r| r == 0) {
                if self.points.len() == self.cap {
                    return Err(Error::FiberCapExceeded(self.cap));
                }
                self.points.push(self.point.clone());
            }
            return Ok(());
        }
        // every row whose last positive column is behind us must be exhausted
        if remaining
            .iter()
            .zip(&self.last_positive)
            .any(|(&r, &last)| r != 0 && last.is_none_or(|l| l < c))
        {
            return Ok(());
        }
        let column = self.a.column(c);
        let most = column
            .iter()
            .zip(remaining.iter())
            .filter(|(&x, _)| x > 0)
            .map(|(&x, &r)| r / x)
            .min()
            .expect("columns are nonzero");
        for k in 0..=most {
            if k > 0 {
                for (r, &x) in remaining.iter_mut().zip(&column) {
                    *r -= x;
                }
            }
            self.point[c] = k;
            self.descend(c + 1, remaining)?;
        }
        for (r, &x) in remaining.iter_mut().zip(&column) {
            *r += most * x;
        }
        self.point[c] = 0;
        Ok(())
    }
}

/// Every nonnegative `p` with `a · p = target`, by depth-first search over the
/// columns. Fails once more than `cap` points are found.
pub fn enumerate_fiber(a: &ExponentMatrix, target: &[i64], cap: usize) -> Result<Fiber> {
    if target.len() != a.rows.len() {
        return Err(Error::IndexMismatch(format!(
            "target has {} entries, matrix has {} rows",
            target.len(),
            a.rows.len()
        )));
    }
    if a.entries.iter().flatten().any(|&x| x < 0) {
        return Err(Error::Precondition(
            "exponent matrix has a negative entry".into(),
        ));
    }
    if (0..a.cols.len()).any(|c| a.column(c).iter().all(|&x| x == 0)) {
        return Err(Error::Precondition(
            "exponent matrix has a zero column".into(),
        ));
    }
    let last_positive = a
        .entries
        .iter()
        .map(|row| row.iter().rposition(|&x| x > 0))
        .collect();
    let mut search = Search {
        a,
        last_positive,
        cap,
        point: vec![0; a.cols.len()],
        points: Vec::new(),
    };
    if target.iter().all(|&t| t >= 0) {
        search.descend(0, &mut target.to_vec())?;
    }
    let mut points = search.points;
    points.sort();
    Ok(Fiber {
        cols: a.cols.clone(),
        target: target.to_vec(),
        points,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
}

/// Connects two fiber points when their difference is a move or its negative.
pub fn fiber_connected(fiber: &Fiber, moves: &[MarkovMove]) -> Result<Connectivity> {
    let index: HashMap<&[i64], usize> = fiber
        .points
        .iter()
        .enumerate()
        .map(|(k, p)| (p.as_slice(), k))
        .collect();
    let vectors: Vec<Vec<i64>> = moves
        .iter()
        .filter(|m| !m.is_zero())
        .map(|m| m.to_vector(&fiber.cols))
        .collect::<Result<_>>()?;
    let mut uf = UnionFind::new(fiber.len());
    let mut next = vec![0i64; fiber.cols.len()];
    for (k, p) in fiber.points.iter().enumerate() {
        for v in &vectors {
            for sign in [1, -1] {
                let mut valid = true;
                for ((n, &x), &d) in next.iter_mut().zip(p).zip(v) {
                    *n = x + sign * d;
                    valid &= *n >= 0;
                }
                if valid {
                    if let Some(&other) = index.get(next.as_slice()) {
                        uf.union(k, other);
                    }
                }
            }
        }
    }
    let components = if fiber.is_empty() {
        0
    } else {
        uf.groups().len()
    };
    Ok(Connectivity {
        connected: components <= 1,
        components,
    })
}

/// Distinct images `a · p` over all nonnegative `p` of total degree `1..=degree`.
pub fn targets_up_to_degree(a: &ExponentMatrix, degree: usize) -> Vec<Vec<i64>> {
    let m = a.cols.len();
    let mut targets = BTreeSet::new();
    let mut current = vec![0i64; a.rows.len()];
    fn walk(
        a: &ExponentMatrix,
        from: usize,
        left: usize,
        current: &mut Vec<i64>,
        targets: &mut BTreeSet<Vec<i64>>,
        m: usize,
    ) {
        if left == 0 {
            return;
        }
        for c in from..m {
            for (r, row) in current.iter_mut().zip(&a.entries) {
                *r += row[c];
            }
            targets.insert(current.clone());
            walk(a, c, left - 1, current, targets, m);
            for (r, row) in current.iter_mut().zip(&a.entries) {
                *r -= row[c];
            }
        }
    }
    walk(a, 0, degree, &mut current, &mut targets, m);
    targets.into_iter().collect()
}
