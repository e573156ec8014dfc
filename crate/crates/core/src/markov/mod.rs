//! Markov bases of shortest-path toric ideals and a brute-force fiber oracle.
//!
//! A move set is a Markov basis exactly when it connects every fiber of the
//! exponent matrix. [`certify_markov`] checks that claim on every fiber up to a
//! degree bound.

mod bases;
mod fiber;
mod moves;

pub use bases::{
    completion_basis, lambda_classes, rcop_basis, rcop_basis_with, uncolored_basis, LinearMoves,
};
pub use fiber::{
    enumerate_fiber, fiber_connected, targets_up_to_degree, Connectivity, Fiber,
    DEFAULT_DEGREE_BOUND, DEFAULT_FIBER_CAP,
};
pub use moves::MarkovMove;

use serde::Serialize;

use crate::error::Result;
use crate::toric::{ExponentMatrix, SigmaIndex};

/// A fiber the moves fail to connect, named by its lexicographically first point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisconnectedFiber {
    pub representative: Vec<SigmaIndex>,
    pub points: usize,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub degree_bound: usize,
    pub fibers: usize,
    pub points: usize,
    pub largest_fiber: usize,
    /// Disconnected fibers in target order.
    pub disconnected: Vec<DisconnectedFiber>,
}

impl Certification {
    pub fn connected(&self) -> bool {
        self.disconnected.is_empty()
    }
}

fn check_target(
    a: &ExponentMatrix,
    moves: &[MarkovMove],
    target: &[i64],
    cap: usize,
) -> Result<(usize, Option<DisconnectedFiber>)> {
    let fiber = enumerate_fiber(a, target, cap)?;
    let c = fiber_connected(&fiber, moves)?;
    let bad = (!c.connected).then(|| DisconnectedFiber {
        representative: fiber.monomial(&fiber.points[0]),
        points: fiber.len(),
        components: c.components,
    });
    Ok((fiber.len(), bad))
}

/// Checks that `moves` connect every fiber of `a` reached by a monomial of
/// degree at most `degree_bound`. A fiber above `cap` points is an error.
pub fn certify_markov(
    a: &ExponentMatrix,
    moves: &[MarkovMove],
    degree_bound: usize,
    cap: usize,
) -> Result<Certification> {
    let targets = targets_up_to_degree(a, degree_bound);
    #[cfg(feature = "parallel")]
    let results: Vec<Result<(usize, Option<DisconnectedFiber>)>> = {
        use rayon::prelude::*;
        targets
            .par_iter()
            .map(|t| check_target(a, moves, t, cap))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<(usize, Option<DisconnectedFiber>)>> = targets
        .iter()
        .map(|t| check_target(a, moves, t, cap))
        .collect();

    let mut report = Certification {
        degree_bound,
        fibers: targets.len(),
        points: 0,
        largest_fiber: 0,
        disconnected: Vec::new(),
    };
    for r in results {
        let (size, bad) = r?;
        report.points += size;
        report.largest_fiber = report.largest_fiber.max(size);
        report.disconnected.extend(bad);
    }
    Ok(report)
}
