//! Shortest-path monomial maps, their exponent matrices, and graph completion.

mod completion;
mod matrix;
mod rowspan;

pub use completion::{completion, completion_color, CompletionGraph, COMPLETION_COLOR_PREFIX};
pub(crate) use matrix::exponent_matrix_from;
pub use matrix::{
    exponent_matrix, exponent_matrix_endpoint, exponent_matrix_full, ExponentMatrix, PathMap,
    SigmaIndex,
};
pub use rowspan::{rowspan_equal, RowspanReport, VertexRowIdentity};

use crate::error::Result;
use crate::markov::MarkovMove;

/// Whether `m` lies in the integer kernel of `a`.
pub fn kernel_member(a: &ExponentMatrix, m: &MarkovMove) -> Result<bool> {
    let x = m.to_vector(&a.cols)?;
    Ok(a.apply(&x)?.iter().all(|&y| y == 0))
}
