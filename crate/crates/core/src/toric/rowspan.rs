use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph};

use super::ExponentMatrix;

/// Outcome of the identity `2 b_ν = a_ν + Σ_ε k_ν(ε) a_ε` for one vertex color `ν`,
/// where `k_ν(ε)` counts the `ν`-colored endpoints of an edge of color `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRowIdentity {
    pub color: ColorId,
    pub holds: bool,
    /// First column where the two sides differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowspanReport {
    pub rank_first: usize,
    pub rank_second: usize,
    pub rank_stacked: usize,
    /// The three ranks coincide, so the row spaces are equal.
    pub rowspans_equal: bool,
    /// Rows for edge colors agree between the two matrices.
    pub edge_rows_equal: bool,
    pub vertex_identities: Vec<VertexRowIdentity>,
}

impl RowspanReport {
    pub fn passed(&self) -> bool {
        self.rowspans_equal
            && self.edge_rows_equal
            && self.vertex_identities.iter().all(|v| v.holds)
    }
}

/// Compares the row spaces of `a` and `b` over the rationals. With `g`, also
/// checks that each vertex-color row of `b` is the stated combination of rows of `a`.
pub fn rowspan_equal(
    a: &ExponentMatrix,
    b: &ExponentMatrix,
    g: Option<&ColoredGraph>,
) -> Result<RowspanReport> {
    if a.cols != b.cols {
        return Err(Error::IndexMismatch(
            "matrices index different columns".into(),
        ));
    }
    let ra = a.to_rational();
    let rb = b.to_rational();
    let rank_first = ra.rank();
    let rank_second = rb.rank();
    let rank_stacked = ra.vstack(&rb)?.rank();
    let rowspans_equal = rank_first == rank_stacked && rank_second == rank_stacked;

    let mut edge_rows_equal = true;
    let mut vertex_identities = Vec::new();
    if let Some(g) = g {
        if a.rows != b.rows {
            return Err(Error::IndexMismatch(
                "matrices index different colors".into(),
            ));
        }
        for (k, color) in a.rows.iter().enumerate() {
            if !color.is_vertex_color() && a.entries[k] != b.entries[k] {
                edge_rows_equal = false;
            }
        }
        for color in g.vertex_color_classes().into_keys() {
            vertex_identities.push(vertex_identity(g, a, b, color)?);
        }
        vertex_identities.sort_by_key(|v| a.row_index(&v.color));
    }
    Ok(RowspanReport {
        rank_first,
        rank_second,
        rank_stacked,
        rowspans_equal,
        edge_rows_equal,
        vertex_identities,
    })
}

fn vertex_identity(
    g: &ColoredGraph,
    a: &ExponentMatrix,
    b: &ExponentMatrix,
    nu: ColorId,
) -> Result<VertexRowIdentity> {
    let missing = |c: &ColorId| Error::IndexMismatch(format!("no row for {c}"));
    let a_nu = a.row(&nu).ok_or_else(|| missing(&nu))?;
    let b_nu = b.row(&nu).ok_or_else(|| missing(&nu))?;
    let mut rhs: Vec<i64> = a_nu.to_vec();
    let mut coefficients_consistent = true;
    for (eps, edges) in g.edge_color_classes() {
        let ends: BTreeSet<i64> = edges
            .iter()
            .map(|e| {
                [e.u(), e.v()]
                    .iter()
                    .filter(|&&x| *g.vertex_color(x) == nu)
                    .count() as i64
            })
            .collect();
        // edges of one color must agree on how many ν-ends they have
        if ends.len() > 1 {
            coefficients_consistent = false;
            continue;
        }
        let k = *ends.iter().next().expect("color class is nonempty");
        if k == 0 {
            continue;
        }
        let a_eps = a.row(&eps).ok_or_else(|| missing(&eps))?;
        for (r, x) in rhs.iter_mut().zip(a_eps) {
            *r += k * x;
        }
    }
    let first_mismatch = b_nu.iter().zip(&rhs).position(|(lhs, rhs)| 2 * lhs != *rhs);
    Ok(VertexRowIdentity {
        color: nu,
        holds: coefficients_consistent && first_mismatch.is_none(),
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::toric::{exponent_matrix_endpoint, exponent_matrix_full};

    #[test]
    fn paw_rowspans_agree() {
        let g = corpus::paw();
        let a = exponent_matrix_endpoint(&g).unwrap();
        let b = exponent_matrix_full(&g).unwrap();
        let report = rowspan_equal(&a, &b, Some(&g)).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!((report.rank_first, report.rank_second), (6, 6));
        let colors: Vec<&str> = report
            .vertex_identities
            .iter()
            .map(|v| v.color.label())
            .collect();
        assert_eq!(colors, ["r", "b", "p"]);
    }

    #[test]
    fn identical_matrices() {
        let a = exponent_matrix_endpoint(&corpus::paw()).unwrap();
        let report = rowspan_equal(&a, &a, None).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn deleting_a_row_shrinks_the_span() {
        let a = exponent_matrix_endpoint(&corpus::paw()).unwrap();
        let mut smaller = a.clone();
        smaller.rows.pop();
        smaller.entries.pop();
        let report = rowspan_equal(&a, &smaller, None).unwrap();
        assert!(!report.rowspans_equal);
        assert!(report.rank_stacked > report.rank_second);
    }

    #[test]
    fn column_mismatch_is_an_error() {
        let a = exponent_matrix_endpoint(&corpus::paw()).unwrap();
        let b = exponent_matrix_endpoint(&corpus::single_vertex()).unwrap();
        assert!(matches!(
            rowspan_equal(&a, &b, None),
            Err(Error::IndexMismatch(_))
        ));
    }
}
