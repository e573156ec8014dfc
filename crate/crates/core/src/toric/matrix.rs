use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::blockpath::{PathDescriptor, ShortestPaths};
use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph};
use crate::linalg::RationalMatrix;

/// The covariance coordinate `σ_ij` with `i <= j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaIndex {
    i: usize,
    j: usize,
}

impl SigmaIndex {
    /// Orders the pair; rejects vertex id 0.
    pub fn new(a: usize, b: usize) -> Option<SigmaIndex> {
        (a >= 1 && b >= 1).then(|| SigmaIndex {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    pub fn is_diagonal(self) -> bool {
        self.i == self.j
    }

    /// All indices of an `n`-vertex graph in lexicographic order.
    pub fn all(n: usize) -> Vec<SigmaIndex> {
        (1..=n)
            .flat_map(|i| (i..=n).map(move |j| SigmaIndex { i, j }))
            .collect()
    }
}

impl fmt::Display for SigmaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Serialize for SigmaIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for SigmaIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        SigmaIndex::new(a, b).ok_or_else(|| serde::de::Error::custom("vertex ids start at 1"))
    }
}

/// Nonnegative integer matrix with color rows and [`SigmaIndex`] columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentMatrix {
    pub rows: Vec<ColorId>,
    pub cols: Vec<SigmaIndex>,
    pub entries: Vec<Vec<i64>>,
}

/// Which vertices of a path contribute their color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathMap {
    /// Both endpoints, plus the path's edges.
    Endpoint,
    /// Every vertex on the path, plus its edges.
    Full,
}

impl ExponentMatrix {
    pub fn row_index(&self, color: &ColorId) -> Option<usize> {
        self.rows.iter().position(|c| c == color)
    }

    pub fn row(&self, color: &ColorId) -> Option<&[i64]> {
        self.row_index(color).map(|r| self.entries[r].as_slice())
    }

    pub fn col_index(&self, s: SigmaIndex) -> Option<usize> {
        self.cols.binary_search(&s).ok()
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        self.entries.iter().map(|row| row[c]).collect()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_integer_rows(&self.entries)
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }

    /// `self · x` for an integer column vector.
    pub fn apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.cols.len() {
            return Err(Error::IndexMismatch(format!(
                "vector has {} entries, matrix has {} columns",
                x.len(),
                self.cols.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Aligned table with a header of column indices and one labeled row per color.
    pub fn to_text(&self) -> String {
        let compact = self.cols.iter().all(|s| s.j < 10);
        let headers: Vec<String> = self
            .cols
            .iter()
            .map(|s| {
                if compact {
                    format!("{}{}", s.i, s.j)
                } else {
                    format!("{},{}", s.i, s.j)
                }
            })
            .collect();
        let labels: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        let label_width = labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols.len())
            .map(|c| {
                self.entries
                    .iter()
                    .map(|row| row[c].to_string().len())
                    .chain([headers[c].len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (h, w) in headers.iter().zip(&widths) {
            out.push_str(&format!(" {h:>w$}"));
        }
        out.push('\n');
        for (label, row) in labels.iter().zip(&self.entries) {
            out.push_str(&format!("{label:<label_width$}"));
            for (x, w) in row.iter().zip(&widths) {
                out.push_str(&format!(" {x:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn column_counts(p: &PathDescriptor, map: PathMap) -> BTreeMap<&ColorId, i64> {
    let mut counts: BTreeMap<&ColorId, i64> = BTreeMap::new();
    let vc = p.vertex_colors();
    let vertices: Vec<&ColorId> = match map {
        PathMap::Endpoint => vec![&vc[0], &vc[vc.len() - 1]],
        PathMap::Full => vc.iter().collect(),
    };
    for c in vertices.into_iter().chain(p.edge_colors()) {
        *counts.entry(c).or_default() += 1;
    }
    counts
}

/// Exponent matrix of a shortest-path monomial map on a connected block graph.
pub fn exponent_matrix(g: &ColoredGraph, map: PathMap) -> Result<ExponentMatrix> {
    let table = ShortestPaths::new(g)?;
    Ok(exponent_matrix_from(g, &table, map))
}

pub(crate) fn exponent_matrix_from(
    g: &ColoredGraph,
    table: &ShortestPaths,
    map: PathMap,
) -> ExponentMatrix {
    let rows = g.colors();
    let row_of: BTreeMap<&ColorId, usize> = rows.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let cols = SigmaIndex::all(g.n());
    let mut entries = vec![vec![0i64; cols.len()]; rows.len()];
    for (c, s) in cols.iter().enumerate() {
        for (color, k) in column_counts(table.get(s.i, s.j), map) {
            entries[row_of[color]][c] = k;
        }
    }
    ExponentMatrix {
        rows,
        cols,
        entries,
    }
}

/// Endpoint colors and edge colors of each shortest path.
pub fn exponent_matrix_endpoint(g: &ColoredGraph) -> Result<ExponentMatrix> {
    exponent_matrix(g, PathMap::Endpoint)
}

/// All vertex colors and edge colors of each shortest path.
pub fn exponent_matrix_full(g: &ColoredGraph) -> Result<ExponentMatrix> {
    exponent_matrix(g, PathMap::Full)
}
