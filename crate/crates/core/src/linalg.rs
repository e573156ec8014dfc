//! Dense matrices over exact rationals.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Renders `p/q`, or just `p` for integers.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    /// Builds a matrix from integer rows, which must have equal lengths.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigRational::from_integer(BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::IndexMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.cols {
            return Err(Error::IndexMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Row pivot for column `col` among rows `from..`: the nonzero entry of
    /// smallest height (numerator and denominator size), to limit coefficient growth.
    fn pivot(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self[(r, col)].is_zero())
            .min_by_key(|&r| {
                let x = &self[(r, col)];
                (x.numer().abs().bits() + x.denom().bits(), r)
            })
    }

    /// Reduces in place to row echelon form and returns the pivot columns.
    fn eliminate(&mut self, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pivot(c, r) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let scaled = &self[(r, j)] * &inv;
                self[(r, j)] = scaled;
            }
            let targets: Vec<usize> = if reduced {
                (0..self.rows).filter(|&i| i != r).collect()
            } else {
                (r + 1..self.rows).collect()
            };
            for i in targets {
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let delta = &f * &self[(r, j)];
                    if !delta.is_zero() {
                        self[(i, j)] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).len()
    }

    /// Exact inverse by Gauss-Jordan elimination on `[self | I]`.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::IndexMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = BigRational::one();
        }
        let pivots = aug.eliminate(true);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(out)
    }

    /// Entries rendered with [`format_rational`], row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_diagonal() {
        let m = RationalMatrix::from_integer_rows(&[vec![2, 0], vec![0, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], rational(1, 2));
        assert_eq!(inv[(1, 1)], rational(1, 4));
        assert!(inv[(0, 1)].is_zero());
        assert_eq!(
            RationalMatrix::identity(3).inverse().unwrap(),
            RationalMatrix::identity(3)
        );
    }

    #[test]
    fn singular_and_rank() {
        let m = RationalMatrix::from_integer_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.inverse().unwrap_err(), Error::Singular);
        assert_eq!(RationalMatrix::zeros(2, 5).rank(), 0);
        let wide = RationalMatrix::from_integer_rows(&[vec![0, 0, 1, 1], vec![0, 0, 2, 3]]);
        assert_eq!(wide.rank(), 2);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rational(6, -4)), "-3/2");
        assert_eq!(format_rational(&rational(8, 4)), "2");
        let m = RationalMatrix::from_integer_rows(&[vec![1, 3]]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"[["1","3"]]"#);
    }

    fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
    }

    proptest! {
        #[test]
        fn inverse_round_trips(rows in square(4)) {
            let m = RationalMatrix::from_integer_rows(&rows);
            match m.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(m.rank(), 4);
                    prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(4));
                    prop_assert_eq!(inv.inverse().unwrap(), m);
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(m.rank() < 4);
                }
            }
        }

        #[test]
        fn rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 3)) {
            let m = RationalMatrix::from_integer_rows(&rows);
            let t: Vec<Vec<i64>> = (0..5).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
            prop_assert_eq!(m.rank(), RationalMatrix::from_integer_rows(&t).rank());
        }
    }
}
