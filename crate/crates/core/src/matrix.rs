//! Dense square coefficient matrices.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An N×N table of exact coefficients; row index first.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffMatrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> CoeffMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        CoeffMatrix { rows: vec![vec![T::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        CoeffMatrix { rows: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Ok(CoeffMatrix { rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_int(v)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.rows[i][j] = value;
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size(), |i, j| self.rows[j][i].clone())
    }

    /// The leading k×k block.
    pub fn leading(&self, k: usize) -> Self {
        let k = k.min(self.size());
        CoeffMatrix { rows: self.rows[..k].iter().map(|r| r[..k].to_vec()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch(format!("cannot multiply {n}x{n} by {0}x{0}", other.size())));
        }
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = out.rows[i][j].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.size() != self.size() {
            return Err(Error::DimensionMismatch("cannot add matrices of different size".into()));
        }
        Ok(Self::from_fn(self.size(), |i, j| self.rows[i][j].clone() + other.rows[i][j].clone()))
    }

    /// Truncated two-dimensional convolution: the coefficient table of the
    /// product of the two bivariate series, restricted to N×N.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch("convolution of different sizes".into()));
        }
        let mut out = Self::zeros(n);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for p in 0..n - i {
                    for q in 0..n - j {
                        let b = &other.rows[p][q];
                        if !b.is_zero() {
                            out.rows[i + p][j + q] = out.rows[i + p][j + q].clone() + a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// First nonzero entry strictly above the diagonal, if any.
    pub fn upper_violation(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !self.rows[i][j].is_zero())
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.upper_violation().is_none()
    }

    /// All entries as integers, or the first entry that is not one.
    pub fn to_integers(&self) -> Result<Vec<Vec<BigInt>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, v)| {
                        v.to_integer().ok_or_else(|| Error::NonIntegral { row: i, col: j, value: v.to_string() })
                    })
                    .collect()
            })
            .collect()
    }
}

impl<T: Scalar> fmt::Display for CoeffMatrix<T> {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let n = self.size();
        let widths: Vec<usize> = (0..n).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}", w = *w)).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
