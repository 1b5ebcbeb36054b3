//! Exact integer linear algebra: dense [`IntMatrix`] values, Smith normal
//! form, gcd-of-minors, fraction-free determinants, and canonical abelian
//! groups. All arithmetic is arbitrary precision; every function here is a
//! pure total function of its inputs apart from the documented `Err` cases.

mod group;
mod snf;

pub use group::{canonicalize, critical_group, AbelianGroup, GroupOrder};
pub use snf::{det, minor_gcd, random_unimodular, snf, SmithForm, MINOR_GCD_DIM_LIMIT};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor order {order} out of range 1..={max}")]
    MinorOrderOutOfRange { order: usize, max: usize },
    #[error("minor gcd is limited to matrices with min dimension <= {limit}, got {rows}x{cols}")]
    MinorDimTooLarge { rows: usize, cols: usize, limit: usize },
}

/// Dense rectangular matrix of arbitrary-precision integers, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from a row-major entry buffer.
    ///
    /// Panics if `rows * cols != entries.len()` or either dimension is zero.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        assert_eq!(entries.len(), rows * cols, "entry buffer has wrong length");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn diagonal(values: &[BigInt]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { BigInt::zero() })
    }

    /// Direct sum of square blocks along the diagonal.
    ///
    /// Panics on non-square parts or an empty part list.
    pub fn block_diag(parts: &[IntMatrix]) -> Self {
        assert!(!parts.is_empty(), "block_diag needs at least one block");
        for p in parts {
            assert!(p.is_square(), "block_diag blocks must be square");
        }
        let n: usize = parts.iter().map(|p| p.rows).sum();
        let mut out = Self::zeros(n, n);
        let mut off = 0;
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out[(off + i, off + j)] = p[(i, j)].clone();
                }
            }
            off += p.rows;
        }
        out
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

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * by)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &other[(k, j)];
            }
            acc
        })
    }

    /// `self^exp` for square matrices; `exp == 0` yields the identity.
    pub fn pow(&self, exp: u64) -> Self {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Copy of the matrix with one row and one column removed.
    ///
    /// Panics if the matrix is 1x1 or the indices are out of range.
    pub fn delete_row_col(&self, row: usize, col: usize) -> Self {
        assert!(self.rows > 1 && self.cols > 1, "cannot shrink a 1x1 matrix");
        assert!(row < self.rows && col < self.cols, "index out of range");
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
