//! Exact-integer square matrices and the structural operations the
//! rest of the crate builds on: all-ones matrices, addition tables,
//! Kronecker products, and block composition/decomposition.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul};

/// A dense n-by-n matrix of exact integers, stored row-major.
///
/// All arithmetic on this type is exact; no rounding ever occurs here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSquareMatrix {
    n: usize,
    entries: Vec<i128>,
}

impl IntSquareMatrix {
    pub fn new(n: usize, entries: Vec<i128>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch {
                order: n,
                grid: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: &[&[i128]]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch { order: n, grid: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        Ok(Self { n, entries: vec![0; n * n] })
    }

    /// The all-ones matrix E_n.
    pub fn ones(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        Ok(Self { n, entries: vec![1; n * n] })
    }

    /// The addition table AT_n: entry (i, j) = i*n + j + 1, a
    /// row-by-row listing of 1..n^2.
    pub fn addition_table(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let ni = n as i128;
        let entries = (0..n * n).map(|idx| {
            let (i, j) = ((idx / n) as i128, (idx % n) as i128);
            i * ni + j + 1
        });
        Ok(Self { n, entries: entries.collect() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.entries[i * self.n + j] = v;
    }

    pub fn map(&self, f: impl Fn(i128) -> i128) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    pub fn scale(&self, c: i128) -> Self {
        self.map(|e| e * c)
    }

    /// Subtracts 1 from every entry, remapping 1..n^2 onto 0..n^2-1.
    pub fn shift_to_zero_based(&self) -> Self {
        self.map(|e| e - 1)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { n, entries }
    }

    /// Rotates a quarter turn clockwise.
    pub fn rotate(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + (n - 1 - i)] = self.entries[i * n + j];
            }
        }
        Self { n, entries }
    }

    /// Kronecker product: block (i, j) of the result is self(i, j) * other.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        let n = p * q;
        let mut entries = vec![0; n * n];
        for i in 0..p {
            for j in 0..p {
                let a = self.entries[i * p + j];
                for r in 0..q {
                    for c in 0..q {
                        entries[(i * q + r) * n + (j * q + c)] = a * other.entries[r * q + c];
                    }
                }
            }
        }
        Self { n, entries }
    }

    /// The Gram matrix M * M^T, computed exactly.
    pub fn gram(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let mut s = 0i128;
                for k in 0..n {
                    s += self.entries[i * n + k] * self.entries[j * n + k];
                }
                entries[i * n + j] = s;
                entries[j * n + i] = s;
            }
        }
        Self { n, entries }
    }

    /// True iff the entries are exactly 1..n^2 in some order.
    pub fn is_natural(&self) -> bool {
        let n2 = self.n * self.n;
        let mut seen = vec![false; n2];
        for &e in &self.entries {
            if e < 1 || e > n2 as i128 {
                return false;
            }
            let idx = (e - 1) as usize;
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
        true
    }
}

impl Add for &IntSquareMatrix {
    type Output = IntSquareMatrix;
    fn add(self, rhs: &IntSquareMatrix) -> IntSquareMatrix {
        assert_eq!(self.n, rhs.n, "order mismatch in matrix addition");
        IntSquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul<i128> for &IntSquareMatrix {
    type Output = IntSquareMatrix;
    fn mul(self, c: i128) -> IntSquareMatrix {
        self.scale(c)
    }
}

impl fmt::Display for IntSquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.get(i, j), width = width)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An m-by-m arrangement of equally sized square blocks, the compact
/// form used to present compound squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGrid {
    m: usize,
    blocks: Vec<IntSquareMatrix>,
}

impl BlockGrid {
    pub fn new(m: usize, blocks: Vec<IntSquareMatrix>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidOrder);
        }
        if blocks.len() != m * m {
            return Err(Error::ShapeMismatch { order: m, grid: blocks.len() });
        }
        let order = blocks[0].order();
        if blocks.iter().any(|b| b.order() != order) {
            return Err(Error::OrderMismatch(order, m));
        }
        Ok(Self { m, blocks })
    }

    pub fn grid_order(&self) -> usize {
        self.m
    }

    pub fn block_order(&self) -> usize {
        self.blocks[0].order()
    }

    pub fn block(&self, i: usize, j: usize) -> &IntSquareMatrix {
        &self.blocks[i * self.m + j]
    }

    /// Stitches the blocks into one matrix of order m * block_order.
    pub fn compose(&self) -> IntSquareMatrix {
        let b = self.block_order();
        let n = self.m * b;
        let mut entries = vec![0; n * n];
        for bi in 0..self.m {
            for bj in 0..self.m {
                let blk = self.block(bi, bj);
                for r in 0..b {
                    for c in 0..b {
                        entries[(bi * b + r) * n + (bj * b + c)] = blk.get(r, c);
                    }
                }
            }
        }
        IntSquareMatrix { n, entries }
    }

    /// Cuts a matrix into an m-by-m grid of equal square blocks.
    pub fn decompose(matrix: &IntSquareMatrix, m: usize) -> Result<Self> {
        let n = matrix.order();
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::ShapeMismatch { order: n, grid: m });
        }
        let b = n / m;
        let mut blocks = Vec::with_capacity(m * m);
        for bi in 0..m {
            for bj in 0..m {
                let mut entries = Vec::with_capacity(b * b);
                for r in 0..b {
                    for c in 0..b {
                        entries.push(matrix.get(bi * b + r, bj * b + c));
                    }
                }
                blocks.push(IntSquareMatrix { n: b, entries });
            }
        }
        Ok(Self { m, blocks })
    }
}
