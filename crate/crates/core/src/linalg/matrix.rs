use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LinalgError, Rational, SparseVec};

/// Exact sparse matrix stored as sparse rows.
///
/// Values are immutable in spirit: every operation returns a new matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: (0..rows).map(|_| SparseVec::zeros(cols)).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n)
                .map(|i| SparseVec::from_sorted_unchecked(n, alloc::vec![(i, c.clone())]))
                .collect(),
        }
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_triplets(n, n, values.iter().enumerate().map(|(i, v)| (i, i, v.clone())))
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = (0..rows).map(|_| Vec::new()).collect();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range for {rows}x{cols}");
            buckets[r].push((c, v));
        }
        let data = buckets.into_iter().map(|b| SparseVec::from_entries(cols, b)).collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged dense matrix");
        SparseMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        SparseMatrix { rows: rows.len(), cols, data: rows }
    }

    /// Matrix whose columns are `columns` (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let cols = columns.len();
        Self::from_triplets(
            rows,
            cols,
            columns.iter().enumerate().flat_map(|(j, col)| {
                assert_eq!(col.len(), rows, "column length mismatch");
                col.iter().map(move |(i, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].value(c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn column(&self, c: usize) -> SparseVec {
        SparseVec::from_entries(
            self.rows,
            self.data.iter().enumerate().filter_map(|(r, row)| row.get(c).map(|v| (r, v.clone()))),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.triplets().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.triplets().all(|(r, c, _)| r == c)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn scalar_value(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(Rational::zero());
        }
        let c = self.get(0, 0);
        (*self == Self::scalar(self.rows, &c)).then_some(c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SparseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_shape(other)?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_shape(other)?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut acc: Vec<Rational> = alloc::vec![Rational::zero(); other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark: Vec<bool> = alloc::vec![false; other.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row.iter() {
                for (c, b) in other.data[k].iter() {
                    if !mark[c] {
                        mark[c] = true;
                        touched.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            touched.sort_unstable();
            let mut entries = Vec::with_capacity(touched.len());
            for &c in &touched {
                mark[c] = false;
                let v = core::mem::replace(&mut acc[c], Rational::zero());
                if !v.is_zero() {
                    entries.push((c, v));
                }
            }
            touched.clear();
            data.push(SparseVec::from_sorted_unchecked(other.cols, entries));
        }
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let entries: Vec<(usize, Rational)> = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| (r, row.dot(v)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        SparseVec::from_sorted_unchecked(self.rows, entries)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Submatrix on the given row and column indices (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        SparseMatrix { rows: rows.len(), cols: cols.len(), data: rows.iter().map(|&r| self.data[r].select(cols)).collect() }
    }

    /// Row-major flattening into a vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec {
        let cols = self.cols;
        SparseVec::from_sorted_unchecked(
            self.rows * cols,
            self.triplets().map(|(r, c, v)| (r * cols + c, v.clone())).collect(),
        )
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SparseVec) -> Self {
        assert_eq!(v.len(), rows * cols, "flattened length mismatch");
        Self::from_triplets(rows, cols, v.iter().map(|(i, x)| (i / cols, i % cols, x.clone())))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(SparseVec::to_dense).collect()
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r0, c0) = (self.rows, self.cols);
        Self::from_triplets(
            r0 + other.rows,
            c0 + other.cols,
            self.triplets()
                .map(|(r, c, v)| (r, c, v.clone()))
                .chain(other.triplets().map(|(r, c, v)| (r + r0, c + c0, v.clone()))),
        )
    }
}

impl Add for &SparseMatrix {
    type Output = SparseMatrix;
    fn add(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.try_add(rhs).expect("matrix addition shape mismatch")
    }
}

impl Sub for &SparseMatrix {
    type Output = SparseMatrix;
    fn sub(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.try_sub(rhs).expect("matrix subtraction shape mismatch")
    }
}

impl Mul for &SparseMatrix {
    type Output = SparseMatrix;
    fn mul(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Neg for &SparseMatrix {
    type Output = SparseMatrix;
    fn neg(self) -> SparseMatrix {
        self.scale(&-Rational::one())
    }
}
