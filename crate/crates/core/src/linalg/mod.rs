//! Exact-rational sparse linear algebra.
//!
//! Everything here works over [`Rational`] (arbitrary precision, always in
//! lowest terms). Vectors and matrices are sparse and never store zeros, so
//! structural equality is value equality.

mod echelon;
mod matrix;
mod vector;

pub use echelon::{eigenspace, kernel_basis, rref, span_closure, EchelonBasis, MatrixAlgebra};
pub use matrix::SparseMatrix;
pub use vector::SparseVec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// `n!` as a [`Rational`].
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Rational spectrum of a matrix that is diagonalizable over the rationals.
///
/// Returns eigenvalues in decreasing order with their (geometric)
/// multiplicities, or `None` when the eigenspaces over `Q` do not fill the
/// space. Every rational eigenvalue of `M` is an integer multiple of `1/m`
/// where `m` clears the denominators of `M`, and is bounded by the max-row
/// norm, so a finite scan decides it.
pub fn rational_spectrum(m: &SparseMatrix) -> Result<Option<alloc::vec::Vec<(Rational, usize)>>, LinalgError> {
    use alloc::vec::Vec;
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if m.is_diagonal() {
        let mut vals: Vec<Rational> = (0..n).map(|i| m.get(i, i)).collect();
        vals.sort_by(|a, b| b.cmp(a));
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for v in vals {
            match out.last_mut() {
                Some((last, count)) if *last == v => *count += 1,
                _ => out.push((v, 1)),
            }
        }
        return Ok(Some(out));
    }
    let scale = Rational::from_integer(denominator_lcm(m.rows().iter().flat_map(|r| r.iter().map(|(_, v)| v))));
    let bound = m
        .rows()
        .iter()
        .map(|r| r.iter().fold(Rational::zero(), |acc, (_, v)| acc + v.abs()))
        .max()
        .unwrap_or_else(Rational::zero);
    let limit = (bound * &scale).ceil().to_integer();
    let mut out = Vec::new();
    let mut found = 0usize;
    let mut k = limit.clone();
    while k >= -limit.clone() && found < n {
        let lam = Rational::from_integer(k.clone()) / &scale;
        let dim = eigenspace(m, &lam)?.len();
        if dim > 0 {
            found += dim;
            out.push((lam, dim));
        }
        k -= 1;
    }
    Ok(if found == n { Some(out) } else { None })
}

/// Matrix of `op` restricted to the invariant subspace spanned by the
/// linearly independent columns `basis`, expressed in that basis.
pub fn restrict_to_subspace(op: &SparseMatrix, basis: &[SparseVec]) -> Result<SparseMatrix, LinalgError> {
    use alloc::vec::Vec;
    if !op.is_square() {
        return Err(LinalgError::NotSquare { rows: op.nrows(), cols: op.ncols() });
    }
    let n = op.nrows();
    let mut ech = EchelonBasis::with_tracking(n);
    for v in basis {
        if v.len() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, found: v.len() });
        }
        if !ech.insert(v.clone()) {
            return Err(LinalgError::Dependent);
        }
    }
    let k = basis.len();
    let mut cols: Vec<SparseVec> = Vec::with_capacity(k);
    for v in basis {
        let image = op.mul_vec(v);
        let coords = ech.express(&image)?.ok_or(LinalgError::NotInvariant)?;
        cols.push(coords);
    }
    Ok(SparseMatrix::from_columns(k, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(10, 0), BigInt::one());
    }

    #[test]
    fn spectrum_of_non_diagonal_matrix() {
        // [[0,1],[1,0]] has eigenvalues 1, -1
        let m = SparseMatrix::from_dense(&[alloc::vec![int(0), int(1)], alloc::vec![int(1), int(0)]]);
        let spec = rational_spectrum(&m).unwrap().unwrap();
        assert_eq!(spec, alloc::vec![(int(1), 1), (int(-1), 1)]);
        // rotation by 90 degrees has no rational eigenvalues
        let rot = SparseMatrix::from_dense(&[alloc::vec![int(0), int(-1)], alloc::vec![int(1), int(0)]]);
        assert_eq!(rational_spectrum(&rot).unwrap(), None);
        // a Jordan block is not diagonalizable
        let jordan = SparseMatrix::from_dense(&[alloc::vec![int(2), int(1)], alloc::vec![int(0), int(2)]]);
        assert_eq!(rational_spectrum(&jordan).unwrap(), None);
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let m = SparseMatrix::diagonal(&[int(2), int(0), int(-2)]);
        let basis = [SparseVec::unit(3, 0), SparseVec::unit(3, 2)];
        let r = restrict_to_subspace(&m, &basis).unwrap();
        assert_eq!(r, SparseMatrix::diagonal(&[int(2), int(-2)]));
        let shift = SparseMatrix::from_triplets(3, 3, [(0, 1, int(1))]);
        assert_eq!(
            restrict_to_subspace(&shift, &[SparseVec::unit(3, 1)]),
            Err(LinalgError::NotInvariant)
        );
    }
}
