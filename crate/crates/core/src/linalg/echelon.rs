use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{LinalgError, Rational, SparseMatrix, SparseVec};

/// Reduced row-echelon basis built by incremental insertion.
///
/// Invariants: pivot columns strictly increase with the row index, every
/// pivot entry is 1, and each pivot column is zero in every other row.
///
/// With tracking enabled the basis also records, for each row, its
/// expression as a combination of the vectors passed to [`insert`], which
/// lets callers turn a span membership into explicit coefficients on their
/// original inputs.
///
/// [`insert`]: EchelonBasis::insert
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    combos: Option<Vec<SparseVec>>,
    inserted: usize,
}

// Combination vectors grow with the number of insertions; they are stored
// with an unbounded nominal length and trimmed on the way out.
const OPEN_LEN: usize = usize::MAX;

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new(), pivots: Vec::new(), combos: None, inserted: 0 }
    }

    pub fn with_tracking(dim: usize) -> Self {
        EchelonBasis { combos: Some(Vec::new()), ..Self::new(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of vectors passed to `insert` so far, dependent or not.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// Residual of `v` after clearing every pivot column, plus the row
    /// coefficients that were subtracted.
    fn reduce(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, Rational)>) {
        let coeffs: Vec<(usize, Rational)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row(c).map(|r| (r, x.clone())))
            .collect();
        let mut residual = v.clone();
        for (r, c) in &coeffs {
            residual = residual.axpy(&-c, &self.rows[*r]);
        }
        (residual, coeffs)
    }

    /// Adds `v` to the spanning set. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        assert_eq!(v.len(), self.dim, "echelon insert: dimension mismatch");
        let index = self.inserted;
        self.inserted += 1;
        let (residual, coeffs) = self.reduce(&v);
        let Some((pivot, lead)) = residual.leading() else {
            return false;
        };
        let inv = lead.recip();
        let new_row = residual.scale(&inv);
        let new_combo = self.combos.as_ref().map(|combos| {
            let mut combo = SparseVec::unit(OPEN_LEN, index);
            for (r, c) in &coeffs {
                combo = combo.axpy(&-c, &combos[*r]);
            }
            combo.scale(&inv)
        });
        for r in 0..self.rows.len() {
            if let Some(c) = self.rows[r].get(pivot).cloned() {
                self.rows[r] = self.rows[r].axpy(&-&c, &new_row);
                if let (Some(combos), Some(nc)) = (self.combos.as_mut(), new_combo.as_ref()) {
                    combos[r] = combos[r].axpy(&-c, nc);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, new_row);
        if let (Some(combos), Some(nc)) = (self.combos.as_mut(), new_combo) {
            combos.insert(pos, nc);
        }
        true
    }

    /// Reduces `v` modulo the current span; zero iff `v` lies in it.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        self.reduce(v).0
    }

    /// Coefficients of `v` with respect to the basis rows, or `None` when
    /// `v` is outside the span.
    pub fn in_span(&self, v: &SparseVec) -> Result<Option<Vec<Rational>>, LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let (residual, coeffs) = self.reduce(v);
        if !residual.is_zero() {
            return Ok(None);
        }
        let mut out = alloc::vec![Rational::zero(); self.rows.len()];
        for (r, c) in coeffs {
            out[r] = c;
        }
        Ok(Some(out))
    }

    /// Coefficients of `v` on the inserted vectors (indexed by insertion
    /// order). Requires a basis created with [`EchelonBasis::with_tracking`].
    pub fn express(&self, v: &SparseVec) -> Result<Option<SparseVec>, LinalgError> {
        let combos = self.combos.as_ref().expect("express requires a tracking echelon basis");
        let Some(coeffs) = self.in_span(v)? else {
            return Ok(None);
        };
        let mut acc = SparseVec::zeros(OPEN_LEN);
        for (r, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.axpy(c, &combos[r]);
            }
        }
        Ok(Some(SparseVec::from_sorted_unchecked(self.inserted, acc.entries().to_vec())))
    }
}

/// Reduced row-echelon form of `m`; the rank is the number of rows.
pub fn rref(m: &SparseMatrix) -> (EchelonBasis, usize) {
    let mut basis = EchelonBasis::new(m.ncols());
    for row in m.rows() {
        basis.insert(row.clone());
    }
    let rank = basis.rank();
    (basis, rank)
}

/// Basis of `{v : m v = 0}`, one vector per non-pivot column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let n = m.ncols();
    let (basis, _) = rref(m);
    let mut is_pivot = alloc::vec![false; n];
    for &p in basis.pivots() {
        is_pivot[p] = true;
    }
    let mut entries: Vec<Vec<(usize, Rational)>> = (0..n).map(|_| Vec::new()).collect();
    for (row, &p) in basis.rows().iter().zip(basis.pivots()) {
        for (c, x) in row.iter() {
            if !is_pivot[c] {
                entries[c].push((p, -x));
            }
        }
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|c| {
            let mut e = core::mem::take(&mut entries[c]);
            e.push((c, Rational::one()));
            SparseVec::from_entries(n, e)
        })
        .collect()
}

/// Basis of the `lam`-eigenspace of a square matrix (empty when `lam` is
/// not an eigenvalue).
pub fn eigenspace(m: &SparseMatrix, lam: &Rational) -> Result<Vec<SparseVec>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let shifted = m - &SparseMatrix::scalar(m.nrows(), lam);
    Ok(kernel_basis(&shifted))
}

/// The unital matrix algebra generated by a set of square matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    size: usize,
    basis: EchelonBasis,
    elements: Vec<SparseMatrix>,
    generators: Vec<SparseMatrix>,
}

impl MatrixAlgebra {
    /// Linear dimension of the algebra.
    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }

    /// Side length of the matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Echelon basis over the flattened `size * size` entry space.
    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Products of generators (words) that form a linear basis.
    pub fn elements(&self) -> &[SparseMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &SparseMatrix) -> bool {
        m.nrows() == self.size && m.ncols() == self.size && self.basis.residual(&m.flatten()).is_zero()
    }

    /// Whether this is all of `End(Q^size)`.
    pub fn is_full(&self) -> bool {
        self.dimension() == self.size * self.size
    }

    /// Post-hoc closure certificate: every basis element times every
    /// generator, on either side, stays inside the span.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|x| self.generators.iter().all(|g| self.contains(&(x * g)) && self.contains(&(g * x))))
    }
}

/// Linear basis of the unital algebra generated by `generators`.
///
/// Words are grown by right multiplication with generators from a work
/// queue; a word is kept only if it enlarges the span, and the queue runs
/// until every kept word times every generator is already in the span.
pub fn span_closure(generators: &[SparseMatrix]) -> Result<MatrixAlgebra, LinalgError> {
    let first = generators.first().ok_or(LinalgError::DimensionMismatch { expected: 1, found: 0 })?;
    if !first.is_square() {
        return Err(LinalgError::NotSquare { rows: first.nrows(), cols: first.ncols() });
    }
    let size = first.nrows();
    for g in generators {
        if g.nrows() != size || g.ncols() != size {
            return Err(LinalgError::DimensionMismatch { expected: size, found: g.nrows().max(g.ncols()) });
        }
    }
    let mut basis = EchelonBasis::new(size * size);
    let mut elements = Vec::new();
    let mut queue = VecDeque::new();
    for m in core::iter::once(SparseMatrix::identity(size)).chain(generators.iter().cloned()) {
        if basis.insert(m.flatten()) {
            queue.push_back(elements.len());
            elements.push(m);
        }
    }
    while let Some(idx) = queue.pop_front() {
        if basis.rank() == size * size {
            break;
        }
        for g in generators {
            let product = &elements[idx] * g;
            if basis.insert(product.flatten()) {
                queue.push_back(elements.len());
                elements.push(product);
            }
        }
    }
    Ok(MatrixAlgebra { size, basis, elements, generators: generators.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};
    use alloc::vec;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&dense(&[&[1, 2], &[2, 4]])).1, 1);
        assert_eq!(rref(&SparseMatrix::identity(3)).1, 3);
        let (b, r) = rref(&SparseMatrix::zeros(3, 3));
        assert_eq!(r, 0);
        assert!(b.rows().is_empty());
    }

    #[test]
    fn echelon_invariants_hold() {
        let m = dense(&[&[0, 2, 4, 1], &[1, 1, 0, 0], &[1, 3, 4, 1], &[3, 0, 1, 7]]);
        let (b, rank) = rref(&m);
        assert_eq!(rank, 3);
        assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
        for (i, (row, &p)) in b.rows().iter().zip(b.pivots()).enumerate() {
            assert_eq!(row.value(p), int(1));
            for (j, other) in b.rows().iter().enumerate() {
                if i != j {
                    assert!(other.get(p).is_none());
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        assert_eq!(kernel_basis(&SparseMatrix::zeros(2, 2)).len(), 2);
        let k = kernel_basis(&dense(&[&[1, 1], &[0, 0]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], SparseVec::from_dense(&[int(-1), int(1)]));
    }

    #[test]
    fn eigenspace_examples() {
        let h = SparseMatrix::diagonal(&[int(2), int(0), int(-2)]);
        assert_eq!(eigenspace(&h, &int(0)).unwrap(), vec![SparseVec::unit(3, 1)]);
        assert!(eigenspace(&h, &int(1)).unwrap().is_empty());
        assert_eq!(eigenspace(&h, &int(2)).unwrap(), vec![SparseVec::unit(3, 0)]);
        assert!(eigenspace(&SparseMatrix::zeros(2, 3), &int(0)).is_err());
    }

    #[test]
    fn in_span_examples() {
        let (b, _) = rref(&dense(&[&[1, 0, 2], &[0, 1, 3]]));
        assert_eq!(b.in_span(&b.rows()[0].clone()).unwrap(), Some(vec![int(1), int(0)]));
        assert_eq!(b.in_span(&SparseVec::zeros(3)).unwrap(), Some(vec![int(0), int(0)]));
        assert_eq!(b.in_span(&SparseVec::unit(3, 2)).unwrap(), None);
        assert!(b.in_span(&SparseVec::zeros(2)).is_err());
    }

    #[test]
    fn tracking_expresses_in_inserted_vectors() {
        let mut b = EchelonBasis::with_tracking(3);
        let v0 = SparseVec::from_dense(&[int(2), int(4), int(0)]);
        let v1 = SparseVec::from_dense(&[int(1), int(2), int(0)]);
        let v2 = SparseVec::from_dense(&[int(0), int(1), int(1)]);
        assert!(b.insert(v0.clone()));
        assert!(!b.insert(v1));
        assert!(b.insert(v2.clone()));
        let target = SparseVec::from_dense(&[int(1), int(5), int(3)]);
        let coeffs = b.express(&target).unwrap().unwrap();
        assert_eq!(coeffs.len(), 3);
        assert!(coeffs.get(1).is_none());
        let rebuilt = v0.scale(&coeffs.value(0)).axpy(&coeffs.value(2), &v2);
        assert_eq!(rebuilt, target);
        assert_eq!(coeffs.value(0), rat(1, 2));
    }

    #[test]
    fn closure_examples() {
        let id = span_closure(&[SparseMatrix::identity(3)]).unwrap();
        assert_eq!(id.dimension(), 1);
        let e = dense(&[&[0, 1], &[0, 0]]);
        let f = dense(&[&[0, 0], &[1, 0]]);
        let h = dense(&[&[1, 0], &[0, -1]]);
        let full = span_closure(&[e, f, h]).unwrap();
        assert_eq!(full.dimension(), 4);
        assert!(full.is_full());
        assert!(full.is_closed());
        let diag = span_closure(&[SparseMatrix::diagonal(&[int(1), int(2), int(2)])]).unwrap();
        assert_eq!(diag.dimension(), 2);
        assert!(diag.is_closed());
    }

    #[test]
    fn closure_rejects_mismatched_sizes() {
        assert!(span_closure(&[SparseMatrix::identity(2), SparseMatrix::identity(3)]).is_err());
        assert!(span_closure(&[SparseMatrix::zeros(2, 3)]).is_err());
        assert!(span_closure(&[]).is_err());
    }
}
