use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::Rational;

/// Sparse vector of fixed dimension; entries sorted by index, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    len: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn zeros(len: usize) -> Self {
        SparseVec { len, entries: Vec::new() }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        assert!(index < len, "index {index} out of range for dimension {len}");
        SparseVec { len, entries: alloc::vec![(index, Rational::one())] }
    }

    /// Builds a vector from `(index, value)` pairs in any order; repeated
    /// indices are summed. Panics on an out-of-range index.
    pub fn from_entries(len: usize, entries: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut raw: Vec<(usize, Rational)> = entries.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            assert!(i < len, "index {i} out of range for dimension {len}");
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { len, entries: out }
    }

    pub(crate) fn from_sorted_unchecked(len: usize, entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < len && !v.is_zero()));
        SparseVec { len, entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVec { len: values.len(), entries }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the ambient dimension is zero.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Value at `index` (zero when absent).
    pub fn value(&self, index: usize) -> Rational {
        self.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    /// First nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SparseVec::zeros(self.len);
        }
        let entries = self.entries.iter().map(|(i, v)| (*i, v * c)).collect();
        SparseVec { len: self.len, entries }
    }

    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(|(i, v)| (*i, -v)).collect();
        SparseVec { len: self.len, entries }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> Self {
        assert_eq!(self.len, other.len, "vector dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => match ia.cmp(ib) {
                    Ordering::Less => {
                        out.push((*ia, va.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*ib, c * vb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = va + c * vb;
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, c * vb));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { len: self.len, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.axpy(&-Rational::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        assert_eq!(self.len, other.len, "vector dimension mismatch");
        let mut acc = Rational::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((ia, va)), Some((ib, vb))) = (a.peek(), b.peek()) {
            match ia.cmp(ib) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => {
                    acc += va * vb;
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    /// Entries restricted to `indices` (in the given order), re-indexed from 0.
    pub fn select(&self, indices: &[usize]) -> Self {
        SparseVec::from_entries(
            indices.len(),
            indices
                .iter()
                .enumerate()
                .filter_map(|(new, &old)| self.get(old).map(|v| (new, v.clone()))),
        )
    }
}
