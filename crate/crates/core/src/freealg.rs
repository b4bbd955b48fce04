//! Free noncommutative polynomials, substitution, and degree-bounded
//! two-sided ideal membership with replayable certificates.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::linalg::{EchelonBasis, Rational, SparseMatrix, SparseVec};

/// Operations needed to evaluate a free polynomial in a target algebra.
pub trait Algebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Algebra for SparseMatrix {
    fn zero_like(&self) -> Self {
        SparseMatrix::zeros(self.nrows(), self.ncols())
    }
    fn one_like(&self) -> Self {
        SparseMatrix::identity(self.nrows())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("no image given for generator {0:?}")]
    MissingImage(char),
    #[error("degree bound {bound} is below the target degree {degree}")]
    BoundBelowDegree { bound: usize, degree: usize },
    #[error("generator list is empty")]
    NoGenerators,
}

/// Word over an alphabet, stored as symbol indices. Ordered by length,
/// then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Rank in the length-lex enumeration over `size` symbols.
    pub fn rank(&self, size: usize) -> usize {
        let shorter: usize = (0..self.len()).map(|l| size.pow(l as u32)).sum();
        shorter + self.0.iter().fold(0usize, |acc, &s| acc * size + s as usize)
    }

    /// Every word of length at most `max_len`, in length-lex order.
    pub fn all_up_to(size: usize, max_len: usize) -> Vec<Word> {
        let mut out = alloc::vec![Word::empty()];
        let mut layer = alloc::vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * size);
            for w in &layer {
                for s in 0..size {
                    let mut v = w.0.clone();
                    v.push(s as u8);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn render(&self, alphabet: &[char]) -> String {
        self.0.iter().map(|&s| alphabet[s as usize]).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the free algebra over `alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreePoly {
    alphabet: Arc<[char]>,
    terms: BTreeMap<Word, Rational>,
}

impl FreePoly {
    pub fn zero(alphabet: Arc<[char]>) -> Self {
        FreePoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Arc<[char]>) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    pub fn constant(alphabet: Arc<[char]>, c: Rational) -> Self {
        Self::word(alphabet, Word::empty(), c)
    }

    pub fn word(alphabet: Arc<[char]>, w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreePoly { alphabet, terms }
    }

    /// The generator `symbol` as a polynomial.
    pub fn generator(alphabet: Arc<[char]>, symbol: char) -> Result<Self, FreeAlgError> {
        let idx = alphabet.iter().position(|&s| s == symbol).ok_or(FreeAlgError::UnknownSymbol(symbol))?;
        Ok(Self::word(alphabet, Word(alloc::vec![idx as u8]), Rational::one()))
    }

    /// Monomial spelled by `spelling`, e.g. `"ABA"`.
    pub fn monomial(alphabet: Arc<[char]>, spelling: &str) -> Result<Self, FreeAlgError> {
        let w = spelling
            .chars()
            .map(|ch| alphabet.iter().position(|&s| s == ch).map(|i| i as u8).ok_or(FreeAlgError::UnknownSymbol(ch)))
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(Self::word(alphabet, Word(w), Rational::one()))
    }

    pub fn alphabet(&self) -> &Arc<[char]> {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length among the terms (0 for zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    fn same_alphabet(&self, other: &Self) -> Result<(), FreeAlgError> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(FreeAlgError::AlphabetMismatch)
        }
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet.clone());
        }
        FreePoly { alphabet: self.alphabet.clone(), terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.try_add(&-other)
    }

    /// Concatenation product.
    pub fn fmultiply(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same_alphabet(other)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> Self {
        FreePoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, c)| (u.concat(w).concat(v), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.alphabet.clone());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Coefficient vector over all words of length at most `max_len`.
    /// Terms of higher degree are dropped, so callers check degrees first.
    pub fn to_vector(&self, max_len: usize) -> SparseVec {
        let size = self.alphabet.len();
        let dim: usize = (0..=max_len).map(|l| size.pow(l as u32)).sum();
        SparseVec::from_entries(
            dim,
            self.terms.iter().filter(|(w, _)| w.len() <= max_len).map(|(w, c)| (w.rank(size), c.clone())),
        )
    }

    /// Image under the homomorphism sending each generator to `images[symbol]`.
    pub fn substitute<T: Algebra>(&self, images: &BTreeMap<char, T>) -> Result<T, FreeAlgError> {
        let symbols: Vec<&T> = self
            .alphabet
            .iter()
            .map(|s| images.get(s).ok_or(FreeAlgError::MissingImage(*s)))
            .collect::<Result<_, _>>()?;
        let Some(proto) = symbols.first() else {
            return Err(FreeAlgError::MissingImage('?'));
        };
        let mut acc = proto.zero_like();
        // Words are visited in length-lex order, so every proper prefix of a
        // word is already in the cache when needed.
        let mut prefixes: BTreeMap<Word, T> = BTreeMap::new();
        prefixes.insert(Word::empty(), proto.one_like());
        for (w, c) in &self.terms {
            let value = word_value(w, &symbols, &mut prefixes);
            acc = acc.plus(&value.scaled(c));
        }
        Ok(acc)
    }

    pub fn render(&self) -> String {
        alloc::string::ToString::to_string(self)
    }
}

fn word_value<T: Algebra>(w: &Word, symbols: &[&T], cache: &mut BTreeMap<Word, T>) -> T {
    if let Some(v) = cache.get(w) {
        return v.clone();
    }
    let (head, last) = w.0.split_at(w.len() - 1);
    let head = Word(head.to_vec());
    let prefix = word_value(&head, symbols, cache);
    let value = prefix.times(symbols[last[0] as usize]);
    cache.insert(w.clone(), value.clone());
    value
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        self.try_add(rhs).expect("free polynomial alphabets differ")
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self.try_sub(rhs).expect("free polynomial alphabets differ")
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        self.fmultiply(rhs).expect("free polynomial alphabets differ")
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        self.scale(&-Rational::one())
    }
}

impl Algebra for FreePoly {
    fn zero_like(&self) -> Self {
        FreePoly::zero(self.alphabet.clone())
    }
    fn one_like(&self) -> Self {
        FreePoly::one(self.alphabet.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Terms in length-lex word order, e.g. `1 - 2 AB + 1/3 BA`.
impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let m = c.abs();
            if w.is_empty() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                f.write_str(&w.render(&self.alphabet))?;
            } else {
                write!(f, "{m} {}", w.render(&self.alphabet))?;
            }
        }
        Ok(())
    }
}

/// One summand `coeff * left * generators[generator] * right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CertificateTerm {
    pub left: Word,
    pub generator: usize,
    pub right: Word,
    pub coeff: Rational,
}

/// Explicit expression of a polynomial as a two-sided combination of
/// ideal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MembershipCertificate {
    pub alphabet: Arc<[char]>,
    pub terms: Vec<CertificateTerm>,
}

impl MembershipCertificate {
    /// Recomputes `sum coeff * u * g * v` from scratch.
    pub fn replay(&self, generators: &[FreePoly]) -> FreePoly {
        let mut out = FreePoly::zero(self.alphabet.clone());
        for t in &self.terms {
            out = &out + &generators[t.generator].sandwich(&t.left, &t.right).scale(&t.coeff);
        }
        out
    }

    /// Whether the certificate reproduces `target` exactly.
    pub fn verify(&self, target: &FreePoly, generators: &[FreePoly]) -> bool {
        self.terms.iter().all(|t| t.generator < generators.len()) && self.replay(generators) == *target
    }

    /// Largest `|u| + deg(g) + |v|` over the summands.
    pub fn max_degree(&self, generators: &[FreePoly]) -> usize {
        self.terms.iter().map(|t| t.left.len() + generators[t.generator].degree() + t.right.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Certified(MembershipCertificate),
    /// No combination of products up to the bound reaches the target.
    NotFoundUpToBound { bound: usize, rank: usize },
}

impl Membership {
    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Membership::Certified(c) => Some(c),
            Membership::NotFoundUpToBound { .. } => None,
        }
    }
}

/// Searches for `target` in the two-sided ideal spanned by products
/// `u * g * v` with `|u| + deg(g) + |v| <= degree_bound`.
///
/// Products are inserted into an echelon basis in a fixed order (total
/// degree, then `(u, v)` length-lex, then generator index) and the search
/// stops as soon as the target reduces to zero. A certificate is exact; a
/// negative answer only says nothing was found at this bound.
pub fn ideal_membership(
    target: &FreePoly,
    generators: &[FreePoly],
    degree_bound: usize,
) -> Result<Membership, FreeAlgError> {
    if generators.is_empty() {
        return Err(FreeAlgError::NoGenerators);
    }
    for g in generators {
        target.same_alphabet(g)?;
    }
    if degree_bound < target.degree() {
        return Err(FreeAlgError::BoundBelowDegree { bound: degree_bound, degree: target.degree() });
    }
    let alphabet = target.alphabet.clone();
    if target.is_zero() {
        return Ok(Membership::Certified(MembershipCertificate { alphabet, terms: Vec::new() }));
    }
    let size = alphabet.len();
    let target_vec = target.to_vector(degree_bound);
    let mut basis = EchelonBasis::with_tracking(target_vec.len());
    let mut residual = target_vec.clone();
    let mut candidates: Vec<(Word, usize, Word)> = Vec::new();

    let min_gen = generators.iter().filter(|g| !g.is_zero()).map(FreePoly::degree).min().unwrap_or(0);
    let words = Word::all_up_to(size, degree_bound.saturating_sub(min_gen));
    'outer: for total in min_gen..=degree_bound {
        // (u, v) pairs ordered length-lex as a pair, then by generator.
        let mut batch: Vec<(&Word, &Word, usize)> = Vec::new();
        for (gi, g) in generators.iter().enumerate() {
            if g.is_zero() || g.degree() > total {
                continue;
            }
            let outer_len = total - g.degree();
            for u in words.iter().take_while(|u| u.len() <= outer_len) {
                for v in words.iter().filter(|v| v.len() == outer_len - u.len()) {
                    batch.push((u, v, gi));
                }
            }
        }
        batch.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        for (u, v, gi) in batch {
            let product = generators[gi].sandwich(u, v);
            candidates.push((u.clone(), gi, v.clone()));
            if basis.insert(product.to_vector(degree_bound)) {
                residual = basis.residual(&residual);
                if residual.is_zero() {
                    break 'outer;
                }
            }
        }
    }
    if !residual.is_zero() {
        return Ok(Membership::NotFoundUpToBound { bound: degree_bound, rank: basis.rank() });
    }
    let coeffs = basis
        .express(&target_vec)
        .expect("dimensions agree")
        .expect("target reduced to zero, so it lies in the span");
    let terms = coeffs
        .iter()
        .map(|(idx, c)| {
            let (left, generator, right) = candidates[idx].clone();
            CertificateTerm { left, generator, right, coeff: c.clone() }
        })
        .collect();
    Ok(Membership::Certified(MembershipCertificate { alphabet, terms }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use alloc::string::ToString;

    fn ab() -> Arc<[char]> {
        Arc::from(&['A', 'B'][..])
    }

    fn p(s: &str) -> FreePoly {
        FreePoly::monomial(ab(), s).unwrap()
    }

    #[test]
    fn word_order_and_rank() {
        let words = Word::all_up_to(2, 3);
        assert_eq!(words.len(), 15);
        for (i, w) in words.iter().enumerate() {
            assert_eq!(w.rank(2), i);
        }
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn products() {
        assert_eq!(&p("A") * &p("B"), p("AB"));
        let sum = &p("A") + &p("B");
        let diff = &p("A") - &p("B");
        let expected = &(&(&p("AA") - &p("AB")) + &p("BA")) - &p("BB");
        assert_eq!(&sum * &diff, expected);
        let one = FreePoly::one(ab());
        assert_eq!(&one * &sum, sum);
    }

    #[test]
    fn alphabet_mismatch() {
        let other = FreePoly::monomial(Arc::from(&['X'][..]), "X").unwrap();
        assert_eq!(p("A").fmultiply(&other), Err(FreeAlgError::AlphabetMismatch));
    }

    #[test]
    fn substitute_into_matrices() {
        let a = SparseMatrix::diagonal(&[int(1), int(-1)]);
        let b = SparseMatrix::from_triplets(2, 2, [(0, 1, int(1))]);
        let images: BTreeMap<char, SparseMatrix> = [('A', a.clone()), ('B', b.clone())].into_iter().collect();
        assert_eq!(p("AA").substitute(&images).unwrap(), SparseMatrix::identity(2));
        assert_eq!(FreePoly::one(ab()).substitute(&images).unwrap(), SparseMatrix::identity(2));
        let c = p("A").commutator(&p("B"));
        assert_eq!(c.substitute(&images).unwrap(), a.commutator(&b));
        let partial: BTreeMap<char, SparseMatrix> = [('A', a)].into_iter().collect();
        assert_eq!(p("B").substitute(&partial), Err(FreeAlgError::MissingImage('B')));
    }

    #[test]
    fn generator_is_its_own_certificate() {
        let g = &p("AB") - &p("BA");
        let result = ideal_membership(&g, core::slice::from_ref(&g), 2).unwrap();
        let cert = result.certificate().unwrap();
        assert_eq!(cert.terms.len(), 1);
        assert_eq!(cert.terms[0].left, Word::empty());
        assert_eq!(cert.terms[0].right, Word::empty());
        assert!(cert.verify(&g, core::slice::from_ref(&g)));
    }

    #[test]
    fn commutative_quotient() {
        // AAB - BAA = A(AB-BA) + (AB-BA)A
        let g = &p("AB") - &p("BA");
        let target = &p("AAB") - &p("BAA");
        let cert = ideal_membership(&target, core::slice::from_ref(&g), 3).unwrap();
        let cert = cert.certificate().expect("member");
        assert!(cert.verify(&target, core::slice::from_ref(&g)));
        assert!(matches!(ideal_membership(&p("A"), core::slice::from_ref(&g), 4).unwrap(), Membership::NotFoundUpToBound { .. }));
        assert_eq!(
            ideal_membership(&target, &[g], 2),
            Err(FreeAlgError::BoundBelowDegree { bound: 2, degree: 3 })
        );
    }

    #[test]
    fn display() {
        let x = &(&p("AB").scale(&int(-2)) + &FreePoly::one(ab())) + &p("BA");
        assert_eq!(x.to_string(), "1 - 2 AB + BA");
    }
}
