//! The universal enveloping algebra `U(sl2)` in PBW normal form.
//!
//! Elements are finite sums of ordered monomials `E^i F^j H^k` with exact
//! rational coefficients. Products are normalized by letting generators act
//! on the left of a normal-form element, using
//!
//! ```text
//! H E^i F^j H^k = E^i F^j (H + 2i - 2j) H^k
//! F E^i F^j H^k = E^i F^(j+1) H^k - i E^(i-1) F^j (H + i - 1 - 2j) H^k
//! ```
//!
//! both of which follow from `[H,E]=2E`, `[H,F]=-2F`, `[E,F]=H`.

mod basis;
mod parse;
mod suite;

pub use basis::{ue_basis_decompose, ue_basis_element, ue_basis_reassemble, UeBasisError, UeBasisKey, UePart};
pub use parse::{parse_element, ParseError};
pub use suite::{power_identity_suite, verify_rho_properties, verify_ue_presentation};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::freealg::Algebra;
use crate::linalg::{int, rat, Rational};

/// Generators of `U(sl2)`, ordered as in the PBW basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E,
    F,
    H,
}

/// Ordered monomial `E^e F^f H^h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial {
    pub e: u32,
    pub f: u32,
    pub h: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { e: 0, f: 0, h: 0 };

    pub const fn new(e: u32, f: u32, h: u32) -> Self {
        PbwMonomial { e, f, h }
    }

    /// Grading degree `e - f`.
    pub fn degree(&self) -> i64 {
        i64::from(self.e) - i64::from(self.f)
    }

    pub fn total_degree(&self) -> u32 {
        self.e + self.f + self.h
    }
}

/// Element of `U(sl2)` in PBW normal form. Zero coefficients are never
/// stored, so derived equality is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Usl2Element {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl Usl2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Usl2Element { terms }
    }

    /// `E^e F^f H^h` with coefficient 1.
    pub fn pbw(e: u32, f: u32, h: u32) -> Self {
        Self::monomial(PbwMonomial::new(e, f, h), Rational::one())
    }

    pub fn e() -> Self {
        Self::pbw(1, 0, 0)
    }

    pub fn f() -> Self {
        Self::pbw(0, 1, 0)
    }

    pub fn h() -> Self {
        Self::pbw(0, 0, 1)
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::E => Self::e(),
            Generator::F => Self::f(),
            Generator::H => Self::h(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, Rational)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `e + f + h` among the terms (0 for zero).
    pub fn filtration_degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::total_degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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
            return Self::zero();
        }
        Usl2Element { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// `E * self`.
    fn left_e(&self) -> Self {
        Usl2Element { terms: self.terms.iter().map(|(m, c)| (PbwMonomial::new(m.e + 1, m.f, m.h), c.clone())).collect() }
    }

    /// `H * self`.
    fn left_h(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(PbwMonomial::new(m.e, m.f, m.h + 1), c.clone());
            let shift = 2 * m.degree();
            if shift != 0 {
                out.add_term(*m, c * int(shift));
            }
        }
        out
    }

    /// `F * self`.
    fn left_f(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(PbwMonomial::new(m.e, m.f + 1, m.h), c.clone());
            if m.e > 0 {
                let i = i64::from(m.e);
                let j = i64::from(m.f);
                let lowered = PbwMonomial::new(m.e - 1, m.f, m.h);
                out.add_term(PbwMonomial::new(lowered.e, lowered.f, lowered.h + 1), -(c * int(i)));
                let shift = i * (i - 1 - 2 * j);
                if shift != 0 {
                    out.add_term(lowered, -(c * int(shift)));
                }
            }
        }
        out
    }

    /// `E^i F^j H^k * self`.
    fn left_monomial(&self, m: &PbwMonomial) -> Self {
        let mut out = self.clone();
        for _ in 0..m.h {
            out = out.left_h();
        }
        for _ in 0..m.f {
            out = out.left_f();
        }
        for _ in 0..m.e {
            out = out.left_e();
        }
        out
    }

    /// `g * self` for a single generator.
    pub fn left_mul_generator(&self, g: Generator) -> Self {
        match g {
            Generator::E => self.left_e(),
            Generator::F => self.left_f(),
            Generator::H => self.left_h(),
        }
    }

    /// PBW normal form of `self * other`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (pm, pc) in other.left_monomial(m).terms {
                out.add_term(pm, pc * c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.multiply(self);
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.multiply(other) - &other.multiply(self)
    }

    /// Image under the automorphism `(E, F, H) -> (F, E, -H)`.
    pub fn rho(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // rho(E^i F^j H^k) = (-1)^k F^i E^j H^k
            let tail = Self::pbw(m.f, 0, m.h);
            let mut image = tail;
            for _ in 0..m.e {
                image = image.left_f();
            }
            let sign = if m.h % 2 == 0 { c.clone() } else { -c.clone() };
            for (pm, pc) in image.terms {
                out.add_term(pm, pc * &sign);
            }
        }
        out
    }

    /// Homogeneous components keyed by degree `i - j`.
    pub fn degree_components(&self) -> BTreeMap<i64, Usl2Element> {
        let mut out: BTreeMap<i64, Usl2Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Whether every homogeneous component has even degree.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 0)
    }

    /// Whether the element lies in the span of `U_n` for `n` in `degrees`.
    pub fn supported_in(&self, degrees: &[i64]) -> bool {
        self.terms.keys().all(|m| degrees.contains(&m.degree()))
    }
}

/// The Casimir element `EF + FE + H^2/2`, normalized to `2EF + H^2/2 - H`.
pub fn casimir() -> Usl2Element {
    Usl2Element::from_terms([
        (PbwMonomial::new(1, 1, 0), int(2)),
        (PbwMonomial::new(0, 0, 2), rat(1, 2)),
        (PbwMonomial::new(0, 0, 1), int(-1)),
    ])
}

/// Normal form of a word in the generators by rewriting the leftmost
/// out-of-order pair (`FE`, `HE` or `HF`) until every word is ordered.
///
/// Each rewrite either removes an inversion or shortens the word, so the
/// process terminates. This is the slow reference path; [`Usl2Element::multiply`]
/// is the production one.
pub fn normal_form_of_word(word: &[Generator]) -> Usl2Element {
    let mut pending: BTreeMap<Vec<Generator>, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::one());
    let mut out = Usl2Element::zero();
    while let Some((w, c)) = pending.pop_first() {
        let Some(pos) = w.windows(2).position(|p| p[0] > p[1]) else {
            let count = |g| w.iter().filter(|&&x| x == g).count() as u32;
            out.add_term(PbwMonomial::new(count(Generator::E), count(Generator::F), count(Generator::H)), c);
            continue;
        };
        let (left, right) = (&w[..pos], &w[pos + 2..]);
        let (x, y) = (w[pos], w[pos + 1]);
        let swapped: Vec<Generator> = left.iter().copied().chain([y, x]).chain(right.iter().copied()).collect();
        let (extra, coeff) = match (x, y) {
            (Generator::F, Generator::E) => (Generator::H, int(-1)),
            (Generator::H, Generator::E) => (Generator::E, int(2)),
            (Generator::H, Generator::F) => (Generator::F, int(-2)),
            _ => unreachable!("only out-of-order pairs are rewritten"),
        };
        let shorter: Vec<Generator> = left.iter().copied().chain([extra]).chain(right.iter().copied()).collect();
        for (k, v) in [(swapped, c.clone()), (shorter, c * coeff)] {
            let slot = pending.entry(k).or_insert_with(Rational::zero);
            *slot += v;
        }
        pending.retain(|_, v| !v.is_zero());
    }
    out
}

impl Add for &Usl2Element {
    type Output = Usl2Element;
    fn add(self, rhs: &Usl2Element) -> Usl2Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Usl2Element {
    type Output = Usl2Element;
    fn sub(self, rhs: &Usl2Element) -> Usl2Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Usl2Element {
    type Output = Usl2Element;
    fn mul(self, rhs: &Usl2Element) -> Usl2Element {
        self.multiply(rhs)
    }
}

impl Neg for &Usl2Element {
    type Output = Usl2Element;
    fn neg(self) -> Usl2Element {
        self.scale(&-Rational::one())
    }
}

impl Algebra for Usl2Element {
    fn zero_like(&self) -> Self {
        Usl2Element::zero()
    }
    fn one_like(&self) -> Self {
        Usl2Element::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self.multiply(other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, name: char, exp: u32, first: &mut bool) -> fmt::Result {
    if exp == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str(" ")?;
    }
    *first = false;
    if exp == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

/// Renders as `c * E^i F^j H^k` terms joined by `+`/`-`, in monomial order.
/// The zero element renders as `0`. [`parse_element`] reads this format back.
impl fmt::Display for Usl2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}")?;
            if *m != PbwMonomial::ONE {
                f.write_str(" * ")?;
                let mut first = true;
                write_factor(f, 'E', m.e, &mut first)?;
                write_factor(f, 'F', m.f, &mut first)?;
                write_factor(f, 'H', m.h, &mut first)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{E, F, H};

    fn el(terms: &[((u32, u32, u32), i64, i64)]) -> Usl2Element {
        Usl2Element::from_terms(terms.iter().map(|&((e, f, h), n, d)| (PbwMonomial::new(e, f, h), rat(n, d))))
    }

    #[test]
    fn defining_relations() {
        let (e, f, h) = (Usl2Element::e(), Usl2Element::f(), Usl2Element::h());
        assert_eq!(&f * &e, el(&[((1, 1, 0), 1, 1), ((0, 0, 1), -1, 1)]));
        assert_eq!(&h * &e, el(&[((1, 0, 1), 1, 1), ((1, 0, 0), 2, 1)]));
        assert_eq!(h.commutator(&f), f.scale(&int(-2)));
        assert_eq!(e.commutator(&f), h);
    }

    #[test]
    fn f_times_e_squared() {
        let got = &Usl2Element::f() * &Usl2Element::pbw(2, 0, 0);
        assert_eq!(got, el(&[((2, 1, 0), 1, 1), ((1, 0, 1), -2, 1), ((1, 0, 0), -2, 1)]));
    }

    #[test]
    fn unit_is_neutral() {
        let x = el(&[((2, 1, 3), 3, 7), ((0, 4, 0), -1, 2)]);
        assert_eq!(&Usl2Element::one() * &x, x);
        assert_eq!(&x * &Usl2Element::one(), x);
    }

    #[test]
    fn commutator_examples() {
        let h = Usl2Element::h();
        let e3 = Usl2Element::pbw(3, 0, 0);
        assert_eq!(h.commutator(&e3), e3.scale(&int(6)));
        let x = el(&[((1, 2, 1), 1, 3)]);
        assert!(x.commutator(&x).is_zero());
        // [H^2, F^2] = -8(H+2)F^2
        let h2 = Usl2Element::pbw(0, 0, 2);
        let f2 = Usl2Element::pbw(0, 2, 0);
        let rhs = (&(&h + &Usl2Element::constant(int(2))) * &f2).scale(&int(-8));
        assert_eq!(h2.commutator(&f2), rhs);
    }

    #[test]
    fn casimir_is_central() {
        let c = casimir();
        for g in [Usl2Element::e(), Usl2Element::f(), Usl2Element::h()] {
            assert!(c.commutator(&g).is_zero());
        }
        let direct = &(&(&Usl2Element::e() * &Usl2Element::f()) + &(&Usl2Element::f() * &Usl2Element::e()))
            + &Usl2Element::pbw(0, 0, 2).scale(&rat(1, 2));
        assert_eq!(direct, c);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(Usl2Element::e().rho(), Usl2Element::f());
        assert_eq!(Usl2Element::h().rho(), -&Usl2Element::h());
        assert_eq!(casimir().rho(), casimir());
        let x = el(&[((2, 1, 3), 3, 7), ((0, 4, 1), -1, 2), ((1, 0, 0), 5, 1)]);
        assert_eq!(x.rho().rho(), x);
    }

    #[test]
    fn degree_components_examples() {
        let x = Usl2Element::pbw(2, 1, 1);
        let comps = x.degree_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&1], x);
        let lam = casimir().degree_components();
        assert_eq!(lam.keys().copied().collect::<Vec<_>>(), alloc::vec![0]);
        assert!(Usl2Element::pbw(2, 0, 0).is_even());
        assert!(!Usl2Element::e().is_even());
    }

    #[test]
    fn word_rewriting_agrees_with_multiplication() {
        let words: [&[Generator]; 5] = [&[F, E], &[H, E], &[F, E, E], &[H, F, E, H, F], &[F, F, E, E, H, E]];
        for w in words {
            let mut product = Usl2Element::one();
            for &g in w {
                product = product.multiply(&Usl2Element::generator(g));
            }
            assert_eq!(normal_form_of_word(w), product, "word {w:?}");
        }
    }

    #[test]
    fn display_format() {
        use alloc::string::ToString;
        assert_eq!(casimir().to_string(), "-1 * H + 1/2 * H^2 + 2 * E F");
        assert_eq!(Usl2Element::zero().to_string(), "0");
        assert_eq!(Usl2Element::constant(rat(-3, 4)).to_string(), "-3/4");
    }
}
