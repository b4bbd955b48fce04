//! Coordinates of even elements in the basis `E^(2n) Λ^i H^k`, `Λ^i H^k`,
//! `F^(2n) Λ^i H^k` of `U(sl2)_e`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{casimir, PbwMonomial, Usl2Element};
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UePart {
    /// `E^(2n) Λ^i H^k` with `n >= 1`.
    Plus,
    /// `Λ^i H^k`.
    Zero,
    /// `F^(2n) Λ^i H^k` with `n >= 1`.
    Minus,
}

/// Index of a basis element of `U(sl2)_e`; `n` is zero exactly for [`UePart::Zero`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UeBasisKey {
    pub part: UePart,
    pub n: u32,
    pub i: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum UeBasisError {
    #[error("element has a component of odd degree {0}")]
    NotEven(i64),
}

/// Caches powers of the Casimir element.
struct LambdaPowers(Vec<Usl2Element>);

impl LambdaPowers {
    fn new() -> Self {
        LambdaPowers(alloc::vec![Usl2Element::one()])
    }

    fn get(&mut self, i: u32) -> &Usl2Element {
        let lam = casimir();
        while self.0.len() <= i as usize {
            let next = self.0.last().expect("nonempty").multiply(&lam);
            self.0.push(next);
        }
        &self.0[i as usize]
    }
}

fn build(key: &UeBasisKey, powers: &mut LambdaPowers) -> Usl2Element {
    let (e, f) = match key.part {
        UePart::Plus => (2 * key.n, 0),
        UePart::Zero => (0, 0),
        UePart::Minus => (0, 2 * key.n),
    };
    let front = Usl2Element::pbw(e, f, 0);
    front.multiply(powers.get(key.i)).multiply(&Usl2Element::pbw(0, 0, key.k))
}

/// PBW expansion of a basis element.
pub fn ue_basis_element(key: &UeBasisKey) -> Usl2Element {
    build(key, &mut LambdaPowers::new())
}

/// Coordinates of an even element in the `U(sl2)_e` basis.
///
/// Within `U_m` (`m >= 0`) the element `E^m Λ^l H^k` equals
/// `2^l E^(m+l) F^l H^k` plus terms with fewer `F` factors, so peeling off
/// the term with the most `F` factors (fewest `E` for `m < 0`) is a
/// triangular solve.
pub fn ue_basis_decompose(a: &Usl2Element) -> Result<BTreeMap<UeBasisKey, Rational>, UeBasisError> {
    if let Some(m) = a.terms().keys().find(|m| m.degree() % 2 != 0) {
        return Err(UeBasisError::NotEven(m.degree()));
    }
    let mut powers = LambdaPowers::new();
    let mut rest = a.clone();
    let mut out = BTreeMap::new();
    let two = Rational::from_integer(2.into());
    while let Some((lead, coeff)) = rest
        .terms()
        .iter()
        .max_by_key(|(m, _)| (m.e.min(m.f), *m))
        .map(|(m, c)| (*m, c.clone()))
    {
        let level = lead.e.min(lead.f);
        let degree = lead.degree();
        let (part, n) = match degree.signum() {
            1 => (UePart::Plus, (degree / 2) as u32),
            -1 => (UePart::Minus, (-degree / 2) as u32),
            _ => (UePart::Zero, 0),
        };
        let key = UeBasisKey { part, n, i: level, k: lead.h };
        let c = &coeff / num_traits::pow(two.clone(), level as usize);
        let element = build(&key, &mut powers);
        debug_assert_eq!(element.coefficient(&lead), num_traits::pow(two.clone(), level as usize));
        rest = &rest - &element.scale(&c);
        debug_assert!(rest.coefficient(&lead).is_zero());
        *out.entry(key).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, v: &mut Rational| !v.is_zero());
    Ok(out)
}

/// Inverse of [`ue_basis_decompose`].
pub fn ue_basis_reassemble(coords: &BTreeMap<UeBasisKey, Rational>) -> Usl2Element {
    let mut powers = LambdaPowers::new();
    let mut out = Usl2Element::zero();
    for (key, c) in coords {
        out = &out + &build(key, &mut powers).scale(c);
    }
    out
}

impl UeBasisKey {
    pub fn zero_part(i: u32, k: u32) -> Self {
        UeBasisKey { part: UePart::Zero, n: 0, i, k }
    }

    /// Leading PBW monomial used by the triangular solve.
    pub fn leading_monomial(&self) -> PbwMonomial {
        match self.part {
            UePart::Plus => PbwMonomial::new(2 * self.n + self.i, self.i, self.k),
            UePart::Zero => PbwMonomial::new(self.i, self.i, self.k),
            UePart::Minus => PbwMonomial::new(self.i, 2 * self.n + self.i, self.k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    #[test]
    fn h_cubed_is_a_single_coordinate() {
        let coords = ue_basis_decompose(&Usl2Element::pbw(0, 0, 3)).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&UeBasisKey::zero_part(0, 3)], int(1));
    }

    #[test]
    fn casimir_squared_is_a_single_coordinate() {
        let lam2 = casimir().pow(2);
        let coords = ue_basis_decompose(&lam2).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&UeBasisKey::zero_part(2, 0)], int(1));
    }

    #[test]
    fn odd_input_is_rejected() {
        assert_eq!(ue_basis_decompose(&Usl2Element::e()), Err(UeBasisError::NotEven(1)));
    }

    #[test]
    fn e2f2_round_trip() {
        let x = Usl2Element::pbw(2, 2, 0);
        let coords = ue_basis_decompose(&x).unwrap();
        assert!(coords.keys().all(|k| k.part == UePart::Zero));
        assert_eq!(coords[&UeBasisKey::zero_part(2, 0)], rat(1, 4));
        assert_eq!(ue_basis_reassemble(&coords), x);
    }

    #[test]
    fn mixed_degrees_round_trip() {
        let x = Usl2Element::from_terms([
            (PbwMonomial::new(3, 1, 2), rat(2, 3)),
            (PbwMonomial::new(1, 3, 0), int(-5)),
            (PbwMonomial::new(4, 0, 1), int(1)),
            (PbwMonomial::new(0, 0, 0), int(7)),
        ]);
        let coords = ue_basis_decompose(&x).unwrap();
        assert_eq!(ue_basis_reassemble(&coords), x);
        let key = UeBasisKey { part: UePart::Plus, n: 2, i: 0, k: 1 };
        assert_eq!(key.leading_monomial(), PbwMonomial::new(4, 0, 1));
    }
}
