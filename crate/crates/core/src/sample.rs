//! Random elements for randomized checks. Callers supply the RNG, so runs
//! are reproducible from a seed.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::Rng;

use crate::freealg::{FreePoly, Word};
use crate::linalg::{rat, Rational};
use crate::usl2::{PbwMonomial, Usl2Element};

/// Shape of random elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleShape {
    pub max_terms: usize,
    /// Bound on each PBW exponent, or on free-algebra word length.
    pub max_exponent: u32,
    /// Numerators are drawn from `-max_numerator..=max_numerator`.
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for SampleShape {
    fn default() -> Self {
        SampleShape { max_terms: 4, max_exponent: 2, max_numerator: 5, max_denominator: 3 }
    }
}

fn coefficient<R: Rng + ?Sized>(rng: &mut R, shape: &SampleShape) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-shape.max_numerator..=shape.max_numerator);
    }
    rat(n, rng.gen_range(1..=shape.max_denominator))
}

/// A nonzero-term element of `U(sl2)` (terms may still cancel).
pub fn random_usl2<R: Rng + ?Sized>(rng: &mut R, shape: &SampleShape) -> Usl2Element {
    let count = rng.gen_range(1..=shape.max_terms);
    let terms: Vec<(PbwMonomial, Rational)> = (0..count)
        .map(|_| {
            let m = PbwMonomial::new(
                rng.gen_range(0..=shape.max_exponent),
                rng.gen_range(0..=shape.max_exponent),
                rng.gen_range(0..=shape.max_exponent),
            );
            (m, coefficient(rng, shape))
        })
        .collect();
    Usl2Element::from_terms(terms)
}

/// A random polynomial over `alphabet` with words of length at most
/// `max_exponent`.
pub fn random_free<R: Rng + ?Sized>(rng: &mut R, alphabet: &Arc<[char]>, shape: &SampleShape) -> FreePoly {
    let count = rng.gen_range(1..=shape.max_terms);
    let size = alphabet.len() as u8;
    (0..count).fold(FreePoly::zero(alphabet.clone()), |acc, _| {
        let len = rng.gen_range(0..=shape.max_exponent);
        let word = Word((0..len).map(|_| rng.gen_range(0..size)).collect());
        &acc + &FreePoly::word(alphabet.clone(), word, coefficient(rng, shape))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_samples_repeat() {
        let shape = SampleShape::default();
        let a = random_usl2(&mut ChaCha8Rng::seed_from_u64(7), &shape);
        let b = random_usl2(&mut ChaCha8Rng::seed_from_u64(7), &shape);
        assert_eq!(a, b);
        let alphabet: Arc<[char]> = Arc::from(&['A', 'B'][..]);
        let p = random_free(&mut ChaCha8Rng::seed_from_u64(3), &alphabet, &shape);
        assert!(p.degree() <= 2);
    }
}
