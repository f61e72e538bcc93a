//! Deterministic sampling for the verification suites. All randomness comes
//! from the caller's seeded generator — no ambient entropy anywhere.

use freewidth::autos::{Automorphism, ElementaryAut};
use freewidth::palindromes::palindromize;
use freewidth::quasihom::{Factor, FpWord};
use freewidth::whitehead::enumerate_whitehead_autos;
use freewidth::words::{Letter, Rank, Sign, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// The per-suite generator: one fixed stream per (seed, salt) pair.
pub fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

pub fn letter(rng: &mut impl Rng, rank: Rank) -> Letter {
    let gen = rng.gen_range(1..=rank.get());
    let sign = if rng.gen::<bool>() { Sign::Plus } else { Sign::Minus };
    Letter::new(gen, sign).expect("index is positive")
}

/// A freely reduced word of length at most `max_len` (uniform raw length,
/// then reduction).
pub fn word(rng: &mut impl Rng, rank: Rank, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Letter> = (0..len).map(|_| letter(rng, rank)).collect();
    Word::reduce(rank, letters).expect("sampled letters are in rank")
}

/// A palindrome built by mirroring a sampled word around a sampled center
/// (empty or a single generator).
pub fn palindrome(rng: &mut impl Rng, rank: Rank, max_half: usize) -> Word {
    let u = word(rng, rank, max_half);
    let center = if rng.gen::<bool>() {
        Word::identity(rank)
    } else {
        let gen = rng.gen_range(1..=rank.get());
        Word::generator(rank, gen).expect("index is in rank")
    };
    palindromize(&u, &center).expect("single-letter centers are palindromes")
}

/// A factored automorphism: a bounded product of elementary factors, each
/// either a Whitehead automorphism or a short inner one.
pub fn automorphism(rng: &mut impl Rng, rank: Rank, max_factors: usize) -> Automorphism {
    let whiteheads = enumerate_whitehead_autos(rank);
    let count = rng.gen_range(1..=max_factors);
    let factors: Vec<ElementaryAut> = (0..count)
        .map(|_| {
            if rng.gen_range(0..10) < 7 {
                let i = rng.gen_range(0..whiteheads.len());
                ElementaryAut::Whitehead(whiteheads[i].clone())
            } else {
                let len = rng.gen_range(1..=3);
                let letters: Vec<Letter> = (0..len).map(|_| letter(rng, rank)).collect();
                ElementaryAut::Inner(Word::reduce(rank, letters).expect("letters are in rank"))
            }
        })
        .collect();
    Automorphism::from_factors(rank, factors).expect("factors share the rank")
}

/// A reduced free-product word with at most `max_syllables` syllables and
/// elements in `[-max_element, max_element] \ {0}`.
pub fn fp_word(rng: &mut impl Rng, max_syllables: usize, max_element: i64) -> FpWord {
    let count = rng.gen_range(0..=max_syllables);
    let raw: Vec<(Factor, i64)> = (0..count)
        .map(|_| {
            let factor = if rng.gen::<bool>() { Factor::A } else { Factor::B };
            let magnitude = rng.gen_range(1..=max_element);
            let element = if rng.gen::<bool>() { magnitude } else { -magnitude };
            (factor, element)
        })
        .collect();
    FpWord::from_syllables(&raw).expect("elements are nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let r3 = Rank::new(3).unwrap();
        let mut a = rng(7, 99);
        let mut b = rng(7, 99);
        for _ in 0..50 {
            assert_eq!(word(&mut a, r3, 24), word(&mut b, r3, 24));
        }
        let mut c = rng(8, 99);
        let differs = (0..50).any(|_| word(&mut a, r3, 24) != word(&mut c, r3, 24));
        assert!(differs);
    }

    #[test]
    fn sampled_palindromes_are_palindromes() {
        let r2 = Rank::new(2).unwrap();
        let mut g = rng(1, 5);
        for _ in 0..200 {
            assert!(freewidth::palindromes::is_palindrome(&palindrome(&mut g, r2, 10)));
        }
    }

    #[test]
    fn sampled_automorphisms_audit() {
        let r2 = Rank::new(2).unwrap();
        let mut g = rng(1, 6);
        for _ in 0..50 {
            let a = automorphism(&mut g, r2, 8);
            assert!(a.audit());
            let inv = a.inverse();
            let w = word(&mut g, r2, 12);
            assert_eq!(inv.apply(&a.apply(&w).unwrap()).unwrap(), w);
        }
    }
}
