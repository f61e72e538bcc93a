//! Independent brute-force oracles used to cross-check the library's
//! bounded searches. These deliberately share no search machinery with the
//! library: the palindromic one works by forward closure of a product set,
//! the primitive one by filtering an exhaustive word enumeration.

use std::collections::HashSet;

use freewidth::palindromes::{enumerate_palindromes, is_palindrome};
use freewidth::whitehead::is_primitive;
use freewidth::words::{Letter, Rank, Sign, Word};

/// Packed form of a rank-2 word of length ≤ 31: two bits per letter under
/// a leading marker bit, so distinct words get distinct codes.
fn encode2(w: &Word) -> u64 {
    debug_assert!(w.rank().get() == 2 && w.len() <= 31);
    w.letters().iter().fold(1u64, |acc, l| {
        let code = ((l.gen() - 1) << 1) as u64 | (l.sign() == Sign::Minus) as u64;
        (acc << 2) | code
    })
}

/// Closure-based palindromic-length oracle over F₂: the set of products of
/// two nonempty palindromes of length ≤ `cap` is materialized once, and
/// membership queries answer lengths up to 4.
pub struct PalClosure {
    cap: usize,
    pals: Vec<Word>,
    two_products: HashSet<u64>,
}

impl PalClosure {
    pub fn new(cap: usize) -> PalClosure {
        let rank = Rank::new(2).expect("two is a valid rank");
        let pals: Vec<Word> = enumerate_palindromes(rank, cap)
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        let mut two_products = HashSet::new();
        for p in &pals {
            for q in &pals {
                two_products.insert(encode2(&p.multiply(q).expect("same rank")));
            }
        }
        PalClosure {
            cap,
            pals,
            two_products,
        }
    }

    /// Minimal number of nonempty palindromic factors of length ≤ cap whose
    /// product is `w`, if that number is at most `max_k` (≤ 4).
    pub fn min_factors(&self, w: &Word, max_k: usize) -> Option<usize> {
        assert!(w.rank().get() == 2, "the closure oracle is rank-2 only");
        assert!(max_k <= 4, "the closure oracle answers up to four factors");
        if w.is_empty() {
            return Some(0);
        }
        if max_k >= 1 && w.len() <= self.cap && is_palindrome(w) {
            return Some(1);
        }
        if max_k >= 2 && self.two_products.contains(&encode2(w)) {
            return Some(2);
        }
        if max_k >= 3 {
            for p in &self.pals {
                let rest = p.invert().multiply(w).expect("same rank");
                if self.two_products.contains(&encode2(&rest)) {
                    return Some(3);
                }
            }
        }
        if max_k >= 4 {
            for p in &self.pals {
                let rest = p.invert().multiply(w).expect("same rank");
                for q in &self.pals {
                    let rest2 = q.invert().multiply(&rest).expect("same rank");
                    if self.two_products.contains(&encode2(&rest2)) {
                        return Some(4);
                    }
                }
            }
        }
        None
    }
}

/// Every reduced word of length ≤ `max_len`, each exactly once, in
/// depth-first letter order.
pub fn all_reduced_words(rank: Rank, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    walk(rank, max_len, &mut stack, &mut out);
    out
}

/// Every primitive element of length ≤ `max_len`, found by running the
/// Whitehead primitivity test over all reduced words, shortlex sorted.
pub fn primitives_by_filter(rank: Rank, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = all_reduced_words(rank, max_len)
        .into_iter()
        .filter(is_primitive)
        .collect();
    out.sort();
    out
}

fn walk(rank: Rank, max_len: usize, stack: &mut Vec<Letter>, out: &mut Vec<Word>) {
    out.push(Word::reduce(rank, stack.iter().copied()).expect("letters are in rank"));
    if stack.len() == max_len {
        return;
    }
    for gen in 1..=rank.get() {
        for sign in [Sign::Plus, Sign::Minus] {
            let l = Letter::new(gen, sign).expect("index is positive");
            if stack.last().is_some_and(|&t| t.is_inverse_of(l)) {
                continue;
            }
            stack.push(l);
            walk(rank, max_len, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use freewidth::palindromes::pal_length_bounded;

    fn parse(text: &str) -> Word {
        crate::wordtext::parse(text, Rank::new(2).unwrap()).unwrap()
    }

    #[test]
    fn closure_oracle_small_answers() {
        let oracle = PalClosure::new(6);
        assert_eq!(oracle.min_factors(&parse(""), 4), Some(0));
        assert_eq!(oracle.min_factors(&parse("x1 x2 x1"), 4), Some(1));
        assert_eq!(oracle.min_factors(&parse("x1 x2"), 4), Some(2));
        // The mirrored double square needs three palindromic factors.
        assert_eq!(oracle.min_factors(&parse("x1 x2 x1^2 x2^2"), 4), Some(3));
    }

    #[test]
    fn closure_oracle_agrees_with_the_bracket_search_on_short_words() {
        let oracle = PalClosure::new(8);
        for w in all_reduced_words(Rank::new(2).unwrap(), 4) {
            let bracket = pal_length_bounded(&w, 4, 8);
            assert!(bracket.is_exact(), "inexact for {w}");
            assert_eq!(oracle.min_factors(&w, 4), bracket.upper, "word {w}");
        }
    }

    #[test]
    fn filter_enumeration_matches_orbit_enumeration() {
        let rank = Rank::new(2).unwrap();
        assert_eq!(
            primitives_by_filter(rank, 4),
            freewidth::widths::enumerate_primitives(rank, 4).unwrap()
        );
    }
}
