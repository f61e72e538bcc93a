//! Freely reduced words over a fixed finite free basis.
//!
//! `Word` is the universal currency of this crate: a freely reduced sequence
//! of signed generator letters together with the rank of the ambient basis.
//! All constructors reduce and validate, so every `Word` in circulation is
//! reduced; downstream algorithms (syllable decompositions, graph builds,
//! width searches) rely on that invariant without re-checking it.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Errors for word construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("generator index must be at least 1")]
    ZeroGenerator,
    #[error("letter x{gen} is out of range for rank {rank}")]
    LetterOutOfRank { gen: u32, rank: u32 },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("syllable exponent must be nonzero")]
    ZeroExponent,
    #[error("window of {count} syllables at {start} does not fit {available}")]
    WindowOutOfRange {
        start: usize,
        count: usize,
        available: usize,
    },
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("cannot embed a rank-{old} word into rank {new}")]
    EmbedBelowRank { old: u32, new: u32 },
}

/// Number of free generators. Always at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Rank, WordError> {
        if n == 0 {
            return Err(WordError::ZeroRank);
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of letters `x1, x1^-1, …, xn, xn^-1`, i.e. `2n`.
    pub fn letter_count(self) -> usize {
        2 * self.0 as usize
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sign of a letter: `Plus` is the generator itself, `Minus` its inverse.
///
/// `Plus < Minus` so that the derived letter order is
/// `x1 < x1^-1 < x2 < x2^-1 < …`, the order used everywhere shortlex output
/// is promised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A single signed generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    gen: u32,
    sign: Sign,
}

impl Letter {
    /// `gen` is 1-based; rank membership is checked when the letter enters a
    /// `Word`, not here.
    pub fn new(gen: u32, sign: Sign) -> Result<Letter, WordError> {
        if gen == 0 {
            return Err(WordError::ZeroGenerator);
        }
        Ok(Letter { gen, sign })
    }

    pub fn gen(self) -> u32 {
        self.gen
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flipped(),
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "x{}", self.gen),
            Sign::Minus => write!(f, "x{}^-1", self.gen),
        }
    }
}

/// Maximal power block of one generator. Consecutive syllables of a word
/// always carry distinct generators, and the exponent is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: u32,
    pub exponent: i64,
}

/// A freely reduced word in the free group of the given rank.
///
/// Equality and hashing include the rank: `x1` at rank 1 and `x1` at rank 2
/// are distinct values. The `Ord` impl is shortlex within a rank (length
/// first, then letterwise with `x1 < x1^-1 < x2 < …`), with the rank itself
/// as the outermost key so mixed collections still sort deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: Rank,
    letters: Vec<Letter>,
}

/// Push a letter onto a reduction stack, cancelling if it inverts the top.
pub(crate) fn reduce_push(stack: &mut Vec<Letter>, l: Letter) {
    match stack.last() {
        Some(&top) if top.is_inverse_of(l) => {
            stack.pop();
        }
        _ => stack.push(l),
    }
}

impl Word {
    /// The empty word (group identity) at the given rank.
    pub fn identity(rank: Rank) -> Word {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `x_gen`.
    pub fn generator(rank: Rank, gen: u32) -> Result<Word, WordError> {
        Word::reduce(rank, [Letter::new(gen, Sign::Plus)?])
    }

    /// Freely reduce a raw letter sequence. Idempotent on reduced input.
    pub fn reduce(
        rank: Rank,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Word, WordError> {
        let mut stack = Vec::new();
        for l in letters {
            if l.gen > rank.get() {
                return Err(WordError::LetterOutOfRank {
                    gen: l.gen,
                    rank: rank.get(),
                });
            }
            reduce_push(&mut stack, l);
        }
        Ok(Word {
            rank,
            letters: stack,
        })
    }

    /// Build a word from `(generator, exponent)` blocks. The blocks need not
    /// be merged or alternating; the result is reduced as usual.
    pub fn from_syllables(rank: Rank, syllables: &[(u32, i64)]) -> Result<Word, WordError> {
        let mut stack = Vec::new();
        for &(gen, exponent) in syllables {
            if exponent == 0 {
                return Err(WordError::ZeroExponent);
            }
            if gen == 0 {
                return Err(WordError::ZeroGenerator);
            }
            if gen > rank.get() {
                return Err(WordError::LetterOutOfRank {
                    gen,
                    rank: rank.get(),
                });
            }
            let sign = if exponent > 0 { Sign::Plus } else { Sign::Minus };
            let l = Letter { gen, sign };
            for _ in 0..exponent.unsigned_abs() {
                reduce_push(&mut stack, l);
            }
        }
        Ok(Word {
            rank,
            letters: stack,
        })
    }

    /// Wrap a letter sequence that is already known to be reduced.
    pub(crate) fn from_reduced_unchecked(rank: Rank, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|l| l.gen >= 1 && l.gen <= rank.get()));
        debug_assert!(letters.windows(2).all(|p| !p[0].is_inverse_of(p[1])));
        Word { rank, letters }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Product in the free group: concatenate, then cancel at the seam.
    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank.get(),
                right: other.rank.get(),
            });
        }
        let mut stack = self.letters.clone();
        for &l in &other.letters {
            reduce_push(&mut stack, l);
        }
        Ok(Word {
            rank: self.rank,
            letters: stack,
        })
    }

    /// Group inverse: letters reversed, each sign flipped. Involution.
    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Letters in reverse order with signs kept. A reduced word's reverse is
    /// automatically reduced. Involution.
    pub fn reverse(&self) -> Word {
        let letters: Vec<Letter> = self.letters.iter().rev().copied().collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Reinterpret at a larger rank (same letters).
    pub fn embed(&self, new_rank: Rank) -> Result<Word, WordError> {
        if new_rank < self.rank {
            return Err(WordError::EmbedBelowRank {
                old: self.rank.get(),
                new: new_rank.get(),
            });
        }
        Ok(Word {
            rank: new_rank,
            letters: self.letters.clone(),
        })
    }

    /// Maximal-power decomposition. Concatenating the blocks reproduces the
    /// word exactly.
    pub fn syllables(&self) -> Vec<Syllable> {
        let mut out: Vec<Syllable> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some(s) if s.gen == l.gen => {
                    // Same generator, and the word is reduced, so the sign
                    // matches the running exponent's sign.
                    s.exponent += l.sign.to_i64();
                }
                _ => out.push(Syllable {
                    gen: l.gen,
                    exponent: l.sign.to_i64(),
                }),
            }
        }
        out
    }

    /// `SL(w)`: the number of syllables.
    pub fn syllable_count(&self) -> usize {
        let mut count = 0;
        let mut prev_gen = 0;
        for &l in &self.letters {
            if l.gen != prev_gen {
                count += 1;
                prev_gen = l.gen;
            }
        }
        count
    }

    /// The word formed by `count` consecutive syllables starting at `start`,
    /// wrapping over the end of the syllable sequence when `cyclic`.
    pub fn syllable_window(
        &self,
        start: usize,
        count: usize,
        cyclic: bool,
    ) -> Result<Word, WordError> {
        let sylls = self.syllables();
        let n = sylls.len();
        let in_range = if cyclic {
            count <= n && start < n.max(1)
        } else {
            start.checked_add(count).is_some_and(|end| end <= n)
        };
        if !in_range {
            return Err(WordError::WindowOutOfRange {
                start,
                count,
                available: n,
            });
        }
        let picked: Vec<(u32, i64)> = (0..count)
            .map(|i| {
                let s = sylls[(start + i) % n];
                (s.gen, s.exponent)
            })
            .collect();
        Word::from_syllables(self.rank, &picked)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Canonical factor text: `x1^2 x2^-3`, with `^e` omitted for exponent 1
    /// (`x1`) and printed for every other exponent (`x1^-1`, `x1^3`). The
    /// empty word prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exponent == 1 {
                write!(f, "x{}", s.gen)?;
            } else {
                write!(f, "x{}^{}", s.gen, s.exponent)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn w(rank: u32, syllables: &[(u32, i64)]) -> Word {
        Word::from_syllables(r(rank), syllables).unwrap()
    }

    fn l(gen: u32, sign: Sign) -> Letter {
        Letter::new(gen, sign).unwrap()
    }

    #[test]
    fn reduce_cancels_inverse_pair() {
        let out = Word::reduce(r(1), [l(1, Sign::Plus), l(1, Sign::Minus)]).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn reduce_cancels_nested() {
        let out = Word::reduce(
            r(2),
            [
                l(1, Sign::Plus),
                l(2, Sign::Plus),
                l(2, Sign::Minus),
                l(1, Sign::Minus),
            ],
        )
        .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn reduce_keeps_reduced_input() {
        let out = Word::reduce(
            r(2),
            [
                l(1, Sign::Plus),
                l(1, Sign::Plus),
                l(2, Sign::Plus),
                l(2, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(out, w(2, &[(1, 2), (2, 2)]));
        assert_eq!(Word::reduce(r(2), out.letters().to_vec()).unwrap(), out);
    }

    #[test]
    fn reduce_rejects_out_of_rank() {
        let err = Word::reduce(r(1), [l(2, Sign::Plus)]).unwrap_err();
        assert_eq!(err, WordError::LetterOutOfRank { gen: 2, rank: 1 });
    }

    #[test]
    fn multiply_cancels_suffix() {
        let a = w(2, &[(1, 1), (2, 1)]);
        let b = w(2, &[(2, -1)]);
        assert_eq!(a.multiply(&b).unwrap(), w(2, &[(1, 1)]));
    }

    #[test]
    fn multiply_full_cancellation() {
        let a = w(1, &[(1, 1)]);
        assert!(a.multiply(&a.invert()).unwrap().is_empty());
    }

    #[test]
    fn multiply_no_cancellation() {
        let a = w(2, &[(1, 2)]);
        let b = w(2, &[(2, 3)]);
        assert_eq!(a.multiply(&b).unwrap(), w(2, &[(1, 2), (2, 3)]));
    }

    #[test]
    fn multiply_rejects_rank_mismatch() {
        let a = w(1, &[(1, 1)]);
        let b = w(2, &[(1, 1)]);
        assert_eq!(
            a.multiply(&b).unwrap_err(),
            WordError::RankMismatch { left: 1, right: 2 }
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(2, &[(1, 1), (2, -1)]).invert(), w(2, &[(2, 1), (1, -1)]));
        assert!(Word::identity(r(2)).invert().is_empty());
        assert_eq!(w(2, &[(1, 2), (2, 3)]).invert(), w(2, &[(2, -3), (1, -2)]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w(2, &[(1, 1), (2, 1)]).reverse(), w(2, &[(2, 1), (1, 1)]));
        // A symmetric word is its own reverse.
        let pal = w(3, &[(1, -2), (2, 3), (3, -4), (2, 3), (1, -2)]);
        assert_eq!(pal.reverse(), pal);
        assert!(Word::identity(r(2)).reverse().is_empty());
    }

    #[test]
    fn involutions_commute() {
        let v = w(3, &[(1, 2), (3, -1), (2, 4), (1, -1)]);
        assert_eq!(v.invert().invert(), v);
        assert_eq!(v.reverse().reverse(), v);
        assert_eq!(v.invert().reverse(), v.reverse().invert());
    }

    #[test]
    fn syllables_of_symmetric_word() {
        let v = w(3, &[(1, 2), (2, -3), (3, 4), (2, -3), (1, 2)]);
        let sylls: Vec<(u32, i64)> = v.syllables().iter().map(|s| (s.gen, s.exponent)).collect();
        assert_eq!(sylls, vec![(1, 2), (2, -3), (3, 4), (2, -3), (1, 2)]);
        assert_eq!(v.syllable_count(), 5);
    }

    #[test]
    fn syllables_of_empty_word() {
        assert!(Word::identity(r(2)).syllables().is_empty());
        assert_eq!(Word::identity(r(2)).syllable_count(), 0);
    }

    #[test]
    fn syllables_of_doubled_square_block() {
        let u = w(2, &[(1, 2), (2, 2), (1, 2), (2, 2)]);
        let sylls: Vec<(u32, i64)> = u.syllables().iter().map(|s| (s.gen, s.exponent)).collect();
        assert_eq!(sylls, vec![(1, 2), (2, 2), (1, 2), (2, 2)]);
        assert_eq!(u.syllable_count(), 4);
    }

    #[test]
    fn syllable_roundtrip() {
        let v = w(3, &[(1, 2), (2, -3), (3, 4), (2, -3), (1, 2)]);
        let blocks: Vec<(u32, i64)> = v.syllables().iter().map(|s| (s.gen, s.exponent)).collect();
        assert_eq!(Word::from_syllables(r(3), &blocks).unwrap(), v);
    }

    #[test]
    fn linear_window() {
        let u = w(2, &[(1, 2), (2, 2), (1, 2), (2, 2)]);
        assert_eq!(
            u.syllable_window(1, 2, false).unwrap(),
            w(2, &[(2, 2), (1, 2)])
        );
    }

    #[test]
    fn cyclic_window_wraps() {
        let u = w(2, &[(1, 2), (2, 2), (1, 2), (2, 2)]);
        assert_eq!(
            u.syllable_window(3, 2, true).unwrap(),
            w(2, &[(2, 2), (1, 2)])
        );
    }

    #[test]
    fn identity_window() {
        let v = w(3, &[(1, 2), (2, -3), (3, 4)]);
        assert_eq!(v.syllable_window(0, 3, false).unwrap(), v);
    }

    #[test]
    fn window_out_of_range() {
        let v = w(3, &[(1, 2), (2, -3), (3, 4)]);
        assert_eq!(
            v.syllable_window(2, 2, false).unwrap_err(),
            WordError::WindowOutOfRange {
                start: 2,
                count: 2,
                available: 3
            }
        );
        assert!(v.syllable_window(0, 4, true).is_err());
    }

    #[test]
    fn shortlex_order() {
        let mut words = [w(2, &[(2, 1)]),
            w(2, &[(1, -1)]),
            Word::identity(r(2)),
            w(2, &[(1, 2)]),
            w(2, &[(1, 1)]),
            w(2, &[(1, 1), (2, 1)])];
        words.sort();
        let shown: Vec<String> = words.iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, vec!["", "x1", "x1^-1", "x2", "x1^2", "x1 x2"]);
    }

    #[test]
    fn display_canonical_text() {
        assert_eq!(w(3, &[(1, 2), (2, -3)]).to_string(), "x1^2 x2^-3");
        assert_eq!(w(2, &[(1, 1)]).to_string(), "x1");
        assert_eq!(w(2, &[(1, -1)]).to_string(), "x1^-1");
        assert_eq!(Word::identity(r(2)).to_string(), "");
    }

    #[test]
    fn embed_checks_rank() {
        let v = w(2, &[(1, 1), (2, -1)]);
        assert_eq!(v.embed(r(3)).unwrap().rank(), r(3));
        assert!(w(2, &[(2, 1)]).embed(r(1)).is_err());
    }

    #[test]
    fn from_syllables_rejects_zero_exponent() {
        assert_eq!(
            Word::from_syllables(r(2), &[(1, 0)]).unwrap_err(),
            WordError::ZeroExponent
        );
    }
}
