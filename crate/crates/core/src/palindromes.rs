//! Palindromes: predicates, the sign-flipping involution θ, constructors,
//! retractions, enumeration, and the bounded exact palindromic-length
//! search.
//!
//! A palindrome is a reduced word that equals its own reversal. Equivalently
//! (and this equivalence is what most of the algorithms lean on), `w` is a
//! palindrome iff `θ(w) = w⁻¹`, where θ flips the sign of every letter.

use thiserror::Error;

use crate::bracket::{BoundSource, Bracket, PalBracket};
use crate::factor_search::{search_exact_k, SearchOutcome, SearchSpec};
use crate::quasihom::pal_lower_bound_from_delta;
use crate::whitehead::cyclic_reduce;
use crate::words::{Letter, Rank, Sign, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PalindromeError {
    #[error("the given center is not a palindrome")]
    CenterNotPalindrome,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// True iff the word reads the same in both directions. The empty word
/// counts as a palindrome (its palindromic length is 0).
pub fn is_palindrome(w: &Word) -> bool {
    let letters = w.letters();
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

/// The involution that inverts every generator: each letter's sign flips in
/// place. Preserves reducedness and length; `theta(theta(w)) = w`.
pub fn theta(w: &Word) -> Word {
    let letters = w.letters().iter().map(|l| l.inverse()).collect();
    Word::from_reduced_unchecked(w.rank(), letters)
}

/// `θ(u) · p · u⁻¹` for a palindrome `p`: always a palindrome, for any `u`.
/// With `p` empty this is the basic palindrome `θ(u)u⁻¹`.
pub fn palindromize(u: &Word, p: &Word) -> Result<Word, PalindromeError> {
    if !is_palindrome(p) {
        return Err(PalindromeError::CenterNotPalindrome);
    }
    let out = theta(u).multiply(p)?.multiply(&u.invert())?;
    debug_assert!(is_palindrome(&out));
    Ok(out)
}

/// The retraction killing the listed generators: deletes every letter whose
/// generator is in `kill`, then reduces. A group homomorphism; it takes
/// palindromes to palindromes.
pub fn retract(w: &Word, kill: &[u32]) -> Result<Word, WordError> {
    for &g in kill {
        if g == 0 {
            return Err(WordError::ZeroGenerator);
        }
        if g > w.rank().get() {
            return Err(WordError::LetterOutOfRank {
                gen: g,
                rank: w.rank().get(),
            });
        }
    }
    Word::reduce(
        w.rank(),
        w.letters()
            .iter()
            .filter(|l| !kill.contains(&l.gen()))
            .copied(),
    )
}

/// All reduced palindromes of length ≤ `max_len`, each exactly once, in
/// shortlex order (`x1 < x1^-1 < x2 < …`).
///
/// A palindrome of length L is freely determined by its first ⌈L/2⌉
/// letters: mirroring any reduced half-word about its end is automatically
/// reduced (the seam pairs a letter with itself for even L, and reverses
/// already-reduced adjacencies for odd L), so the generator walks reduced
/// half-words in lex order and mirrors them, with nothing to discard.
pub fn enumerate_palindromes(rank: Rank, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity(rank)];
    let mut half_word: Vec<Letter> = Vec::new();
    for len in 1..=max_len {
        gen_halves(rank, len, &mut half_word, &mut out);
        debug_assert!(half_word.is_empty());
    }
    out
}

fn gen_halves(rank: Rank, full_len: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
    let half = full_len.div_ceil(2);
    if cur.len() == half {
        let mut letters = cur.clone();
        let skip = full_len % 2; // odd length: mirror about the last letter
        letters.extend(cur.iter().rev().skip(skip));
        out.push(Word::from_reduced_unchecked(rank, letters));
        return;
    }
    for gen in 1..=rank.get() {
        for sign in [Sign::Plus, Sign::Minus] {
            let l = Letter::new(gen, sign).expect("positive generator index");
            if cur.last().is_some_and(|&t| t.is_inverse_of(l)) {
                continue;
            }
            cur.push(l);
            gen_halves(rank, full_len, cur, out);
            cur.pop();
        }
    }
}

/// Number of reduced palindromes of length ≤ `max_len` (including the empty
/// word), without enumerating them: length L has `2r(2r−1)^{⌈L/2⌉−1}` of
/// them. Saturates at `usize::MAX` on overflow.
pub fn palindrome_count(rank: Rank, max_len: usize) -> usize {
    let two_r = 2 * rank.get() as u128;
    let q = two_r - 1;
    let mut total: u128 = 1;
    for len in 1..=max_len {
        let half = len.div_ceil(2) as u32;
        let count = q
            .checked_pow(half - 1)
            .and_then(|p| p.checked_mul(two_r))
            .unwrap_or(u128::MAX);
        total = total.saturating_add(count);
    }
    total.try_into().unwrap_or(usize::MAX)
}

/// How many candidate palindromes the bounded search is willing to
/// enumerate before it stops claiming completeness.
const PAL_ENUM_BUDGET: usize = 50_000;

/// Longest factor length whose full palindrome enumeration stays within the
/// candidate budget (and within `cap`).
fn pal_enum_len(rank: Rank, cap: usize) -> usize {
    (0..=cap)
        .rev()
        .find(|&l| palindrome_count(rank, l) <= PAL_ENUM_BUDGET)
        .unwrap_or(0)
}

/// Sound pruning for two-palindrome remainders: if `v = p·q` with both
/// factors palindromes then `θ(v) = p⁻¹ v⁻¹ p`, so `θ(v)` and `v⁻¹` are
/// conjugate. Words failing that conjugacy test cannot split into two
/// palindromes of any length.
fn two_palindromes_conceivable(v: &Word) -> bool {
    conjugate(&theta(v), &v.invert())
}

fn conjugate(a: &Word, b: &Word) -> bool {
    let (core_a, _) = cyclic_reduce(a);
    let (core_b, _) = cyclic_reduce(b);
    if core_a.len() != core_b.len() {
        return false;
    }
    let m = core_a.len();
    if m == 0 {
        return true;
    }
    let xs = core_a.letters();
    let ys = core_b.letters();
    (0..m).any(|shift| (0..m).all(|i| xs[(i + shift) % m] == ys[i]))
}

/// Bounded exact search for palindromic length.
///
/// The returned bracket is always sound: its upper bound carries an explicit
/// witness, its lower bound is unconditional unless tagged
/// `ExhaustedSearch` (in which case it is relative to `factor_len_cap`).
/// Caps that are too small never produce a wrong answer — only an unknown
/// upper bound.
pub fn pal_length_bounded(w: &Word, max_k: usize, factor_len_cap: usize) -> PalBracket {
    let mut bracket = Bracket {
        lower: 0,
        lower_source: BoundSource::Trivial,
        upper: None,
        upper_source: None,
        witness: None,
        max_k,
        factor_len_cap,
        factor_enum_len: 0,
        ham_power: None,
    };
    if w.is_empty() {
        bracket.upper = Some(0);
        bracket.upper_source = Some(BoundSource::Witness);
        bracket.witness = Some(Vec::new());
        return bracket;
    }
    bracket.lower = 1;
    if is_palindrome(w) {
        // The word is its own witness, whatever the cap.
        bracket.upper = Some(1);
        bracket.upper_source = Some(BoundSource::Witness);
        bracket.witness = Some(vec![w.clone()]);
        return bracket;
    }
    bracket.lower = 2;
    let delta_bound = pal_lower_bound_from_delta(w);
    if delta_bound > bracket.lower {
        bracket.lower = delta_bound;
        bracket.lower_source = BoundSource::DeltaCertificate;
    }
    if max_k < 2 || bracket.lower > max_k {
        return bracket;
    }

    let enum_len = pal_enum_len(w.rank(), factor_len_cap);
    bracket.factor_enum_len = enum_len;
    let candidates: Vec<Word> = enumerate_palindromes(w.rank(), enum_len)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    let enumeration_complete = enum_len >= factor_len_cap;

    let is_factor = |v: &Word| !v.is_empty() && v.len() <= factor_len_cap && is_palindrome(v);
    let prune = |v: &Word, k_left: usize| k_left == 2 && !two_palindromes_conceivable(v);
    let spec = SearchSpec {
        candidates: &candidates,
        cap: factor_len_cap,
        is_factor: &is_factor,
        prune: &prune,
    };

    for k in bracket.lower..=max_k {
        match search_exact_k(&spec, w, k) {
            SearchOutcome::Found(factors) => {
                debug_assert_eq!(factors.len(), k);
                debug_assert!(factors.iter().all(is_palindrome));
                bracket.upper = Some(k);
                bracket.upper_source = Some(BoundSource::Witness);
                bracket.witness = Some(factors);
                break;
            }
            SearchOutcome::Exhausted => {
                if enumeration_complete {
                    bracket.lower = k + 1;
                    bracket.lower_source = BoundSource::ExhaustedSearch;
                }
            }
        }
    }
    bracket
}
