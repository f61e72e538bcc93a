//! The syllable-profile statistic Δ and its certificates.
//!
//! For a reduced word with syllable exponents `e_1, …, e_m` (absolute
//! values), `Δ(w) = Σ sign(|e_{j+1}| − |e_j|)` over consecutive syllables.
//! Δ vanishes on palindromes, is antisymmetric under inversion, and its
//! defect `Δ(uw) − Δ(u) − Δ(w)` is bounded by 6 in absolute value. Together
//! these give a cheap, sound lower bound on how many palindromes are needed
//! to write a word: a product of k palindromes always has `Δ ≤ 6k − 6`.
//!
//! The same construction works over a free product of two infinite cyclic
//! factors once a degree function replaces the absolute exponent; the
//! `Fp*` types model that.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::words::{Word, WordError};

/// `Δ(w)`: sum of `sign(|e_{j+1}| − |e_j|)` over consecutive syllable
/// exponents. Zero on the empty word and on single syllables.
pub fn delta(w: &Word) -> i64 {
    let mags: Vec<i64> = w
        .syllables()
        .iter()
        .map(|s| s.exponent.unsigned_abs() as i64)
        .collect();
    mags.windows(2).map(|p| (p[1] - p[0]).signum()).sum()
}

/// `Δ(uw) − Δ(u) − Δ(w)`. Always in `[-6, 6]`.
pub fn delta_defect(u: &Word, w: &Word) -> Result<i64, WordError> {
    let product = u.multiply(w)?;
    Ok(delta(&product) - delta(u) - delta(w))
}

/// Least `k ≥ 1` with `6k − 6 ≥ Δ(w)`, i.e. `max(1, ⌈(Δ(w)+6)/6⌉)`; zero for
/// the empty word. Since a product of k palindromes has `Δ ≤ 6k − 6`, this
/// is a sound lower bound on palindromic length.
pub fn pal_lower_bound_from_delta(w: &Word) -> usize {
    if w.is_empty() {
        return 0;
    }
    let d = delta(w);
    // ⌈(d+6)/6⌉ computed euclideanly so negative Δ rounds correctly.
    let k = (d + 11).div_euclid(6);
    k.max(1) as usize
}

/// The rank-2 word `x1 x2 x1^2 x2^2 … x1^n x2^n`, which has `Δ = n − 1`.
pub fn pal_witness(n: u32) -> Result<Word, WordError> {
    if n == 0 {
        return Err(WordError::ZeroIndex);
    }
    let rank = crate::words::Rank::new(2)?;
    let mut blocks = Vec::with_capacity(2 * n as usize);
    for i in 1..=n as i64 {
        blocks.push((1, i));
        blocks.push((2, i));
    }
    Word::from_syllables(rank, &blocks)
}

/// One of the two infinite cyclic free factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    A,
    B,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::A => write!(f, "a"),
            Factor::B => write!(f, "b"),
        }
    }
}

/// Errors for the free-product model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpError {
    #[error("free-product syllable element must be nonzero")]
    ZeroElement,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("index must be at least 1")]
    ZeroIndex,
}

/// A syllable of the free product: a nonzero element of one factor,
/// the factor groups being modeled as infinite cyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpSyllable {
    pub factor: Factor,
    pub element: i64,
}

/// A reduced word of the free product: syllables with alternating factors.
/// The constructor normalizes (merges same-factor neighbours, drops zeros),
/// so the invariant always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FpWord {
    syllables: Vec<FpSyllable>,
}

impl FpWord {
    pub fn identity() -> FpWord {
        FpWord::default()
    }

    /// Normalize a raw syllable list: zero elements are rejected, adjacent
    /// same-factor syllables merge by addition, and merges that reach zero
    /// cancel cascadingly.
    pub fn from_syllables(raw: &[(Factor, i64)]) -> Result<FpWord, FpError> {
        let mut stack: Vec<FpSyllable> = Vec::new();
        for &(factor, element) in raw {
            if element == 0 {
                return Err(FpError::ZeroElement);
            }
            push_merge(&mut stack, FpSyllable { factor, element });
        }
        Ok(FpWord { syllables: stack })
    }

    pub fn syllables(&self) -> &[FpSyllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Concatenate, merging boundary syllables in the same factor and
    /// cancelling zeros, cascading inward.
    pub fn multiply(&self, other: &FpWord) -> FpWord {
        let mut stack = self.syllables.clone();
        for &s in &other.syllables {
            push_merge(&mut stack, s);
        }
        FpWord { syllables: stack }
    }

    pub fn invert(&self) -> FpWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| FpSyllable {
                factor: s.factor,
                element: -s.element,
            })
            .collect();
        FpWord { syllables }
    }
}

fn push_merge(stack: &mut Vec<FpSyllable>, s: FpSyllable) {
    match stack.last_mut() {
        Some(top) if top.factor == s.factor => {
            top.element += s.element;
            if top.element == 0 {
                stack.pop();
            }
        }
        _ => stack.push(s),
    }
}

impl fmt::Display for FpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", s.factor, s.element)?;
        }
        Ok(())
    }
}

/// Degree of a factor element; must always be at least 1.
pub trait DegreeMap {
    fn degree(&self, factor: Factor, element: i64) -> u64;
}

/// The default degree: absolute value of the element. Surjects onto the
/// positive integers from either factor.
#[derive(Debug, Clone, Copy, Default)]
pub struct AbsDegree;

impl DegreeMap for AbsDegree {
    fn degree(&self, _factor: Factor, element: i64) -> u64 {
        element.unsigned_abs()
    }
}

/// An overridable degree table for experimentation, falling back to the
/// absolute value where no entry is set. Entries must be at least 1.
#[derive(Debug, Clone, Default)]
pub struct DegreeTable {
    overrides: HashMap<(Factor, i64), u64>,
}

impl DegreeTable {
    pub fn new() -> DegreeTable {
        DegreeTable::default()
    }

    pub fn set(&mut self, factor: Factor, element: i64, degree: u64) -> Result<(), FpError> {
        if element == 0 {
            return Err(FpError::ZeroElement);
        }
        if degree == 0 {
            return Err(FpError::ZeroDegree);
        }
        self.overrides.insert((factor, element), degree);
        Ok(())
    }
}

impl DegreeMap for DegreeTable {
    fn degree(&self, factor: Factor, element: i64) -> u64 {
        self.overrides
            .get(&(factor, element))
            .copied()
            .unwrap_or_else(|| AbsDegree.degree(factor, element))
    }
}

/// Free-product Δ with an explicit degree function:
/// `Σ sign(d(v_{j+1}) − d(v_j))` over consecutive syllables.
pub fn fp_delta_with(g: &FpWord, degrees: &impl DegreeMap) -> i64 {
    let d: Vec<i64> = g
        .syllables
        .iter()
        .map(|s| degrees.degree(s.factor, s.element) as i64)
        .collect();
    d.windows(2).map(|p| (p[1] - p[0]).signum()).sum()
}

/// Free-product Δ with the default absolute-value degree.
pub fn fp_delta(g: &FpWord) -> i64 {
    fp_delta_with(g, &AbsDegree)
}

/// The alternating word `a_1 b_1 a_2 b_2 … a_n b_n` with `d(a_i) = d(b_i) = i`,
/// which has `fp_delta = n − 1`.
pub fn fp_witness(n: u32) -> Result<FpWord, FpError> {
    if n == 0 {
        return Err(FpError::ZeroIndex);
    }
    let mut raw = Vec::with_capacity(2 * n as usize);
    for i in 1..=n as i64 {
        raw.push((Factor::A, i));
        raw.push((Factor::B, i));
    }
    FpWord::from_syllables(&raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Rank;

    fn w(rank: u32, syllables: &[(u32, i64)]) -> Word {
        Word::from_syllables(Rank::new(rank).unwrap(), syllables).unwrap()
    }

    #[test]
    fn delta_worked_example_is_zero() {
        // Exponent magnitudes 2, 3, 4, 3, 2: −1 −1 +1 +1 = 0 read backwards,
        // i.e. sign(3−2) + sign(4−3) + sign(3−4) + sign(2−3) = 0.
        assert_eq!(delta(&w(3, &[(1, 2), (2, -3), (3, 4), (2, -3), (1, 2)])), 0);
    }

    #[test]
    fn delta_zero_on_flat_profile() {
        assert_eq!(delta(&w(3, &[(1, 1), (2, 1), (3, 1)])), 0);
    }

    #[test]
    fn delta_zero_on_single_syllable_and_empty() {
        assert_eq!(delta(&w(1, &[(1, 5)])), 0);
        assert_eq!(delta(&Word::identity(Rank::new(2).unwrap())), 0);
    }

    #[test]
    fn delta_of_witness_family() {
        assert_eq!(delta(&pal_witness(1).unwrap()), 0);
        assert_eq!(delta(&pal_witness(3).unwrap()), 2);
        assert_eq!(
            pal_witness(4).unwrap(),
            w(2, &[(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
        );
        assert_eq!(delta(&pal_witness(4).unwrap()), 3);
        assert_eq!(delta(&pal_witness(50).unwrap()), 49);
    }

    #[test]
    fn pal_witness_rejects_zero() {
        assert_eq!(pal_witness(0).unwrap_err(), WordError::ZeroIndex);
    }

    #[test]
    fn defect_examples() {
        let a = w(2, &[(1, 1)]);
        assert_eq!(delta_defect(&a, &a.invert()).unwrap(), 0);
        let u = w(2, &[(1, 1), (2, 2), (1, 3)]);
        let v = w(2, &[(1, -3), (2, 5)]);
        let d = delta_defect(&u, &v).unwrap();
        assert!((-6..=6).contains(&d));
    }

    #[test]
    fn defect_rejects_rank_mismatch() {
        assert!(delta_defect(&w(1, &[(1, 1)]), &w(2, &[(2, 1)])).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        // Any symmetric word has Δ = 0, hence bound 1.
        assert_eq!(pal_lower_bound_from_delta(&w(2, &[(1, 2)])), 1);
        // Δ = 12 forces at least 3 factors; Δ = 6 forces 2.
        assert_eq!(pal_lower_bound_from_delta(&pal_witness(13).unwrap()), 3);
        assert_eq!(pal_lower_bound_from_delta(&pal_witness(7).unwrap()), 2);
        assert_eq!(
            pal_lower_bound_from_delta(&Word::identity(Rank::new(2).unwrap())),
            0
        );
    }

    #[test]
    fn lower_bound_handles_negative_delta() {
        // Descending profile: Δ < 0, bound stays at the trivial 1.
        let v = w(2, &[(1, 3), (2, 2), (1, 1)]);
        assert!(delta(&v) < 0);
        assert_eq!(pal_lower_bound_from_delta(&v), 1);
    }

    #[test]
    fn fp_multiply_cancels() {
        let g = FpWord::from_syllables(&[(Factor::A, 1)]).unwrap();
        assert!(g.multiply(&g.invert()).is_empty());
    }

    #[test]
    fn fp_multiply_cascades() {
        let g = FpWord::from_syllables(&[(Factor::A, 1), (Factor::B, 2)]).unwrap();
        let h = FpWord::from_syllables(&[(Factor::B, -2), (Factor::A, 3)]).unwrap();
        assert_eq!(
            g.multiply(&h),
            FpWord::from_syllables(&[(Factor::A, 4)]).unwrap()
        );
    }

    #[test]
    fn fp_multiply_alternates() {
        let g = FpWord::from_syllables(&[(Factor::A, 1)]).unwrap();
        let h = FpWord::from_syllables(&[(Factor::B, 1)]).unwrap();
        let gh = g.multiply(&h);
        assert_eq!(gh.syllables().len(), 2);
    }

    #[test]
    fn fp_delta_witness_values() {
        assert_eq!(fp_delta(&fp_witness(1).unwrap()), 0);
        assert_eq!(fp_delta(&fp_witness(2).unwrap()), 1);
        assert_eq!(fp_delta(&fp_witness(3).unwrap()), 2);
        assert_eq!(fp_delta(&fp_witness(10).unwrap()), 9);
    }

    #[test]
    fn fp_delta_zero_on_single_syllable() {
        assert_eq!(
            fp_delta(&FpWord::from_syllables(&[(Factor::A, 5)]).unwrap()),
            0
        );
    }

    #[test]
    fn fp_delta_zero_on_symmetric_degree_sequences() {
        // Brute force: all alternating words up to 8 syllables whose degree
        // sequence is symmetric have fp_delta = 0. Degrees drawn from 1..=3.
        for len in 0..=8usize {
            let mut counters = vec![0u8; len];
            loop {
                let degrees: Vec<i64> = counters.iter().map(|&c| c as i64 + 1).collect();
                if degrees.iter().eq(degrees.iter().rev()) {
                    let raw: Vec<(Factor, i64)> = degrees
                        .iter()
                        .enumerate()
                        .map(|(i, &d)| (if i % 2 == 0 { Factor::A } else { Factor::B }, d))
                        .collect();
                    let g = FpWord::from_syllables(&raw).unwrap();
                    assert_eq!(fp_delta(&g), 0, "degrees {degrees:?}");
                }
                // Odometer over degree choices.
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    counters[i] += 1;
                    if counters[i] < 3 {
                        break;
                    }
                    counters[i] = 0;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn degree_table_overrides() {
        let mut table = DegreeTable::new();
        table.set(Factor::A, 2, 7).unwrap();
        assert_eq!(table.degree(Factor::A, 2), 7);
        assert_eq!(table.degree(Factor::A, -2), 2);
        assert_eq!(table.degree(Factor::B, 2), 2);
        assert!(table.set(Factor::A, 1, 0).is_err());
        let g = FpWord::from_syllables(&[(Factor::A, 2), (Factor::B, 2)]).unwrap();
        assert_eq!(fp_delta(&g), 0);
        assert_eq!(fp_delta_with(&g, &table), -1);
    }

    #[test]
    fn fp_witness_rejects_zero() {
        assert_eq!(fp_witness(0).unwrap_err(), FpError::ZeroIndex);
    }

    #[test]
    fn fp_rejects_zero_element() {
        assert_eq!(
            FpWord::from_syllables(&[(Factor::A, 0)]).unwrap_err(),
            FpError::ZeroElement
        );
    }
}
