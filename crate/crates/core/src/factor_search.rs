//! Bounded factorization search shared by the palindromic- and
//! primitive-length computations.
//!
//! The search asks: can `w` be written as a product of exactly `k` nonempty
//! factors, every factor no longer than `cap`, where all factors but the
//! last are drawn from a pre-enumerated candidate list and the last may be
//! anything passing the factor predicate? Candidates at each node are tried
//! in order of longest shared prefix with the remaining word (ties broken
//! shortlex), which reaches witnesses quickly and keeps results
//! deterministic.

use std::collections::HashSet;

use crate::words::Word;

pub(crate) struct SearchSpec<'a> {
    /// Candidate factors for every position except the last: nonempty,
    /// shortlex-sorted, each of length at most the enumeration budget.
    pub candidates: &'a [Word],
    /// Hard cap on every factor's length.
    pub cap: usize,
    /// Whether a word may close the factorization: the defining predicate
    /// together with nonemptiness and the length cap.
    pub is_factor: &'a dyn Fn(&Word) -> bool,
    /// Sound pruning: may return true only when the remainder provably has
    /// no factorization into `k_left` factors of any length.
    pub prune: &'a dyn Fn(&Word, usize) -> bool,
}

pub(crate) enum SearchOutcome {
    Found(Vec<Word>),
    Exhausted,
}

pub(crate) fn search_exact_k(spec: &SearchSpec, w: &Word, k: usize) -> SearchOutcome {
    debug_assert!(k >= 1);
    let mut failed: HashSet<(Word, usize)> = HashSet::new();
    let mut factors: Vec<Word> = Vec::new();
    if recurse(spec, w, k, &mut factors, &mut failed) {
        SearchOutcome::Found(factors)
    } else {
        SearchOutcome::Exhausted
    }
}

fn recurse(
    spec: &SearchSpec,
    v: &Word,
    k_left: usize,
    acc: &mut Vec<Word>,
    failed: &mut HashSet<(Word, usize)>,
) -> bool {
    if k_left == 1 {
        if (spec.is_factor)(v) {
            acc.push(v.clone());
            return true;
        }
        return false;
    }
    // A product of k_left factors of length ≤ cap is at most k_left·cap long.
    if v.len() > k_left * spec.cap {
        return false;
    }
    if (spec.prune)(v, k_left) {
        return false;
    }
    let key = (v.clone(), k_left);
    if failed.contains(&key) {
        return false;
    }
    let mut order: Vec<(usize, usize)> = spec
        .candidates
        .iter()
        .enumerate()
        .map(|(i, p)| (common_prefix(p, v), i))
        .collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, i) in order {
        let p = &spec.candidates[i];
        // The remainder is at least |v| − |p| letters; skip factors that
        // leave more than the remaining positions can absorb.
        if v.len() > p.len() + (k_left - 1) * spec.cap {
            continue;
        }
        let rest = p
            .invert()
            .multiply(v)
            .expect("candidates share the query's rank");
        acc.push(p.clone());
        if recurse(spec, &rest, k_left - 1, acc, failed) {
            return true;
        }
        acc.pop();
    }
    failed.insert(key);
    false
}

fn common_prefix(a: &Word, b: &Word) -> usize {
    a.letters()
        .iter()
        .zip(b.letters())
        .take_while(|(x, y)| x == y)
        .count()
}
