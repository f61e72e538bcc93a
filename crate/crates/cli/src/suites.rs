//! The deterministic verification suites behind `verify`. Each suite checks
//! one advertised property of the library with pinned sizes and seeds; the
//! suite list is the contract, so names and constants stay stable.

use std::time::Instant;

use freewidth::autos::{nielsen_u, p_of_sigma};
use freewidth::palindromes::{enumerate_palindromes, is_palindrome, pal_length_bounded};
use freewidth::quasihom::{
    delta, delta_defect, fp_delta, fp_witness, pal_lower_bound_from_delta, pal_witness,
};
use freewidth::whitehead::{is_primitive, nonprimitivity_certificate, whitehead_graph};
use freewidth::widths::{
    enumerate_primitives, fresh_gen_decompose, ham_power_cert, prim_decompose_two_pals, u_word,
};
use freewidth::words::{Rank, Word};
use rand::Rng;

use crate::dot::emit_dot;
use crate::oracle::{all_reduced_words, primitives_by_filter, PalClosure};
use crate::{sample, wordtext};

const WITNESS_MAX_N: u32 = 64;
const PAL_EXHAUSTIVE_LEN: usize = 12;
const ANTISYMMETRY_TRIALS: usize = 100_000;
const ANTISYMMETRY_RANK: u32 = 3;
const ANTISYMMETRY_MAX_LEN: usize = 64;
const DEFECT_TRIALS: usize = 100_000;
const DEFECT_BOUND: i64 = 6;
const DEFECT_EXHAUSTIVE_LEN: usize = 5;
const PRODUCT_TRIALS: usize = 10_000;
const PRODUCT_MAX_K: usize = 8;
const PRODUCT_FACTOR_HALF: usize = 15;
const SEPARATION_MAX_M: u32 = 8;
const SOUNDNESS_RANK2_LEN: usize = 8;
const SOUNDNESS_RANK3_LEN: usize = 6;
const HAMILTONIAN_MAX_N: u32 = 5;
const HAM_POWER_NS: [u32; 2] = [2, 3];
const HAM_POWER_MAX_K: u32 = 4;
const TWO_PAL_LEN: usize = 8;
const P_PAL_TRIALS: usize = 500;
const P_PAL_MAX_FACTORS: usize = 6;
const FRESH_TRIALS: usize = 1000;
const FRESH_PRIMITIVITY_CHECKS: usize = 100;
const FRESH_MAX_LEN: usize = 32;
const FP_WITNESS_MAX_N: u32 = 64;
const FP_DEFECT_TRIALS: usize = 10_000;
const FP_MAX_SYLLABLES: usize = 32;
const FP_MAX_ELEMENT: i64 = 9;
const ORACLE_WORD_LEN: usize = 6;
const ORACLE_MAX_K: usize = 4;
const ORACLE_FACTOR_CAP: usize = 12;
const ORACLE_PRIM_LEN: usize = 8;
const ROUNDTRIP_TRIALS: usize = 10_000;
const ROUNDTRIP_MAX_LEN: usize = 48;

pub const SUITE_NAMES: [&str; 15] = [
    "witness-delta",
    "palindromes-delta-zero",
    "delta-antisymmetry",
    "delta-defect",
    "product-bound",
    "separation",
    "whitehead-soundness",
    "hamiltonian-windows",
    "ham-power",
    "two-palindromes",
    "p-palindrome",
    "fresh-gen",
    "free-product",
    "oracle-agreement",
    "cli-formats",
];

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        format!(
            "{} {} ({} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.wall_ms,
            self.details
        )
    }
}

/// Run one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let idx = SUITE_NAMES.iter().position(|&n| n == name)?;
    let body: fn(u64) -> (bool, String) = [
        witness_delta,
        palindromes_delta_zero,
        delta_antisymmetry,
        delta_defect_suite,
        product_bound,
        separation,
        whitehead_soundness,
        hamiltonian_windows,
        ham_power,
        two_palindromes,
        p_palindrome,
        fresh_gen,
        free_product,
        oracle_agreement,
        cli_formats,
    ][idx];
    let start = Instant::now();
    let (passed, details) = body(seed);
    Some(SuiteReport {
        name: SUITE_NAMES[idx],
        passed,
        details,
        wall_ms: start.elapsed().as_millis(),
    })
}

/// All suites in contract order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, seed).expect("listed names are known"))
        .collect()
}

fn r(n: u32) -> Rank {
    Rank::new(n).expect("fixed positive rank")
}

fn witness_delta(_seed: u64) -> (bool, String) {
    for n in 1..=WITNESS_MAX_N {
        let w = pal_witness(n).expect("indices start at 1");
        if delta(&w) != i64::from(n) - 1 {
            return (false, format!("delta(witness({n})) != {}", n - 1));
        }
    }
    (true, format!("delta(witness(n)) = n-1 for n = 1..={WITNESS_MAX_N}"))
}

fn palindromes_delta_zero(_seed: u64) -> (bool, String) {
    let pals = enumerate_palindromes(r(2), PAL_EXHAUSTIVE_LEN);
    for p in &pals {
        if delta(p) != 0 {
            return (false, format!("delta({p}) != 0 for a palindrome"));
        }
    }
    (
        true,
        format!(
            "all {} rank-2 palindromes of length <= {PAL_EXHAUSTIVE_LEN} have delta 0",
            pals.len()
        ),
    )
}

fn delta_antisymmetry(seed: u64) -> (bool, String) {
    let mut rng = sample::rng(seed, 3);
    for _ in 0..ANTISYMMETRY_TRIALS {
        let w = sample::word(&mut rng, r(ANTISYMMETRY_RANK), ANTISYMMETRY_MAX_LEN);
        if delta(&w) + delta(&w.invert()) != 0 {
            return (false, format!("delta not antisymmetric on {w}"));
        }
    }
    (
        true,
        format!("delta(w) + delta(w^-1) = 0 on {ANTISYMMETRY_TRIALS} sampled words"),
    )
}

fn delta_defect_suite(seed: u64) -> (bool, String) {
    let mut rng = sample::rng(seed, 4);
    let mut max_seen: i64 = 0;
    for _ in 0..DEFECT_TRIALS {
        let u = sample::word(&mut rng, r(3), ANTISYMMETRY_MAX_LEN);
        let w = sample::word(&mut rng, r(3), ANTISYMMETRY_MAX_LEN);
        let d = delta_defect(&u, &w).expect("same rank").abs();
        max_seen = max_seen.max(d);
        if d > DEFECT_BOUND {
            return (false, format!("defect {d} > {DEFECT_BOUND} on ({u}, {w})"));
        }
    }
    let short = all_reduced_words(r(2), DEFECT_EXHAUSTIVE_LEN);
    for u in &short {
        for w in &short {
            let d = delta_defect(u, w).expect("same rank").abs();
            max_seen = max_seen.max(d);
            if d > DEFECT_BOUND {
                return (false, format!("defect {d} > {DEFECT_BOUND} on ({u}, {w})"));
            }
        }
    }
    (
        true,
        format!(
            "|defect| <= {DEFECT_BOUND} on {DEFECT_TRIALS} sampled rank-3 pairs and {} exhaustive rank-2 pairs (max seen {max_seen})",
            short.len() * short.len()
        ),
    )
}

fn product_bound(seed: u64) -> (bool, String) {
    let mut rng = sample::rng(seed, 5);
    for _ in 0..PRODUCT_TRIALS {
        let k = rng.gen_range(1..=PRODUCT_MAX_K);
        let mut product = Word::identity(r(2));
        for _ in 0..k {
            let p = sample::palindrome(&mut rng, r(2), PRODUCT_FACTOR_HALF);
            product = product.multiply(&p).expect("same rank");
        }
        let bound = 6 * k as i64 - 6;
        if delta(&product) > bound {
            return (false, format!("delta > {bound} on a product of {k} palindromes"));
        }
        if pal_lower_bound_from_delta(&product) > k {
            return (false, format!("lower bound exceeds the construction size {k}"));
        }
    }
    (
        true,
        format!(
            "delta <= 6k-6 and lower bound <= k on {PRODUCT_TRIALS} products of k = 1..={PRODUCT_MAX_K} palindromes"
        ),
    )
}

fn separation(_seed: u64) -> (bool, String) {
    for m in 0..=SEPARATION_MAX_M {
        let w = pal_witness(6 * m + 7).expect("indices start at 1");
        let bound = pal_lower_bound_from_delta(&w);
        if bound < m as usize + 2 {
            return (false, format!("bound {bound} < {} at m = {m}", m + 2));
        }
    }
    (
        true,
        format!(
            "pal lower bound of witness(6m+7) >= m+2 for m = 0..={SEPARATION_MAX_M}"
        ),
    )
}

fn whitehead_soundness(_seed: u64) -> (bool, String) {
    let mut checked = 0usize;
    for (rank, len) in [(2, SOUNDNESS_RANK2_LEN), (3, SOUNDNESS_RANK3_LEN)] {
        let prims = enumerate_primitives(r(rank), len).expect("within enumeration budget");
        for p in &prims {
            if let Some(cert) = nonprimitivity_certificate(p) {
                return (
                    false,
                    format!("certificate fired on primitive {p}: {:?}", cert.witness),
                );
            }
        }
        checked += prims.len();
    }
    (
        true,
        format!("certificate fired zero times across {checked} enumerated primitives"),
    )
}

fn hamiltonian_windows(_seed: u64) -> (bool, String) {
    let mut windows = 0usize;
    for n in 2..=HAMILTONIAN_MAX_N {
        let u = u_word(r(n)).expect("rank at least 2");
        if whitehead_graph(&u)
            .is_hamiltonian()
            .expect("rank within budget")
            .is_none()
        {
            return (false, format!("WG(u({n})) is not Hamiltonian"));
        }
        let sl = u.syllable_count();
        for start in 0..sl {
            let window = u.syllable_window(start, sl, true).expect("window in range");
            match whitehead_graph(&window).is_hamiltonian() {
                Ok(Some(_)) => windows += 1,
                _ => return (false, format!("window {start} of u({n}) is not Hamiltonian")),
            }
        }
    }
    (
        true,
        format!(
            "WG(u(n)) and all {windows} cyclic syllable windows Hamiltonian for n = 2..={HAMILTONIAN_MAX_N}"
        ),
    )
}

fn ham_power(_seed: u64) -> (bool, String) {
    for n in HAM_POWER_NS {
        for k in 1..=HAM_POWER_MAX_K {
            let cert = match ham_power_cert(r(n), k) {
                Ok(c) => c,
                Err(e) => return (false, format!("certificate failed at (n={n}, k={k}): {e}")),
            };
            if !cert.verify() {
                return (false, format!("certificate failed re-verification at (n={n}, k={k})"));
            }
            if cert.implied_lower_bound() != k as usize + 1 {
                return (false, format!("wrong bound at (n={n}, k={k})"));
            }
            if k == 1 {
                let u = u_word(r(n)).expect("rank at least 2");
                let square = u.multiply(&u).expect("same rank");
                if is_primitive(&square) {
                    return (false, format!("u({n})^2 tested primitive"));
                }
            }
        }
    }
    (
        true,
        format!(
            "certificates for n in {HAM_POWER_NS:?}, k = 1..={HAM_POWER_MAX_K} verified; u(n)^2 non-primitivity cross-checked"
        ),
    )
}

fn two_palindromes(_seed: u64) -> (bool, String) {
    let prims = enumerate_primitives(r(2), TWO_PAL_LEN).expect("within enumeration budget");
    for a in &prims {
        let (p1, p2) = match prim_decompose_two_pals(a) {
            Ok(pair) => pair,
            Err(e) => return (false, format!("decomposition failed on {a}: {e}")),
        };
        if !is_palindrome(&p1) || !is_palindrome(&p2) {
            return (false, format!("non-palindromic factor for {a}"));
        }
        if p1.multiply(&p2).expect("same rank") != *a {
            return (false, format!("product mismatch for {a}"));
        }
    }
    (
        true,
        format!(
            "all {} rank-2 primitives of length <= {TWO_PAL_LEN} split into two palindromes exactly",
            prims.len()
        ),
    )
}

fn p_palindrome(seed: u64) -> (bool, String) {
    let x1 = Word::generator(r(2), 1).expect("rank two has x1");
    match p_of_sigma(&nielsen_u()) {
        Ok(p) if p == x1 => {}
        other => return (false, format!("defect of the Nielsen map was {other:?}, not x1")),
    }
    let mut rng = sample::rng(seed, 11);
    for i in 0..P_PAL_TRIALS {
        let sigma = sample::automorphism(&mut rng, r(2), P_PAL_MAX_FACTORS);
        match p_of_sigma(&sigma) {
            Ok(p) if is_palindrome(&p) => {}
            Ok(p) => return (false, format!("defect {p} of sample {i} is not a palindrome")),
            Err(e) => return (false, format!("defect extraction failed on sample {i}: {e}")),
        }
    }
    (
        true,
        format!("defect word is a palindrome for {P_PAL_TRIALS} sampled automorphisms"),
    )
}

fn fresh_gen(seed: u64) -> (bool, String) {
    let mut rng = sample::rng(seed, 12);
    for _ in 0..FRESH_TRIALS {
        let rank = rng.gen_range(1..=3);
        let w = sample::word(&mut rng, r(rank), FRESH_MAX_LEN);
        let fresh = rank + 1;
        let (a, b) = match fresh_gen_decompose(&w, fresh) {
            Ok(pair) => pair,
            Err(e) => return (false, format!("decomposition failed on {w}: {e}")),
        };
        let embedded = w.embed(r(fresh)).expect("rank grows");
        if a.multiply(&b).expect("same rank") != embedded {
            return (false, format!("round trip failed on {w}"));
        }
    }
    let mut rng = sample::rng(seed, 13);
    for _ in 0..FRESH_PRIMITIVITY_CHECKS {
        let w = sample::word(&mut rng, r(2), FRESH_MAX_LEN);
        let (a, b) = fresh_gen_decompose(&w, 3).expect("generator 3 is fresh");
        if !is_primitive(&a) || !is_primitive(&b) {
            return (false, format!("non-primitive factor for {w}"));
        }
    }
    (
        true,
        format!(
            "round trip on {FRESH_TRIALS} samples; both factors primitive on {FRESH_PRIMITIVITY_CHECKS} rank-2 cases"
        ),
    )
}

fn free_product(seed: u64) -> (bool, String) {
    for n in 1..=FP_WITNESS_MAX_N {
        let g = fp_witness(n).expect("indices start at 1");
        if fp_delta(&g) != i64::from(n) - 1 {
            return (false, format!("fp_delta(witness({n})) != {}", n - 1));
        }
    }
    let mut rng = sample::rng(seed, 14);
    let mut max_defect: i64 = 0;
    for _ in 0..FP_DEFECT_TRIALS {
        let g = sample::fp_word(&mut rng, FP_MAX_SYLLABLES, FP_MAX_ELEMENT);
        let h = sample::fp_word(&mut rng, FP_MAX_SYLLABLES, FP_MAX_ELEMENT);
        let d = (fp_delta(&g.multiply(&h)) - fp_delta(&g) - fp_delta(&h)).abs();
        max_defect = max_defect.max(d);
    }
    (
        true,
        format!(
            "fp_delta(witness(n)) = n-1 for n = 1..={FP_WITNESS_MAX_N}; empirical defect max {max_defect} over {FP_DEFECT_TRIALS} pairs (reported, not asserted)"
        ),
    )
}

fn oracle_agreement(_seed: u64) -> (bool, String) {
    let oracle = PalClosure::new(ORACLE_FACTOR_CAP);
    let words = all_reduced_words(r(2), ORACLE_WORD_LEN);
    for w in &words {
        let bracket = pal_length_bounded(w, ORACLE_MAX_K, ORACLE_FACTOR_CAP);
        if !bracket.is_exact() {
            return (false, format!("bracket inexact on {w}"));
        }
        let expected = oracle.min_factors(w, ORACLE_MAX_K);
        if bracket.upper != expected {
            return (
                false,
                format!("bracket {:?} disagrees with oracle {expected:?} on {w}", bracket.upper),
            );
        }
    }
    let orbit = enumerate_primitives(r(2), ORACLE_PRIM_LEN).expect("within enumeration budget");
    let filtered = primitives_by_filter(r(2), ORACLE_PRIM_LEN);
    if orbit != filtered {
        return (
            false,
            format!(
                "primitive enumerations disagree: orbit {} vs filter {}",
                orbit.len(),
                filtered.len()
            ),
        );
    }
    (
        true,
        format!(
            "palindromic lengths agree on {} words (cap {ORACLE_FACTOR_CAP}); primitive enumerations agree on {} elements",
            words.len(),
            orbit.len()
        ),
    )
}

fn cli_formats(seed: u64) -> (bool, String) {
    let mut rng = sample::rng(seed, 15);
    for _ in 0..ROUNDTRIP_TRIALS {
        let rank = rng.gen_range(1..=3);
        let w = sample::word(&mut rng, r(rank), ROUNDTRIP_MAX_LEN);
        let text = wordtext::print(&w);
        match wordtext::parse(&text, r(rank)) {
            Ok(back) if back == w => {}
            _ => return (false, format!("canonical round trip failed on `{text}`")),
        }
        let compact = wordtext::print_compact(&w).expect("rank is at most 26");
        match wordtext::parse(&compact, r(rank)) {
            Ok(back) if back == w => {}
            _ => return (false, format!("compact round trip failed on `{compact}`")),
        }
    }
    let worked = wordtext::parse("x1^2 x2^-3 x3^4 x2^-3 x1^2", r(3)).expect("well-formed");
    if delta(&worked) != 0 {
        return (false, "delta of the symmetric example is not 0".into());
    }
    let u2 = u_word(r(2)).expect("rank at least 2");
    let dot = emit_dot(&whitehead_graph(&u2));
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    if edges != 4 {
        return (false, format!("DOT of WG(u(2)) has {edges} edges, expected 4"));
    }
    (
        true,
        format!(
            "parse/print round trips on {ROUNDTRIP_TRIALS} words; worked example delta 0; DOT edge count 4"
        ),
    )
}
