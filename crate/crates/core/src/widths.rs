//! Width machinery: the doubled square words `u(n)` and their power
//! certificates, two-palindrome decomposition of rank-2 primitives, the
//! fresh-generator two-primitive decomposition, primitive enumeration, and
//! the bounded exact primitive-length search.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::autos::{nielsen_u, p_of_sigma, AutoError};
use crate::bracket::{BoundSource, Bracket, PrimBracket};
use crate::factor_search::{search_exact_k, SearchOutcome, SearchSpec};
use crate::palindromes::is_palindrome;
use crate::whitehead::{
    carrier_automorphism, cyclic_reduce, enumerate_whitehead_autos, is_primitive,
    whitehead_graph, WhiteheadError,
};
use crate::words::{Letter, Rank, Sign, Word, WordError};

/// Ranks the default primitive enumeration accepts.
pub const PRIM_ENUM_RANK_BUDGET: u32 = 3;
/// Lengths the default primitive enumeration accepts.
pub const PRIM_ENUM_LEN_BUDGET: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WidthError {
    #[error("doubled square words need rank at least 2, got {rank}")]
    RankBelowTwo { rank: u32 },
    #[error("power exponent must be positive")]
    ZeroPower,
    #[error("certificate premise failed: {premise}")]
    PremiseFailed { premise: &'static str },
    #[error("generator x{gen} occurs in the word, so it is not fresh")]
    FreshGeneratorOccurs { gen: u32 },
    #[error(
        "primitive enumeration budget exceeded: rank {rank}, max_len {max_len} \
         (budget: rank <= {PRIM_ENUM_RANK_BUDGET}, max_len <= {PRIM_ENUM_LEN_BUDGET})"
    )]
    EnumBudgetExceeded { rank: u32, max_len: usize },
    #[error("word is not primitive")]
    NotPrimitive,
    #[error("internal invariant broken: {0}")]
    Internal(&'static str),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Whitehead(#[from] WhiteheadError),
    #[error(transparent)]
    Auto(#[from] AutoError),
}

/// `u(n) = (x1²·…·xn²)²`, the doubled square word. Its syllable count is
/// measured downstream, never assumed.
pub fn u_word(n: Rank) -> Result<Word, WidthError> {
    if n.get() < 2 {
        return Err(WidthError::RankBelowTwo { rank: n.get() });
    }
    let mut syls: Vec<(u32, i64)> = Vec::with_capacity(2 * n.get() as usize);
    for _ in 0..2 {
        for g in 1..=n.get() {
            syls.push((g, 2));
        }
    }
    Ok(Word::from_syllables(n, &syls)?)
}

/// A mechanically verified certificate that `u(n)^{2k}` is not a product of
/// `k` or fewer primitive elements, so its primitive length is at least
/// `k + 1`.
///
/// The three premises, all rechecked by [`HamPowerCert::verify`]:
/// (a) every cyclic window of `SL(u)` consecutive syllables of `u` has a
/// Hamiltonian Whitehead graph (one recorded cycle per window); (b) the
/// syllables of adjacent copies of `u` do not merge, so
/// `SL(u^{2k}) = 2k·SL(u)`; (c) `⌈SL(u^{2k})/k⌉ ≥ 2n + 2`, the per-factor
/// syllable quota that defeats any k-factor split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPowerCert {
    n: Rank,
    k: u32,
    sl_u: usize,
    sl_power: usize,
    window_cycles: Vec<(Word, Vec<Letter>)>,
}

impl HamPowerCert {
    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn sl_u(&self) -> usize {
        self.sl_u
    }

    pub fn sl_power(&self) -> usize {
        self.sl_power
    }

    /// One `(window word, Hamiltonian cycle)` pair per cyclic syllable
    /// window of `u(n)`, in window-start order.
    pub fn window_cycles(&self) -> &[(Word, Vec<Letter>)] {
        &self.window_cycles
    }

    /// The certified bound: `l_prim(u(n)^{2k}) ≥ k + 1`.
    pub fn implied_lower_bound(&self) -> usize {
        self.k as usize + 1
    }

    /// The verified counting chain, for human consumption.
    pub fn transcript(&self) -> String {
        format!(
            "SL(u({n})) = {sl_u}; SL(u({n})^{p}) = {sl_power} = {p}*{sl_u}; \
             ceil({sl_power}/{k}) = {quota} >= {need} = 2*{n}+2; \
             hence at least {bound} primitive factors",
            n = self.n.get(),
            p = 2 * self.k,
            k = self.k,
            sl_u = self.sl_u,
            sl_power = self.sl_power,
            quota = self.sl_power.div_ceil(self.k as usize),
            need = 2 * self.n.get() + 2,
            bound = self.implied_lower_bound(),
        )
    }

    /// Recheck every premise from scratch.
    pub fn verify(&self) -> bool {
        let Ok(u) = u_word(self.n) else {
            return false;
        };
        let sl_u = u.syllable_count();
        if sl_u != self.sl_u || sl_u != 2 * self.n.get() as usize {
            return false;
        }
        if self.window_cycles.len() != sl_u || self.k == 0 {
            return false;
        }
        for (start, (word, cycle)) in self.window_cycles.iter().enumerate() {
            let Ok(expected) = u.syllable_window(start, sl_u, true) else {
                return false;
            };
            if *word != expected {
                return false;
            }
            if !whitehead_graph(word).validates_hamiltonian_cycle(cycle) {
                return false;
            }
        }
        let Some(power) = u_power(&u, 2 * self.k) else {
            return false;
        };
        power.syllable_count() == self.sl_power
            && self.sl_power == 2 * self.k as usize * sl_u
            && self.sl_power.div_ceil(self.k as usize) >= 2 * self.n.get() as usize + 2
    }
}

fn u_power(u: &Word, exponent: u32) -> Option<Word> {
    let mut power = Word::identity(u.rank());
    for _ in 0..exponent {
        power = power.multiply(u).ok()?;
    }
    Some(power)
}

/// Build and check the certificate for `u(n)^{2k}`; any failed premise is
/// refused by name rather than glossed over.
pub fn ham_power_cert(n: Rank, k: u32) -> Result<HamPowerCert, WidthError> {
    if k == 0 {
        return Err(WidthError::ZeroPower);
    }
    let u = u_word(n)?;
    let sl_u = u.syllable_count();
    if sl_u != 2 * n.get() as usize {
        return Err(WidthError::PremiseFailed {
            premise: "u(n) must have 2n syllables",
        });
    }
    let mut window_cycles = Vec::with_capacity(sl_u);
    for start in 0..sl_u {
        let window = u.syllable_window(start, sl_u, true)?;
        let cycle = whitehead_graph(&window)
            .is_hamiltonian()?
            .ok_or(WidthError::PremiseFailed {
                premise: "every cyclic syllable window of u must have a Hamiltonian Whitehead graph",
            })?;
        window_cycles.push((window, cycle));
    }
    let power = u_power(&u, 2 * k).ok_or(WidthError::Internal("power construction"))?;
    let sl_power = power.syllable_count();
    if sl_power != 2 * k as usize * sl_u {
        return Err(WidthError::PremiseFailed {
            premise: "syllables of adjacent copies of u must not merge",
        });
    }
    if sl_power.div_ceil(k as usize) < 2 * n.get() as usize + 2 {
        return Err(WidthError::PremiseFailed {
            premise: "per-factor syllable quota must reach 2n + 2",
        });
    }
    Ok(HamPowerCert {
        n,
        k,
        sl_u,
        sl_power,
        window_cycles,
    })
}

/// Structural recognition of `u(n)^{2k}`: every syllable exactly the square
/// of a generator, the generators cycling `1..n` where `n` is the word's
/// full rank, and the cycle repeated `4k ≥ 4` times. Nothing fuzzier is
/// accepted — the power certificate is only claimed for these words.
pub fn recognize_u_power(w: &Word) -> Option<(Rank, u32)> {
    let n = w.rank().get();
    if n < 2 {
        return None;
    }
    let syls = w.syllables();
    if syls.is_empty() || !syls.len().is_multiple_of(n as usize) {
        return None;
    }
    if syls.iter().any(|s| s.exponent != 2) {
        return None;
    }
    if syls
        .iter()
        .enumerate()
        .any(|(i, s)| s.gen != (i as u32 % n) + 1)
    {
        return None;
    }
    let blocks = (syls.len() / n as usize) as u32;
    if blocks < 4 || !blocks.is_multiple_of(4) {
        return None;
    }
    Some((w.rank(), blocks / 4))
}

/// Write a rank-2 primitive as a product of two palindromes, via the defect
/// words of its carrier automorphism: with `σ(x1) = a`,
/// `p(σ∘U) = σ(x1)·p(σ)`, so `a = p(σ∘U) · p(σ)⁻¹`. All three
/// postconditions (two palindromes, exact product) are rechecked before
/// returning.
pub fn prim_decompose_two_pals(a: &Word) -> Result<(Word, Word), WidthError> {
    if a.rank().get() != 2 {
        return Err(WidthError::Auto(AutoError::RankNotTwo {
            rank: a.rank().get(),
        }));
    }
    if !is_primitive(a) {
        return Err(WidthError::NotPrimitive);
    }
    let sigma = carrier_automorphism(a)?;
    let p1 = p_of_sigma(&sigma.compose(&nielsen_u())?)?;
    let p2 = p_of_sigma(&sigma)?.invert();
    if !is_palindrome(&p1) || !is_palindrome(&p2) {
        return Err(WidthError::Internal("decomposition factors must be palindromes"));
    }
    if p1.multiply(&p2)? != *a {
        return Err(WidthError::Internal(
            "palindrome decomposition must reproduce its word",
        ));
    }
    Ok((p1, p2))
}

/// Split any word over `{x1,…}` as a product of two primitives of the
/// next-larger free group: `w = x⁻¹ · (x·w)` for a generator `x` that does
/// not occur in `w`. Both factors are primitive: the first is a letter, the
/// second is part of a basis. The word is embedded at
/// `max(rank(w), fresh)` so the fresh generator exists.
pub fn fresh_gen_decompose(w: &Word, fresh: u32) -> Result<(Word, Word), WidthError> {
    if fresh == 0 {
        return Err(WidthError::Word(WordError::ZeroGenerator));
    }
    if w.letters().iter().any(|l| l.gen() == fresh) {
        return Err(WidthError::FreshGeneratorOccurs { gen: fresh });
    }
    let rank = Rank::new(w.rank().get().max(fresh)).expect("positive rank");
    let embedded = w.embed(rank)?;
    let x = Word::generator(rank, fresh)?;
    Ok((x.invert(), x.multiply(&embedded)?))
}

/// Exactly the primitive elements of length at most `max_len`, shortlex
/// sorted, within the default budget (rank ≤ 3, length ≤ 10).
pub fn enumerate_primitives(rank: Rank, max_len: usize) -> Result<Vec<Word>, WidthError> {
    if rank.get() > PRIM_ENUM_RANK_BUDGET || max_len > PRIM_ENUM_LEN_BUDGET {
        return Err(WidthError::EnumBudgetExceeded {
            rank: rank.get(),
            max_len,
        });
    }
    Ok(enumerate_primitives_unbudgeted(rank, max_len))
}

/// Budget-free variant of [`enumerate_primitives`]; cost grows quickly in
/// both arguments.
///
/// Completeness: every primitive conjugacy class with cyclic length ≤ L is
/// reached from `x1` by Whitehead automorphisms through classes of cyclic
/// length ≤ L (reverse the length-non-increasing chain that peak
/// reduction provides), so the core-level search misses nothing; the
/// cyclically reduced words of a class are exactly the rotations of any
/// one of them; and a word equals `r·c·r⁻¹` for a unique such pair with
/// the two end letters of `r` non-cancelling, which the wrapping stage
/// enumerates directly.
pub fn enumerate_primitives_unbudgeted(rank: Rank, max_len: usize) -> Vec<Word> {
    if max_len == 0 {
        return Vec::new();
    }
    let autos = enumerate_whitehead_autos(rank);
    let x1 = Word::generator(rank, 1).expect("rank is at least 1");

    let mut cores: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    cores.insert(x1.clone());
    queue.push_back(x1);
    while let Some(v) = queue.pop_front() {
        for aut in &autos {
            let img = aut.apply(&v).expect("enumerated automorphisms share the rank");
            let core = cyclic_reduce(&img).0;
            if core.len() <= max_len && cores.insert(core.clone()) {
                queue.push_back(core);
            }
        }
    }

    let mut cyclic_words: BTreeSet<Word> = BTreeSet::new();
    for core in &cores {
        let letters = core.letters();
        for i in 0..letters.len() {
            let mut rotated = letters[i..].to_vec();
            rotated.extend_from_slice(&letters[..i]);
            cyclic_words.insert(Word::from_reduced_unchecked(rank, rotated));
        }
    }

    let mut out: BTreeSet<Word> = BTreeSet::new();
    for core in &cyclic_words {
        let budget = (max_len - core.len()) / 2;
        let mut conjugator: Vec<Letter> = Vec::new();
        wrap_conjugates(rank, core, budget, &mut conjugator, &mut out);
    }
    out.into_iter().collect()
}

/// Emit `r·core·r⁻¹` for every reduced `r` up to the length budget whose
/// last letter cancels into neither end of the core.
fn wrap_conjugates(
    rank: Rank,
    core: &Word,
    budget: usize,
    r: &mut Vec<Letter>,
    out: &mut BTreeSet<Word>,
) {
    let first = core.letters()[0];
    let last = *core.letters().last().expect("cores are nonempty");
    let fits = match r.last() {
        None => true,
        Some(&tail) => !tail.is_inverse_of(first) && tail != last,
    };
    if fits {
        let mut letters = Vec::with_capacity(2 * r.len() + core.len());
        letters.extend_from_slice(r);
        letters.extend_from_slice(core.letters());
        letters.extend(r.iter().rev().map(|l| l.inverse()));
        out.insert(Word::from_reduced_unchecked(rank, letters));
    }
    if r.len() == budget {
        return;
    }
    for gen in 1..=rank.get() {
        for sign in [Sign::Plus, Sign::Minus] {
            let l = Letter::new(gen, sign).expect("positive generator index");
            if r.last().is_some_and(|&t| t.is_inverse_of(l)) {
                continue;
            }
            r.push(l);
            wrap_conjugates(rank, core, budget, r, out);
            r.pop();
        }
    }
}

/// Bounded exact search for primitive length.
///
/// Lower bounds come from primitivity itself (a non-primitive nonempty word
/// needs at least two factors), from a power certificate when the word is
/// structurally `u(n)^{2k}`, and from exhausted searches when the factor
/// enumeration covered the full cap. Upper bounds always carry a witness.
pub fn prim_length_bounded(w: &Word, max_k: usize, factor_len_cap: usize) -> PrimBracket {
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
    if is_primitive(w) {
        bracket.upper = Some(1);
        bracket.upper_source = Some(BoundSource::Witness);
        bracket.witness = Some(vec![w.clone()]);
        return bracket;
    }
    bracket.lower = 2;
    bracket.lower_source = BoundSource::WhiteheadCertificate;
    if let Some((n, k)) = recognize_u_power(w) {
        if let Ok(cert) = ham_power_cert(n, k) {
            let bound = cert.implied_lower_bound();
            if bound > bracket.lower {
                bracket.lower = bound;
                bracket.lower_source = BoundSource::HamPowerCertificate;
            }
            bracket.ham_power = Some(cert);
        }
    }
    if max_k < 2 || bracket.lower > max_k {
        return bracket;
    }

    let enum_len = factor_len_cap.min(PRIM_ENUM_LEN_BUDGET);
    let Ok(candidates) = enumerate_primitives(w.rank(), enum_len) else {
        // Rank above the enumeration budget: report bounds only.
        return bracket;
    };
    bracket.factor_enum_len = enum_len;
    let enumeration_complete = enum_len >= factor_len_cap;

    let is_factor = |v: &Word| !v.is_empty() && v.len() <= factor_len_cap && is_primitive(v);
    let prune = |_: &Word, _: usize| false;
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
