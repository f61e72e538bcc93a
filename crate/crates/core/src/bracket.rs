//! Sound intervals for width-length quantities.
//!
//! A `Bracket` reports what a bounded search actually established about the
//! minimal number of factors (palindromes or primitives) needed to write a
//! word, without ever overstating it. The upper bound, when present, is
//! certified by an explicit witness factorization. The lower bound carries a
//! provenance tag; all sources except `ExhaustedSearch` are unconditional,
//! while `ExhaustedSearch` is relative to the recorded factor-length cap
//! (the search proved no factorization with every factor at most
//! `factor_len_cap` letters, which it may only claim after enumerating all
//! candidate factors up to that cap).

use crate::widths::HamPowerCert;
use crate::words::Word;

/// Where a bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// Degenerate facts: the empty word needs 0 factors, a nonempty word
    /// needs 1, a word that is not itself a factor needs 2.
    Trivial,
    /// The Δ bound: a product of k palindromes has Δ ≤ 6k − 6.
    DeltaCertificate,
    /// A Whitehead-graph certificate of non-primitivity.
    WhiteheadCertificate,
    /// The syllable-counting certificate for doubled-square powers.
    HamPowerCertificate,
    /// Complete enumeration up to the factor cap found no factorization.
    /// Cap-relative, not unconditional.
    ExhaustedSearch,
    /// An explicit verified factorization.
    Witness,
}

impl BoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundSource::Trivial => "trivial",
            BoundSource::DeltaCertificate => "delta-certificate",
            BoundSource::WhiteheadCertificate => "whitehead-certificate",
            BoundSource::HamPowerCertificate => "ham-power-certificate",
            BoundSource::ExhaustedSearch => "exhausted-search",
            BoundSource::Witness => "witness",
        }
    }
}

/// A sound interval `[lower, upper]` for a width-length quantity, with the
/// search budgets that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub lower: usize,
    pub lower_source: BoundSource,
    /// `None` means the search could not certify any upper bound within its
    /// budgets — never that none exists.
    pub upper: Option<usize>,
    pub upper_source: Option<BoundSource>,
    /// Present iff `upper` is; factors multiply to the queried word and
    /// `witness.len() == upper`.
    pub witness: Option<Vec<Word>>,
    /// Largest factor count the search was allowed to try.
    pub max_k: usize,
    /// Largest factor length the search was allowed to use.
    pub factor_len_cap: usize,
    /// Length up to which candidate factors were exhaustively enumerated.
    /// Lower bounds tagged `ExhaustedSearch` require this to have reached
    /// `factor_len_cap`.
    pub factor_enum_len: usize,
    /// The counting certificate backing a `HamPowerCertificate` lower bound.
    pub ham_power: Option<HamPowerCert>,
}

/// Bracket for palindromic length.
pub type PalBracket = Bracket;
/// Bracket for primitive length.
pub type PrimBracket = Bracket;

impl Bracket {
    /// The bounds meet: the reported value is the minimum subject to the
    /// recorded caps (and unconditional when the lower source is not
    /// `ExhaustedSearch`).
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    /// True when the lower bound only holds relative to `factor_len_cap`.
    pub fn lower_is_cap_relative(&self) -> bool {
        self.lower_source == BoundSource::ExhaustedSearch
    }
}
