//! Text forms of free-group words.
//!
//! Two input grammars are accepted: whitespace-separated factors `x<i>` or
//! `x<i>^<e>` with nonzero integer exponent, and — when the whole input is
//! ASCII-alphabetic — a compact form where `a`..`z` are generators 1..26
//! and `A`..`Z` their inverses. Canonical output is the factor grammar with
//! `^e` omitted for exponent 1; parsing always reduces.

use std::error::Error;
use std::fmt;

use freewidth::quasihom::{Factor, FpWord};
use freewidth::words::{Letter, Rank, Sign, Word};

/// Hard ceiling on the letter count of a parsed word, so pathological
/// exponents fail fast instead of exhausting memory.
const MAX_PARSED_LETTERS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// Byte offset of the offending token in the input.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.position)
    }
}

impl Error for ParseError {}

fn err<T>(message: impl Into<String>, position: usize) -> Result<T, ParseError> {
    Err(ParseError {
        message: message.into(),
        position,
    })
}

/// Parse either grammar, producing a freely reduced word.
pub fn parse(text: &str, rank: Rank) -> Result<Word, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Word::identity(rank));
    }
    if trimmed.chars().all(|c| c.is_ascii_alphabetic()) {
        parse_compact(text, rank)
    } else {
        parse_factors(text, rank)
    }
}

/// Canonical text of a word: the factor grammar (empty string for the
/// identity).
pub fn print(w: &Word) -> String {
    w.to_string()
}

/// Compact text of a word (rank at most 26): `a`..`z` for generators,
/// `A`..`Z` for inverses, one character per letter.
pub fn print_compact(w: &Word) -> Option<String> {
    if w.rank().get() > 26 {
        return None;
    }
    Some(
        w.letters()
            .iter()
            .map(|l| {
                let base = match l.sign() {
                    Sign::Plus => b'a',
                    Sign::Minus => b'A',
                };
                (base + (l.gen() - 1) as u8) as char
            })
            .collect(),
    )
}

fn parse_compact(text: &str, rank: Rank) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    for (pos, c) in text.char_indices() {
        if c.is_whitespace() {
            continue;
        }
        let (gen, sign) = if c.is_ascii_lowercase() {
            (c as u32 - 'a' as u32 + 1, Sign::Plus)
        } else if c.is_ascii_uppercase() {
            (c as u32 - 'A' as u32 + 1, Sign::Minus)
        } else {
            return err(format!("malformed letter `{c}`"), pos);
        };
        if gen > rank.get() {
            return err(
                format!("generator index {gen} exceeds rank {}", rank.get()),
                pos,
            );
        }
        letters.push(Letter::new(gen, sign).expect("index is positive"));
    }
    Word::reduce(rank, letters).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

fn parse_factors(text: &str, rank: Rank) -> Result<Word, ParseError> {
    let mut syllables: Vec<(u32, i64)> = Vec::new();
    let mut budget = MAX_PARSED_LETTERS;
    for (pos, token) in tokens(text) {
        let Some(body) = token.strip_prefix('x') else {
            return err(format!("malformed token `{token}`: expected `x<i>` or `x<i>^<e>`"), pos);
        };
        let (gen_text, exp_text) = match body.split_once('^') {
            Some((g, e)) => (g, Some(e)),
            None => (body, None),
        };
        let Ok(gen) = gen_text.parse::<u32>() else {
            return err(format!("malformed generator index in `{token}`"), pos);
        };
        if gen == 0 {
            return err(format!("generator index must be at least 1 in `{token}`"), pos);
        }
        if gen > rank.get() {
            return err(
                format!("generator index {gen} exceeds rank {}", rank.get()),
                pos,
            );
        }
        let exponent = match exp_text {
            None => 1,
            Some(e) => match e.parse::<i64>() {
                Ok(0) => return err(format!("zero exponent in `{token}`"), pos),
                Ok(v) => v,
                Err(_) => return err(format!("malformed exponent in `{token}`"), pos),
            },
        };
        budget = match budget.checked_sub(exponent.unsigned_abs()) {
            Some(b) => b,
            None => return err("word too long", pos),
        };
        syllables.push((gen, exponent));
    }
    Word::from_syllables(rank, &syllables).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

/// Free-product words: whitespace-separated `a<int>` / `b<int>` syllables
/// with nonzero integers, e.g. `a1 b-2 a3`.
pub fn parse_fp(text: &str) -> Result<FpWord, ParseError> {
    let mut raw: Vec<(Factor, i64)> = Vec::new();
    for (pos, token) in tokens(text) {
        let factor = match token.chars().next() {
            Some('a') => Factor::A,
            Some('b') => Factor::B,
            _ => return err(format!("malformed token `{token}`: expected `a<int>` or `b<int>`"), pos),
        };
        let Ok(element) = token[1..].parse::<i64>() else {
            return err(format!("malformed element in `{token}`"), pos);
        };
        if element == 0 {
            return err(format!("zero element in `{token}`"), pos);
        }
        raw.push((factor, element));
    }
    FpWord::from_syllables(&raw).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

pub fn print_fp(g: &FpWord) -> String {
    g.to_string()
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(|tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn factor_grammar_round_trips() {
        let w = parse("x1^2 x2^-3", r(2)).unwrap();
        assert_eq!(print(&w), "x1^2 x2^-3");
    }

    #[test]
    fn compact_grammar_reduces() {
        assert!(parse("aA", r(1)).unwrap().is_empty());
        assert_eq!(print(&parse("aabb", r(2)).unwrap()), "x1^2 x2^2");
        assert_eq!(print(&parse("Ba", r(2)).unwrap()), "x2^-1 x1");
    }

    #[test]
    fn unreduced_factor_text_reduces() {
        let w = parse("x1 x2 x2^-1 x1", r(2)).unwrap();
        assert_eq!(print(&w), "x1^2");
    }

    #[test]
    fn empty_input_is_the_identity() {
        assert!(parse("", r(2)).unwrap().is_empty());
        assert!(parse("  \n ", r(2)).unwrap().is_empty());
        assert_eq!(print(&Word::identity(r(2))), "");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x1 y2", r(2)).unwrap_err();
        assert_eq!(e.position, 3);
        assert!(e.message.contains("malformed token"));

        let e = parse("x1 x2^0", r(2)).unwrap_err();
        assert_eq!(e.position, 3);
        assert!(e.message.contains("zero exponent"));

        let e = parse("x3", r(2)).unwrap_err();
        assert!(e.message.contains("exceeds rank 2"));

        let e = parse("x0", r(2)).unwrap_err();
        assert!(e.message.contains("at least 1"));

        let e = parse("d", r(2)).unwrap_err();
        assert_eq!(e.position, 0);
        assert!(e.message.contains("exceeds rank"));
    }

    #[test]
    fn oversized_exponents_are_refused() {
        assert!(parse("x1^99999999999", r(2)).is_err());
    }

    #[test]
    fn compact_printing_inverts_parsing() {
        let w = parse("x1^2 x2^-1", r(2)).unwrap();
        assert_eq!(print_compact(&w).unwrap(), "aaB");
        assert_eq!(parse("aaB", r(2)).unwrap(), w);
    }

    #[test]
    fn fp_grammar_round_trips() {
        let g = parse_fp("a1 b-2 a3").unwrap();
        assert_eq!(print_fp(&g), "a1 b-2 a3");
        assert!(parse_fp("").unwrap().is_empty());
        assert!(parse_fp("c1").is_err());
        assert!(parse_fp("a0").is_err());
        // Adjacent same-factor syllables merge on parse.
        assert_eq!(print_fp(&parse_fp("a1 a2").unwrap()), "a3");
    }
}
