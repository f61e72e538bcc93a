//! Algebra of free-group words with the machinery to bound how many
//! palindromes or primitive elements are needed to write a given word:
//! freely reduced words and their syllable decompositions, the
//! syllable-comparison quasimorphism and its free-product analogue,
//! palindrome tooling, Whitehead graphs and automorphisms with
//! primitivity tests and certificates, factored automorphisms of rank 2
//! with their palindromic defects, and bounded exact length searches.

#![forbid(unsafe_code)]

pub mod autos;
pub mod bracket;
mod factor_search;
pub mod palindromes;
pub mod quasihom;
pub mod whitehead;
pub mod widths;
pub mod words;

pub use bracket::{BoundSource, Bracket, PalBracket, PrimBracket};
pub use palindromes::{is_palindrome, pal_length_bounded, palindromize, theta};
pub use quasihom::{delta, delta_defect, pal_lower_bound_from_delta, pal_witness};
pub use whitehead::{is_primitive, nonprimitivity_certificate, whitehead_graph};
pub use widths::{prim_length_bounded, u_word};
pub use words::{Letter, Rank, Sign, Word, WordError};
