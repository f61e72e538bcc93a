//! Command-line front end for the `freewidth` library: word text grammar,
//! DOT rendering, JSONL run records, seeded sampling, brute-force oracles,
//! and the named verification suites behind `freewidth verify`.

pub mod app;
pub mod dot;
pub mod oracle;
pub mod record;
pub mod sample;
pub mod suites;
pub mod wordtext;
