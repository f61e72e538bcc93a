//! Command-line surface: argument grammar, dispatch to the library, and
//! output in plain text or JSONL run records.
//!
//! Exit codes: 0 success, 1 a `verify` suite failed, 2 usage or parse error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use freewidth::palindromes::{enumerate_palindromes, is_palindrome, pal_length_bounded};
use freewidth::quasihom::{delta, fp_delta, fp_witness, pal_witness};
use freewidth::whitehead::{is_primitive, whitehead_graph};
use freewidth::widths::{
    enumerate_primitives, fresh_gen_decompose, ham_power_cert, prim_decompose_two_pals,
    prim_length_bounded, HamPowerCert,
};
use freewidth::words::{Rank, Word};
use freewidth::Bracket;

use crate::dot::emit_dot;
use crate::record::RunRecord;
use crate::suites;
use crate::wordtext;

#[derive(Debug, Parser)]
#[command(
    name = "freewidth",
    version,
    about = "Palindromic and primitive widths of free-group words: reduction, \
             the syllable quasimorphism, Whitehead graphs and certificates, \
             bounded length searches, and deterministic verification suites."
)]
pub struct Cli {
    /// Free-group rank for word parsing.
    #[arg(long, global = true, default_value_t = 2)]
    pub rank: u32,

    /// Seed for every randomized suite; no other entropy is used.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Largest factor count the length searches may consider.
    #[arg(short = 'k', long, global = true)]
    pub max_k: Option<usize>,

    /// Factor length cap for the length searches and enumerations.
    #[arg(long, global = true)]
    pub len_cap: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Freely reduce a word and print its canonical text.
    Reduce { word: Option<String> },
    /// The syllable-comparison quasimorphism of a word.
    Delta { word: Option<String> },
    /// Palindrome predicates, bounded length search, and witness words.
    Pal {
        #[command(subcommand)]
        cmd: PalCmd,
    },
    /// Whitehead graph inspection.
    Wg {
        #[command(subcommand)]
        cmd: WgCmd,
    },
    /// Primitivity tests, certificates, and decompositions.
    Prim {
        #[command(subcommand)]
        cmd: PrimCmd,
    },
    /// The free-product quasimorphism.
    Fp {
        #[command(subcommand)]
        cmd: FpCmd,
    },
    /// Exhaustive enumerations.
    #[command(name = "enum")]
    Enumerate {
        #[command(subcommand)]
        cmd: EnumCmd,
    },
    /// Run a named verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Debug, Subcommand)]
pub enum PalCmd {
    /// Is the word a palindrome?
    Is { word: Option<String> },
    /// Bounded exact search for palindromic length.
    Length { word: Option<String> },
    /// The alternating staircase witness word with delta = n-1.
    Witness { n: u32 },
}

#[derive(Debug, Subcommand)]
pub enum WgCmd {
    /// Emit the Whitehead graph as DOT.
    Dot { word: Option<String> },
    /// Does the Whitehead graph have a cut vertex?
    Cut { word: Option<String> },
    /// Find a Hamiltonian cycle in the Whitehead graph.
    Ham { word: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum PrimCmd {
    /// Is the word primitive (Whitehead's algorithm)?
    Is { word: Option<String> },
    /// Bounded exact search for primitive length.
    Length { word: Option<String> },
    /// Power certificate for the doubled square word: u(rank)^{2k} needs
    /// more than k primitive factors (k from --max-k, default 1).
    Cert,
    /// Split a rank-2 primitive into two palindromes.
    #[command(name = "decompose2pal")]
    Decompose2Pal { word: Option<String> },
    /// Split any word as a product of two primitives using a fresh
    /// generator (default: rank of the word plus one).
    Fresh { word: Option<String>, fresh: Option<u32> },
}

#[derive(Debug, Subcommand)]
pub enum FpCmd {
    /// The free-product quasimorphism of an `a<int> b<int> ...` word.
    Delta { word: Option<String> },
    /// The alternating free-product witness with fp_delta = n-1.
    Witness { n: u32 },
}

#[derive(Debug, Subcommand)]
pub enum EnumCmd {
    /// All palindromes up to the length cap (default 6), one per line.
    Pals,
    /// All primitive elements up to the length cap (default 6), one per line.
    Prims,
}

/// Everything an executed command reports: text lines for the terminal and
/// structured values for the JSONL record.
struct Outcome {
    text: String,
    inputs: Vec<String>,
    outputs: serde_json::Value,
    certificates: serde_json::Value,
    /// Exit code demanded by the command itself (verify failures).
    code: i32,
}

impl Outcome {
    fn plain(text: impl Into<String>, outputs: serde_json::Value) -> Outcome {
        Outcome {
            text: text.into(),
            inputs: Vec::new(),
            outputs,
            certificates: serde_json::Value::Null,
            code: 0,
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits, not usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = cli.format;
    let out_path = cli.out.clone();
    let seed = cli.seed;
    let command_line = command_name(&cli.command);
    let start = Instant::now();
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let rendered = match format {
        Format::Text => {
            let mut t = outcome.text;
            if !t.is_empty() && !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Json => {
            let mut record = RunRecord::new(command_line, seed);
            record.inputs = outcome.inputs;
            record.outputs = outcome.outputs;
            record.certificates = outcome.certificates;
            record.wall_time_ms = start.elapsed().as_millis();
            let mut line = record.to_line();
            line.push('\n');
            line
        }
    };
    match out_path {
        Some(path) => {
            if let Err(e) = fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{rendered}"),
    }
    outcome.code
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Reduce { .. } => "reduce".into(),
        Command::Delta { .. } => "delta".into(),
        Command::Pal { cmd } => match cmd {
            PalCmd::Is { .. } => "pal is".into(),
            PalCmd::Length { .. } => "pal length".into(),
            PalCmd::Witness { .. } => "pal witness".into(),
        },
        Command::Wg { cmd } => match cmd {
            WgCmd::Dot { .. } => "wg dot".into(),
            WgCmd::Cut { .. } => "wg cut".into(),
            WgCmd::Ham { .. } => "wg ham".into(),
        },
        Command::Prim { cmd } => match cmd {
            PrimCmd::Is { .. } => "prim is".into(),
            PrimCmd::Length { .. } => "prim length".into(),
            PrimCmd::Cert => "prim cert".into(),
            PrimCmd::Decompose2Pal { .. } => "prim decompose2pal".into(),
            PrimCmd::Fresh { .. } => "prim fresh".into(),
        },
        Command::Fp { cmd } => match cmd {
            FpCmd::Delta { .. } => "fp delta".into(),
            FpCmd::Witness { .. } => "fp witness".into(),
        },
        Command::Enumerate { cmd } => match cmd {
            EnumCmd::Pals => "enum pals".into(),
            EnumCmd::Prims => "enum prims".into(),
        },
        Command::Verify { .. } => "verify".into(),
    }
}

fn rank_of(raw: u32) -> Result<Rank, String> {
    Rank::new(raw).map_err(|e| e.to_string())
}

/// Resolve a word argument: a literal, `-` for stdin, or stdin when absent.
fn word_arg(arg: Option<String>, rank: Rank) -> Result<(Word, String), String> {
    let text = match arg {
        Some(s) if s != "-" => s,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        }
    };
    let word = wordtext::parse(&text, rank).map_err(|e| e.to_string())?;
    let canonical = wordtext::print(&word);
    Ok((word, canonical))
}

fn fp_arg(arg: Option<String>) -> Result<(freewidth::quasihom::FpWord, String), String> {
    let text = match arg {
        Some(s) if s != "-" => s,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        }
    };
    let g = wordtext::parse_fp(&text).map_err(|e| e.to_string())?;
    let canonical = wordtext::print_fp(&g);
    Ok((g, canonical))
}

fn bracket_text(b: &Bracket) -> String {
    let lower_src = b.lower_source.as_str();
    let upper = match (b.upper, &b.upper_source) {
        (Some(u), Some(src)) => format!("{u} [{}]", src.as_str()),
        _ => "unknown".into(),
    };
    let mut line = format!("lower {} [{lower_src}], upper {upper}", b.lower);
    if let Some(witness) = &b.witness {
        let parts: Vec<String> = witness.iter().map(wordtext::print).collect();
        line.push_str(&format!("; witness: {}", parts.join(" | ")));
    }
    line.push_str(&format!(
        "; max_k {}, factor cap {}, enumerated to {}",
        b.max_k, b.factor_len_cap, b.factor_enum_len
    ));
    line
}

fn bracket_json(b: &Bracket) -> serde_json::Value {
    json!({
        "lower": b.lower,
        "lower_source": b.lower_source.as_str(),
        "upper": b.upper,
        "upper_source": b.upper_source.map(|s| s.as_str()),
        "witness": b.witness.as_ref().map(|ws| {
            ws.iter().map(wordtext::print).collect::<Vec<_>>()
        }),
        "exact": b.is_exact(),
        "max_k": b.max_k,
        "factor_len_cap": b.factor_len_cap,
        "factor_enum_len": b.factor_enum_len,
    })
}

fn cert_json(cert: &HamPowerCert) -> serde_json::Value {
    json!({
        "n": cert.n().get(),
        "k": cert.k(),
        "sl_u": cert.sl_u(),
        "sl_power": cert.sl_power(),
        "windows": cert.window_cycles().len(),
        "implied_lower_bound": cert.implied_lower_bound(),
        "transcript": cert.transcript(),
    })
}

fn letters_text(cycle: &[freewidth::words::Letter]) -> String {
    cycle
        .iter()
        .map(|l| match l.sign() {
            freewidth::words::Sign::Plus => format!("x{}", l.gen()),
            freewidth::words::Sign::Minus => format!("x{}'", l.gen()),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(cli: Cli) -> Result<Outcome, String> {
    let rank = rank_of(cli.rank)?;
    match cli.command {
        Command::Reduce { word } => {
            let (w, canonical) = word_arg(word, rank)?;
            let mut o = Outcome::plain(canonical.clone(), json!(canonical));
            o.inputs.push(wordtext::print(&w));
            Ok(o)
        }
        Command::Delta { word } => {
            let (w, canonical) = word_arg(word, rank)?;
            let d = delta(&w);
            let mut o = Outcome::plain(d.to_string(), json!(d));
            o.inputs.push(canonical);
            Ok(o)
        }
        Command::Pal { cmd } => match cmd {
            PalCmd::Is { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let ans = is_palindrome(&w);
                let mut o = Outcome::plain(ans.to_string(), json!(ans));
                o.inputs.push(canonical);
                Ok(o)
            }
            PalCmd::Length { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let max_k = cli.max_k.unwrap_or(4);
                let cap = cli.len_cap.unwrap_or(2 * w.len() + 2);
                let b = pal_length_bounded(&w, max_k, cap);
                let mut o = Outcome::plain(bracket_text(&b), bracket_json(&b));
                o.inputs.push(canonical);
                Ok(o)
            }
            PalCmd::Witness { n } => {
                let w = pal_witness(n).map_err(|e| e.to_string())?;
                let text = wordtext::print(&w);
                Ok(Outcome::plain(text.clone(), json!(text)))
            }
        },
        Command::Wg { cmd } => match cmd {
            WgCmd::Dot { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let dot = emit_dot(&whitehead_graph(&w));
                let mut o = Outcome::plain(dot.clone(), json!(dot));
                o.inputs.push(canonical);
                Ok(o)
            }
            WgCmd::Cut { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let ans = whitehead_graph(&w).has_cut_vertex();
                let mut o = Outcome::plain(ans.to_string(), json!(ans));
                o.inputs.push(canonical);
                Ok(o)
            }
            WgCmd::Ham { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let cycle = whitehead_graph(&w)
                    .is_hamiltonian()
                    .map_err(|e| e.to_string())?;
                let (text, value) = match &cycle {
                    Some(c) => (letters_text(c), json!(letters_text(c))),
                    None => ("none".to_string(), serde_json::Value::Null),
                };
                let mut o = Outcome::plain(text, value);
                o.inputs.push(canonical);
                Ok(o)
            }
        },
        Command::Prim { cmd } => match cmd {
            PrimCmd::Is { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let ans = is_primitive(&w);
                let mut o = Outcome::plain(ans.to_string(), json!(ans));
                o.inputs.push(canonical);
                Ok(o)
            }
            PrimCmd::Length { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let max_k = cli.max_k.unwrap_or(4);
                let cap = cli.len_cap.unwrap_or(2 * w.len() + 2);
                let b = prim_length_bounded(&w, max_k, cap);
                let mut o = Outcome::plain(bracket_text(&b), bracket_json(&b));
                o.inputs.push(canonical);
                if let Some(cert) = &b.ham_power {
                    o.certificates = cert_json(cert);
                }
                Ok(o)
            }
            PrimCmd::Cert => {
                let k = cli.max_k.unwrap_or(1) as u32;
                let cert = ham_power_cert(rank, k).map_err(|e| e.to_string())?;
                let text = format!(
                    "{}\nlower bound: {}",
                    cert.transcript(),
                    cert.implied_lower_bound()
                );
                let mut o = Outcome::plain(text, json!(cert.implied_lower_bound()));
                o.certificates = cert_json(&cert);
                Ok(o)
            }
            PrimCmd::Decompose2Pal { word } => {
                let (w, canonical) = word_arg(word, rank)?;
                let (p1, p2) = prim_decompose_two_pals(&w).map_err(|e| e.to_string())?;
                let (t1, t2) = (wordtext::print(&p1), wordtext::print(&p2));
                let mut o = Outcome::plain(format!("{t1}\n{t2}"), json!([t1, t2]));
                o.inputs.push(canonical);
                Ok(o)
            }
            PrimCmd::Fresh { word, fresh } => {
                let (w, canonical) = word_arg(word, rank)?;
                let fresh = fresh.unwrap_or(w.rank().get() + 1);
                let (a, b) = fresh_gen_decompose(&w, fresh).map_err(|e| e.to_string())?;
                let (t1, t2) = (wordtext::print(&a), wordtext::print(&b));
                let mut o = Outcome::plain(format!("{t1}\n{t2}"), json!([t1, t2]));
                o.inputs.push(canonical);
                Ok(o)
            }
        },
        Command::Fp { cmd } => match cmd {
            FpCmd::Delta { word } => {
                let (g, canonical) = fp_arg(word)?;
                let d = fp_delta(&g);
                let mut o = Outcome::plain(d.to_string(), json!(d));
                o.inputs.push(canonical);
                Ok(o)
            }
            FpCmd::Witness { n } => {
                let g = fp_witness(n).map_err(|e| e.to_string())?;
                let text = wordtext::print_fp(&g);
                Ok(Outcome::plain(text.clone(), json!(text)))
            }
        },
        Command::Enumerate { cmd } => match cmd {
            EnumCmd::Pals => {
                let max_len = cli.len_cap.unwrap_or(6);
                let pals = enumerate_palindromes(rank, max_len);
                let lines: Vec<String> = pals.iter().map(wordtext::print).collect();
                Ok(Outcome::plain(lines.join("\n"), json!(lines)))
            }
            EnumCmd::Prims => {
                let max_len = cli.len_cap.unwrap_or(6);
                let prims = enumerate_primitives(rank, max_len).map_err(|e| e.to_string())?;
                let lines: Vec<String> = prims.iter().map(wordtext::print).collect();
                Ok(Outcome::plain(lines.join("\n"), json!(lines)))
            }
        },
        Command::Verify { suite } => {
            let reports = if suite == "all" {
                suites::run_all(cli.seed)
            } else {
                match suites::run_suite(&suite, cli.seed) {
                    Some(r) => vec![r],
                    None => {
                        return Err(format!(
                            "unknown suite `{suite}`; known: all, {}",
                            suites::SUITE_NAMES.join(", ")
                        ))
                    }
                }
            };
            let text: Vec<String> = reports.iter().map(|r| r.line()).collect();
            let all_passed = reports.iter().all(|r| r.passed);
            let outputs = serde_json::Value::Array(
                reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "passed": r.passed,
                            "wall_ms": r.wall_ms,
                            "details": r.details,
                        })
                    })
                    .collect(),
            );
            Ok(Outcome {
                text: text.join("\n"),
                inputs: vec![suite],
                outputs,
                certificates: serde_json::Value::Null,
                code: if all_passed { 0 } else { 1 },
            })
        }
    }
}
