//! Acceptance gate: one test per checklist criterion, each driving the
//! corresponding named verification suite in process and holding it to its
//! wall-clock budget. Budgets are pinned here; the suites pin the counts,
//! sizes, and tolerances. Run with `--nocapture` to see the PASS lines.

use std::process::Command;
use std::time::Instant;

use freewidth_cli::suites::run_suite;

const SEED: u64 = 1;

const SECOND: u128 = 1_000;
const MINUTE: u128 = 60 * SECOND;

fn check(name: &str, budget_ms: u128) {
    let report = run_suite(name, SEED).expect("suite name is registered");
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
    assert!(
        report.wall_ms < budget_ms,
        "suite {name} took {} ms, budget {budget_ms} ms",
        report.wall_ms
    );
}

#[test]
fn criterion_01_witness_delta() {
    check("witness-delta", SECOND);
}

#[test]
fn criterion_02_palindromes_have_delta_zero() {
    check("palindromes-delta-zero", 30 * SECOND);
}

#[test]
fn criterion_03_delta_antisymmetry() {
    check("delta-antisymmetry", 10 * SECOND);
}

#[test]
fn criterion_04_delta_defect_bound() {
    check("delta-defect", MINUTE);
}

#[test]
fn criterion_05_product_bound() {
    check("product-bound", 30 * SECOND);
}

#[test]
fn criterion_06_lower_bound_separation() {
    check("separation", SECOND);
}

#[test]
fn criterion_07_whitehead_soundness() {
    check("whitehead-soundness", 5 * MINUTE);
}

#[test]
fn criterion_08_hamiltonian_u_and_windows() {
    check("hamiltonian-windows", 30 * SECOND);
}

#[test]
fn criterion_09_ham_power_certificates() {
    check("ham-power", MINUTE);
}

#[test]
fn criterion_10_two_palindrome_decomposition() {
    check("two-palindromes", 5 * MINUTE);
}

#[test]
fn criterion_11_automorphism_defect_is_palindromic() {
    check("p-palindrome", 30 * SECOND);
}

#[test]
fn criterion_12_fresh_generator_decomposition() {
    check("fresh-gen", MINUTE);
}

#[test]
fn criterion_13_free_product_witness() {
    check("free-product", 10 * SECOND);
}

#[test]
fn criterion_14_oracle_agreement() {
    check("oracle-agreement", 10 * MINUTE);
}

#[test]
fn criterion_15_cli_surface() {
    let start = Instant::now();
    check("cli-formats", 15 * MINUTE);

    let status = Command::new(env!("CARGO_BIN_EXE_freewidth"))
        .args(["verify", "all", "--seed", "1"])
        .status()
        .expect("spawn freewidth");
    assert!(status.success(), "verify all --seed 1 exited {status}");
    assert!(
        start.elapsed().as_millis() < 15 * MINUTE,
        "criterion 15 exceeded its total budget"
    );
}
