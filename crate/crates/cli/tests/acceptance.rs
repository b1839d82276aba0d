//! Runs the full regression check table and prints one line per entry.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the table.

use rindler_tangle_cli::checks::run_all;

#[test]
fn acceptance() {
    let results = run_all();
    assert_eq!(results.len(), 11);
    let mut failures = Vec::new();
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("[{status}] {:2}. {} -- {}", r.id, r.name, r.detail);
        if !r.passed {
            failures.push(r.id);
        }
    }
    assert!(failures.is_empty(), "failed checks: {failures:?}");
}
