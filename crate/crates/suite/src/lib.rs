//! Reporting for the acceptance target in `tests/acceptance.rs`.
//!
//! The criteria themselves live in `perioddomain::suite`; this crate only
//! prints them. It is a separate package so that the acceptance target runs
//! after every other test target of the workspace.

use std::io::Write;

use perioddomain::suite::CriterionResult;

/// Writes a block of lines to the process stderr in one piece. Going through
/// the raw handle keeps the output visible for passing tests, which the test
/// harness would otherwise capture.
pub fn emit(lines: &[String]) {
    let mut text = lines.join("\n");
    text.push('\n');
    let mut err = std::io::stderr().lock();
    err.write_all(text.as_bytes()).expect("stderr is writable");
}

/// Emits the PASS/FAIL line with notes and listed failures, then asserts.
pub fn report(c: CriterionResult) {
    let mut lines = vec![c.line()];
    lines.extend(c.notes.iter().map(|n| format!("    note: {n}")));
    lines.extend(c.failures.iter().map(|f| format!("    fail: {f}")));
    emit(&lines);
    assert!(c.passed, "criterion {} failed: {} of {} checks", c.id, c.failure_count, c.checked);
}
