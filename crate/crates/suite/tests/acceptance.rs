//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! followed by its notes and the first few failures. The last test checks
//! the string-branch identity used by the nonnegativity argument.

use std::sync::Arc;

use perioddomain::chevalley::WeylBasis;
use perioddomain::hodge::HodgeDatum;
use perioddomain::rootsys::RootSystem;
use perioddomain::suite::{self, hodge_catalog, SuiteConfig};
use perioddomain_suite::{emit, report};

fn cfg() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn criterion_01_structure_constants() {
    report(suite::criterion_1(&cfg()));
}

#[test]
fn criterion_02_conjugations() {
    report(suite::criterion_2(&cfg()));
}

#[test]
fn criterion_03_helgason_cocycle() {
    report(suite::criterion_3(&cfg()));
}

#[test]
fn criterion_04_root_string_identity() {
    report(suite::criterion_4(&cfg()));
}

#[test]
fn criterion_05_oracle_equivalence() {
    report(suite::criterion_5(&cfg()));
}

#[test]
fn criterion_06_nonnegativity() {
    report(suite::criterion_6(&cfg()));
}

#[test]
fn criterion_07_block_argument() {
    report(suite::criterion_7(&cfg()));
}

#[test]
fn criterion_08_hirsch_formula() {
    report(suite::criterion_8(&cfg()));
}

#[test]
fn criterion_09_betti_table() {
    report(suite::criterion_9(&cfg()));
}

#[test]
fn criterion_10_pontryagin() {
    report(suite::criterion_10(&cfg()));
}

#[test]
fn criterion_11_classification_gates() {
    report(suite::criterion_11(&cfg()));
}

#[test]
fn criterion_12_determinism() {
    report(suite::criterion_12(&cfg()));
}

/// `N_{α,β}² = −⟨α,β⟩` whenever `⟨α,β⟩ < 0` for horizontal `α, β`.
#[test]
fn invariant_string_branch_identity() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for spec in hodge_catalog(cfg().max_rank) {
        let rs = Arc::new(RootSystem::new(spec.cartan_type.parse().unwrap()));
        let wb = WeylBasis::new(Arc::clone(&rs));
        let hd = HodgeDatum::from_marking(Arc::clone(&rs), &spec.marking).unwrap();
        for &a in hd.horizontal() {
            for &b in hd.horizontal() {
                let ip = rs.ip(a, b);
                if ip >= 0.into() {
                    continue;
                }
                checked += 1;
                if wb.n_sq(a, b) != -ip {
                    failures.push(format!("{}: a = {}, b = {}, N^2 = {}, <a,b> = {}", hd.label(), rs.root(a), rs.root(b), wb.n_sq(a, b), ip));
                }
            }
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut lines = vec![format!("{status} invariant: string branch N^2 = -<a,b> ({checked} checked, {} failed)", failures.len())];
    lines.extend(failures.iter().map(|f| format!("    fail: {f}")));
    emit(&lines);
    assert!(failures.is_empty());
}
