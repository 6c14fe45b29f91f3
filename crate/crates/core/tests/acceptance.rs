//! End-to-end acceptance gate: one line per criterion, all must pass.

use gfrob_core::verify::run_acceptance;

#[test]
fn acceptance() {
    let outcomes = run_acceptance().expect("acceptance runner should not error");
    let mut all = true;
    for o in &outcomes {
        println!(
            "{}  {}  [{}]",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
        all &= o.passed;
    }
    assert!(all, "some acceptance criteria failed");
}
