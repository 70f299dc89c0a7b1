use fusionkit::errata::{ErratumKind, Ledger};
use fusionkit::fusion::{cross_check_verlinde, fuse, FusionTable};
use fusionkit::smatrix::{build_partial_s, compare_with, known_ids, AppendixFixture, PartialSMatrix};
use fusionkit::verify::{run_suite, Status, Suite};
use fusionkit::verlinde::VerlindeEngine;
use fusionkit::ModuleId;

#[test]
fn matrix_json_round_trips() {
    let s = build_partial_s().unwrap();
    let text = serde_json::to_string(&s).unwrap();
    let back: PartialSMatrix = serde_json::from_str(&text).unwrap();
    for i in ModuleId::all() {
        for j in ModuleId::all() {
            assert_eq!(s.scaled(i, j), back.scaled(i, j));
        }
    }
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["entries"][10][9]["sqrt18_s"], "e^{8πi/9}");
    assert!(doc["entries"][1][1].is_null());
}

#[test]
fn table_is_the_verlinde_ring_on_k0() {
    let engine = VerlindeEngine::new(&build_partial_s().unwrap());
    let report = cross_check_verlinde(&engine).unwrap();
    assert_eq!(report.triples, 13 * 13 * 13);
    assert!(report.mismatches.is_empty());
    let table = FusionTable::new();
    for i in known_ids() {
        for j in known_ids() {
            if let Ok(v) = engine.complete_product(i, j) {
                assert_eq!(&v, table.product(i, j));
            }
        }
    }
}

#[test]
fn missing_appendix_cell_is_reported() {
    let s = build_partial_s().unwrap();
    let fixture = AppendixFixture::printed().clone().without(7, 6);
    assert!(compare_with(&s, &fixture).is_err());
}

#[test]
fn simple_current_products() {
    let v = |i| ModuleId::of(i);
    assert_eq!(fuse(v(3), v(3)).to_string(), "V+0 + V+1 + V+2 + 2·V-");
    assert_eq!(fuse(v(1), v(1)).to_string(), "V+2");
    assert_eq!(fuse(v(1), v(2)).to_string(), "V+0");
}

#[test]
fn full_run_is_clean_with_shipped_ledger() {
    let report = run_suite(Suite::All, &Ledger::shipped());
    assert!(report.passed(), "{}", report.to_text());
    let expected: usize = report.checks.iter().filter(|c| c.status == Status::ExpectedDiscrepancy).count();
    assert_eq!(expected, Ledger::shipped().entries.len());
    // Dropping an entry turns its discrepancy into a failure.
    let mut ledger = Ledger::shipped();
    ledger.entries.retain(|e| e.kind != ErratumKind::ClassSumTension);
    let report = run_suite(Suite::ClassSum, &ledger);
    assert_eq!(report.check("class-sum.tension").unwrap().status, Status::Fail);
}
