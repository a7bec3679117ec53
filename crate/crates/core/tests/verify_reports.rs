use ballotlab::oddorder::conjecture_wz_records;
use ballotlab::verify::{bnd_multinomial, cmd_verify, run_identity, Status, IDENTITIES};
use ballotlab::Exec;
use num_bigint::BigUint;

#[test]
fn filter_preserves_table_order() {
    let filter = vec!["spiro".to_string(), "bdn".to_string()];
    let reports = cmd_verify(&filter, Some(6)).unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r.identity.as_str()).collect();
    assert_eq!(ids, ["bdn", "spiro"]);
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(cmd_verify(&["nope".to_string()], None).is_err());
    assert!(run_identity("nope", None).is_err());
}

#[test]
fn e17_at_zero_skips_excluded_triple() {
    let r = run_identity("e17", Some(0)).unwrap();
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn bdn_reports_counts() {
    let r = run_identity("bdn", Some(9)).unwrap();
    let counts: Vec<String> =
        r.parameters["counts"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    assert_eq!(counts, ["1", "1", "1", "3", "9", "45", "225", "1575", "11025", "99225"]);
}

#[test]
fn conjecture_is_labelled_as_evidence() {
    let r = run_identity("conjecture-wz", Some(6)).unwrap();
    assert!(r.passed());
    assert_eq!(r.label.as_deref(), Some("consistent up to n = 6"));
    assert!(conjecture_wz_records(2, Exec::default()).unwrap().is_empty());
    let rec = conjecture_wz_records(3, Exec::default()).unwrap();
    let r = rec.iter().find(|r| r.d == 1 && r.j == 2).unwrap();
    assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.equal), ("2", "2", true));
}

#[test]
fn every_identity_passes_at_small_size() {
    let reports = cmd_verify(&[], Some(5)).unwrap();
    assert_eq!(reports.len(), IDENTITIES.len());
    for r in reports {
        assert!(r.passed(), "{}", r.to_json_line());
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn multinomial_values() {
    assert_eq!(bnd_multinomial(5, 1).unwrap(), BigUint::from(22u32));
    assert_eq!(bnd_multinomial(1, 0).unwrap(), BigUint::from(1u32));
}
