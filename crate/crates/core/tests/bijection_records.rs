use mckay_core::bijection::{build_bijection, verify_bijection, Strategy};
use mckay_core::sym::enumerate_pprime;

#[test]
fn records_are_deterministic() {
    for (n, p) in [(31, 5), (40, 3), (28, 7)] {
        let a = build_bijection(n, p, Strategy::Recursive).unwrap();
        let b = build_bijection(n, p, Strategy::Recursive).unwrap();
        assert_eq!(a.json_lines(), b.json_lines());
    }
}

#[test]
fn pairs_follow_enumeration_order() {
    for s in [Strategy::Recursive, Strategy::Global] {
        let rec = build_bijection(33, 5, s).unwrap();
        let lambdas: Vec<_> = rec.pairs.iter().map(|p| p.lambda.clone()).collect();
        assert_eq!(lambdas, enumerate_pprime(33, 5));
    }
}

#[test]
fn larger_cases_verify() {
    for (n, p) in [(60, 5), (55, 7), (50, 11), (64, 2), (54, 3)] {
        let rec = build_bijection(n, p, Strategy::Recursive).unwrap();
        assert!(rec.anomalies.is_empty(), "{:?}", rec.anomalies);
        let rep = verify_bijection(&rec).unwrap();
        assert!(rep.passed, "n={n} p={p}: {:?}", rep.failures);
    }
}

#[test]
fn json_lines_carry_decimal_degrees() {
    let rec = build_bijection(10, 5, Strategy::Global).unwrap();
    for line in rec.json_lines().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["dS"].is_string() && v["dN"].is_string());
        let ds: u64 = v["dS"].as_str().unwrap().parse().unwrap();
        let dn: u64 = v["dN"].as_str().unwrap().parse().unwrap();
        assert!(dn <= ds);
    }
}
