use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::json;

use super::{outcome, run, CheckResult, Outcome};
use crate::bijection::{build_bijection, verify_bijection, Strategy};
use crate::error::invalid;
use crate::lr::lr_coeff;
use crate::normalizer::{distinguished_subset, enum_norm_n, Family, WreathAssignment};
use crate::scalar::big_pow;
use crate::sym::{add_hook_partitions, count_pprime, delta_stratum, enumerate_pprime, enumerate_pprime_bruteforce};
use crate::{core_quotient, is_core, Partition};

/// `|Irr_{p'}(S_n)| = |Irr_{p'}(N_n)|` by two unrelated enumerations, plus
/// the digit-product count and, for small `n`, a brute-force filter.
pub fn check_counting(n: usize, p: usize) -> CheckResult {
    run("mckay_count", json!({ "n": n, "p": p }), || {
        let s = enumerate_pprime(n, p).len();
        let norm = enum_norm_n(n, p)?.len();
        let product = count_pprime(n, p);
        let brute = (n <= 30).then(|| enumerate_pprime_bruteforce(n, p).len());
        let ok = s == norm && BigUint::from(s) == product && brute.is_none_or(|b| b == s);
        Ok(outcome(
            ok,
            json!({ "symmetric": s, "normalizer": norm, "digitProduct": product.to_string(), "bruteForce": brute }),
        ))
    })
}

/// Closed forms for the sizes of `Δ_a`, `Δ_{a−1}`, `Δ_{a−2}` and, at level
/// one with `a ≥ 8`, `Δ_{a−3}`, where they apply.
pub fn delta_closed_forms(p: usize, k: u32, a: usize) -> Vec<(usize, BigUint)> {
    let q = big_pow(p as u64, k);
    let q2 = &q * &q;
    let mut out = Vec::new();
    if a >= 2 {
        out.push((a, &q * 2u32));
    }
    if a == 3 {
        out.push((a - 1, &q2 * 2u32 - &q));
    } else if a >= 4 {
        out.push((a - 1, &q2 * 2u32));
    }
    if a >= 6 {
        out.push((a - 2, &q2 * &q + &q2 * 3u32));
    }
    if k == 1 && a >= 8 {
        // p^2 (p^2 + 9p + 8) / 3
        let pb = BigUint::from(p);
        out.push((a - 3, &pb * &pb * (&pb * &pb + &pb * 9u32 + 8u32) / 3u32));
    }
    out
}

pub fn check_delta_sizes(p: usize, k: u32, a: usize, gamma: &Partition) -> CheckResult {
    run("delta_sizes", json!({ "p": p, "k": k, "a": a, "gamma": gamma }), || {
        let forms = delta_closed_forms(p, k, a);
        if forms.is_empty() {
            return Ok(Outcome::Skipped(format!("no closed form for a = {a}")));
        }
        let mut rows = Vec::new();
        let mut ok = true;
        for (x, want) in forms {
            let got = delta_stratum(p, k, a, gamma, x)?.len();
            ok &= BigUint::from(got) == want;
            rows.push(json!({ "x": x, "enumerated": got, "closedForm": want.to_string() }));
        }
        Ok(outcome(ok, json!(rows)))
    })
}

/// Generated family sizes against their closed forms, plus the per-family
/// degree bound.
pub fn check_subset_sizes(p: usize, k: u32, a: usize) -> CheckResult {
    run("subset_sizes", json!({ "p": p, "k": k, "a": a }), || {
        let mut rows = Vec::new();
        let mut ok = true;
        for fam in Family::ALL.into_iter().filter(|f| f.admits(p, k, a)) {
            let members = distinguished_subset(p, k, a, fam)?;
            let want = fam.closed_size(p, k, a);
            let bound = fam.degree_bound(p, a);
            let max = members.iter().map(WreathAssignment::degree).max();
            let size_ok = want.as_ref().is_none_or(|w| *w == BigUint::from(members.len()));
            let bound_ok = max.as_ref().is_none_or(|m| *m <= bound);
            ok &= size_ok && bound_ok;
            rows.push(json!({
                "family": fam.name(),
                "generated": members.len(),
                "closedForm": want.map(|w| w.to_string()),
                "maxDegree": max.map(|m| m.to_string()),
                "degreeBound": bound.to_string(),
            }));
        }
        if rows.is_empty() {
            return Ok(Outcome::Skipped(format!("no family defined for p={p}, k={k}, a={a}")));
        }
        Ok(outcome(ok, json!(rows)))
    })
}

/// For an `x`-core `γ`: the partitions built by adding an `x`-hook to `γ`
/// are exactly the partitions with `x`-core `γ`, and the `i`-th one has a
/// nonzero LR coefficient against `(x−i, 1^i)` and `γ`.
pub fn check_hook_addition(gamma: &Partition, x: usize) -> CheckResult {
    run("hook_addition", json!({ "gamma": gamma, "x": x }), || {
        if x == 0 || !is_core(gamma, x) {
            return Err(invalid(format!("{gamma} is not a {x}-core")));
        }
        let n = gamma.size() + x;
        let built = add_hook_partitions(gamma, x)?;
        let want: BTreeSet<Partition> =
            Partition::all(n).into_iter().filter(|l| core_quotient(l, x).core == *gamma).collect();
        let got: BTreeSet<Partition> = built.iter().cloned().collect();
        let mut missing_lr = Vec::new();
        for (i, lambda) in built.iter().enumerate() {
            if lr_coeff(lambda, &Partition::hook(x, i), gamma)? == 0 {
                missing_lr.push(lambda.clone());
            }
        }
        let ok = got == want && built.len() == x && missing_lr.is_empty();
        Ok(outcome(ok, json!({ "built": built, "expectedCount": want.len(), "zeroLr": missing_lr })))
    })
}

/// Builds the bijection and re-verifies it from scratch.
pub fn check_bijection(n: usize, p: usize, strategy: Strategy) -> CheckResult {
    run("degree_dominating_bijection", json!({ "n": n, "p": p, "strategy": strategy }), || {
        let rec = build_bijection(n, p, strategy)?;
        let rep = verify_bijection(&rec)?;
        let fallbacks = rec.block_trace.iter().filter(|t| !t.endpoint_rule).count();
        Ok(outcome(
            rep.passed,
            json!({ "pairs": rec.pairs.len(), "failures": rep.failures, "anomalies": rec.anomalies, "endpointFallbacks": fallbacks }),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn counting_examples() {
        assert!(check_counting(30, 5).passed());
        assert!(check_counting(17, 2).passed());
    }

    #[test]
    fn delta_examples() {
        let r = check_delta_sizes(5, 1, 6, &part![]);
        assert!(r.passed(), "{:?}", r.witness);
        let rows = r.witness.unwrap();
        assert!(rows.as_array().unwrap().iter().any(|row| row["x"] == 4 && row["enumerated"] == 200));
        assert_eq!(check_delta_sizes(5, 1, 1, &part![]).status, super::super::Status::Skipped);
    }

    #[test]
    fn delta_a_minus_three() {
        // 11^2 (121 + 99 + 8) / 3
        assert_eq!(delta_closed_forms(11, 1, 8).last().unwrap().1, BigUint::from(9196u32));
        let r = check_delta_sizes(11, 1, 8, &part![]);
        assert!(r.passed(), "{:?}", r.witness);
    }

    #[test]
    fn subsets_and_hooks() {
        for a in 2..5 {
            assert!(check_subset_sizes(5, 1, a).passed());
        }
        assert!(check_hook_addition(&part![2, 1], 5).passed());
        assert!(check_hook_addition(&part![], 4).passed());
        assert!(!check_hook_addition(&part![2], 2).passed());
    }

    #[test]
    fn bijection_check() {
        let r = check_bijection(13, 5, Strategy::Recursive);
        assert!(r.passed(), "{:?}", r.witness);
    }
}
