use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::engine::{build_bijection, BijectionRecord, Strategy};
use crate::error::Result;
use crate::normalizer::{enum_norm_apk, enum_norm_n, Digit, NormalizerCharLabel, WreathAssignment};
use crate::sym::{count_pprime, top_digit};
use crate::{core_quotient, degree, Partition};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Re-derives everything in `rec` from scratch: the map must be a bijection
/// onto both sides, stored degrees must match recomputed ones, and
/// `dS ≥ dN` must hold pairwise. Records built recursively must also send
/// each `p^k`-core block onto a single lower label, namely the image of the
/// core under the bijection one level down.
///
/// Neither side is materialized. The partitions must be distinct, of size `n`
/// and of `p'`-degree, and their number must match the digit-product count.
/// The labels must be distinct and must lie in (top-digit labels) ×
/// `Irr_{p'}(N_r)`, and their number must be the size of that product. By
/// counting, this is the same as equality with the full enumerations.
pub fn verify_bijection(rec: &BijectionRecord) -> Result<VerifyReport> {
    let (n, p) = (rec.n, rec.p);
    let mut failures = Vec::new();

    let lambdas: BTreeSet<&Partition> = rec.pairs.iter().map(|x| &x.lambda).collect();
    if lambdas.len() != rec.pairs.len() {
        failures.push("a partition is matched twice".into());
    }
    let want = count_pprime(n, p);
    if BigUint::from(rec.pairs.len()) != want {
        failures.push(format!("{} pairs but |Irr_p'(S_{n})| = {want}", rec.pairs.len()));
    }
    for l in lambdas.iter().filter(|l| l.size() != n || (degree(l) % p).is_zero()) {
        failures.push(format!("{l} is not a p'-partition of {n}"));
    }
    drop(lambdas);

    let labels: BTreeSet<&NormalizerCharLabel> = rec.pairs.iter().map(|x| &x.label).collect();
    if labels.len() != rec.pairs.len() {
        failures.push("a normalizer label is used twice".into());
    }
    if n < p {
        let all = enum_norm_n(n, p)?;
        if labels != all.iter().collect() {
            failures.push(format!("codomain differs from Irr_p'(N_{n})"));
        }
    } else {
        let d = top_digit(n, p);
        let tops: BTreeSet<WreathAssignment> = enum_norm_apk(p, d.k, d.a)?.into_iter().collect();
        let lower = enum_norm_n(d.r, p)?;
        let lower_keys: BTreeSet<(&[Digit], &Partition)> = lower.iter().map(|l| (&l.digits[..], &l.tail)).collect();
        if tops.len() * lower.len() != rec.pairs.len() {
            failures.push(format!("{} pairs but |Irr_p'(N_{n})| = {}", rec.pairs.len(), tops.len() * lower.len()));
        }
        for label in &labels {
            let ok = label.digits.split_first().is_some_and(|(top, rest)| {
                top.k == d.k && top.a == d.a && tops.contains(&top.assign) && lower_keys.contains(&(rest, &label.tail))
            });
            if !ok {
                failures.push(format!("{label} is not a p'-character of N_{n}"));
            }
        }
    }
    drop(labels);

    for pair in &rec.pairs {
        if degree(&pair.lambda) != pair.global_degree {
            failures.push(format!("stored degree of {} is wrong", pair.lambda));
        }
        if pair.label.degree() != pair.local_degree {
            failures.push(format!("stored degree of {} is wrong", pair.label));
        }
        if pair.global_degree < pair.local_degree {
            failures.push(format!("{} -> {}: {} < {}", pair.lambda, pair.label, pair.global_degree, pair.local_degree));
        }
    }

    if rec.strategy == Strategy::Recursive && rec.anomalies.is_empty() && n >= p {
        let d = top_digit(n, p);
        let mut blocks: BTreeMap<Partition, BTreeSet<NormalizerCharLabel>> = BTreeMap::new();
        for pair in &rec.pairs {
            blocks.entry(core_quotient(&pair.lambda, d.pk).core).or_default().insert(pair.label.lower());
        }
        let lower = build_bijection(d.r, p, Strategy::Recursive)?;
        for pair in &lower.pairs {
            match blocks.get(&pair.lambda) {
                Some(set) if set.len() == 1 && set.contains(&pair.label) => {}
                Some(set) => failures.push(format!("block over {} maps to lower labels {set:?}", pair.lambda)),
                None => failures.push(format!("no block over {}", pair.lambda)),
            }
        }
    }

    Ok(VerifyReport { passed: failures.is_empty(), failures })
}
