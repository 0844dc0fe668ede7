use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::labels::{enum_norm_pk, NormPkLabel};
use crate::error::{invalid, Error, Result};
use crate::scalar::{factorial, is_prime};
use crate::sym::top_digit;
use crate::{degree, Partition};

/// A p'-degree character of `N_{p^k} ≀ S_a`: distinct labels `θ_i` of
/// `N_{p^k}` carrying nonempty partitions `μ_i` with `Σ|μ_i| = a`.
/// Entries are sorted by label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathAssignment(Vec<(NormPkLabel, Partition)>);

impl WreathAssignment {
    pub fn new(mut entries: Vec<(NormPkLabel, Partition)>) -> Result<Self> {
        entries.sort();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(invalid("assignment repeats a label"));
        }
        if entries.iter().any(|(_, mu)| mu.is_empty()) {
            return Err(invalid("assignment carries an empty partition"));
        }
        Ok(WreathAssignment(entries))
    }

    pub fn entries(&self) -> &[(NormPkLabel, Partition)] {
        &self.0
    }

    pub fn a(&self) -> usize {
        self.0.iter().map(|(_, mu)| mu.size()).sum()
    }

    /// `∏ θ_i(1)^{|μ_i|} · ∏ χ^{μ_i}(1) · a! / ∏ |μ_i|!`.
    pub fn degree(&self) -> BigUint {
        let mut acc = factorial(self.a());
        for (theta, mu) in &self.0 {
            acc *= theta.degree().pow(mu.size() as u32) * degree(mu);
            acc /= factorial(mu.size());
        }
        acc
    }
}

impl Serialize for WreathAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            zset: &'a [u32],
            twist: &'a [usize],
            mu: &'a Partition,
        }
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (theta, mu) in &self.0 {
            seq.serialize_element(&Entry { zset: &theta.zset, twist: &theta.twist, mu })?;
        }
        seq.end()
    }
}

/// One base-`p` digit `a·p^k` of `n` with its wreath-product character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digit {
    pub k: u32,
    pub a: usize,
    pub assign: WreathAssignment,
}

impl Serialize for Digit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Digit", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("assign", &self.assign)?;
        st.end()
    }
}

/// A p'-degree character of `N_n = ∏ (N_{p^k} ≀ S_{a_k}) × S_{a_0}`.
/// Digits are listed from the highest power of `p` down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalizerCharLabel {
    pub digits: Vec<Digit>,
    pub tail: Partition,
}

impl NormalizerCharLabel {
    pub fn degree(&self) -> BigUint {
        self.digits.iter().fold(degree(&self.tail), |acc, d| acc * d.assign.degree())
    }

    /// The label of `N_r` obtained by dropping the leading digit.
    pub fn lower(&self) -> NormalizerCharLabel {
        NormalizerCharLabel { digits: self.digits.get(1..).unwrap_or_default().to_vec(), tail: self.tail.clone() }
    }

    /// Prepends a digit to a label of a smaller normalizer.
    pub fn with_top(top: Digit, rest: &NormalizerCharLabel) -> Self {
        let mut digits = Vec::with_capacity(rest.digits.len() + 1);
        digits.push(top);
        digits.extend(rest.digits.iter().cloned());
        NormalizerCharLabel { digits, tail: rest.tail.clone() }
    }

    pub fn identity(tail: Partition) -> Self {
        NormalizerCharLabel { digits: Vec::new(), tail }
    }
}

/// Every assignment of total size `a` over the `p^k` labels, in
/// lexicographic order.
pub fn enum_norm_apk(p: usize, k: u32, a: usize) -> Result<Vec<WreathAssignment>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if a == 0 || a >= p {
        return Err(invalid(format!("wreath factor {a} must lie in [1, {}]", p - 1)));
    }
    let labels = enum_norm_pk(p, k);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    assign_rec(&labels, a, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

fn assign_rec(
    labels: &[NormPkLabel],
    rest: usize,
    cur: &mut Vec<(NormPkLabel, Partition)>,
    out: &mut Vec<WreathAssignment>,
) {
    if rest == 0 {
        out.push(WreathAssignment(cur.clone()));
        return;
    }
    let Some((first, others)) = labels.split_first() else {
        return;
    };
    for s in 1..=rest {
        for mu in Partition::all(s) {
            cur.push((first.clone(), mu));
            assign_rec(others, rest - s, cur, out);
            cur.pop();
        }
    }
    assign_rec(others, rest, cur, out);
}

/// The largest degree in `Irr_{p'}(N_{p^k} ≀ S_a)` by exhaustion.
pub fn max_degree_apk(p: usize, k: u32, a: usize) -> Result<BigUint> {
    Ok(enum_norm_apk(p, k, a)?.iter().map(WreathAssignment::degree).max().unwrap_or_else(BigUint::one))
}

/// All of `Irr_{p'}(N_n)`: digit characters from the top digit down, with a
/// character of `S_{a_0}` last.
pub fn enum_norm_n(n: usize, p: usize) -> Result<Vec<NormalizerCharLabel>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if n < p {
        return Ok(Partition::all(n).into_iter().map(NormalizerCharLabel::identity).collect());
    }
    let d = top_digit(n, p);
    let lower = enum_norm_n(d.r, p)?;
    let tops = enum_norm_apk(p, d.k, d.a)?;
    let mut out = Vec::with_capacity(lower.len() * tops.len());
    for assign in tops {
        let top = Digit { k: d.k, a: d.a, assign };
        for rest in &lower {
            out.push(NormalizerCharLabel::with_top(top.clone(), rest));
        }
    }
    Ok(out)
}

fn join(v: &[impl fmt::Display]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
}

impl fmt::Display for WreathAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(t, mu)| format!("{t}:{}", join(mu.parts()))).collect();
        write!(f, "<{}>", parts.join("+"))
    }
}

impl fmt::Display for NormalizerCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{}x{}{} ", d.a, d.k, d.assign)?;
        }
        write!(f, "S{}", join(self.tail.parts()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::sym::{count_tuples, enumerate_pprime};
    use num_bigint::BigUint;
    use num_traits::Zero;

    #[test]
    fn max_degree_three() {
        assert_eq!(max_degree_apk(5, 1, 3).unwrap(), BigUint::from(128u32));
        let one: Vec<_> = enum_norm_apk(5, 1, 1).unwrap().iter().map(WreathAssignment::degree).collect();
        let mut one_sorted = one.clone();
        one_sorted.sort();
        let want: Vec<BigUint> = [1u32, 1, 1, 1, 4].iter().map(|&x| x.into()).collect();
        assert_eq!(one_sorted, want);
        assert!(enum_norm_apk(5, 1, 5).is_err());
        assert!(enum_norm_apk(4, 1, 1).is_err());
    }

    #[test]
    fn counts_and_coprimality() {
        for p in [5usize, 7] {
            for k in 1..=2u32 {
                for a in 1..p {
                    if k == 2 && p == 7 && a > 3 {
                        continue;
                    }
                    let all = enum_norm_apk(p, k, a).unwrap();
                    assert_eq!(BigUint::from(all.len()), count_tuples(p.pow(k), a));
                    assert!(all.iter().all(|w| !(w.degree() % p).is_zero()));
                }
            }
        }
        assert_eq!(enum_norm_apk(5, 1, 2).unwrap().len(), enumerate_pprime(10, 5).len());
    }

    #[test]
    fn whole_normalizer() {
        let five = enum_norm_n(5, 5).unwrap();
        assert_eq!(five.len(), 5);
        let mut d: Vec<_> = five.iter().map(NormalizerCharLabel::degree).collect();
        d.sort();
        let want: Vec<BigUint> = [1u32, 1, 1, 1, 4].iter().map(|&x| x.into()).collect();
        assert_eq!(d, want);
        assert_eq!(enum_norm_n(4, 5).unwrap().len(), 5);
        for p in [2usize, 3, 5, 7, 11] {
            for n in 0..=40 {
                assert_eq!(enum_norm_n(n, p).unwrap().len(), enumerate_pprime(n, p).len(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn single_digit_degree_bound() {
        for (p, k, a0) in [(5usize, 1u32, 2usize), (5, 2, 3), (7, 1, 6)] {
            for a in 1..p {
                let n = a * p.pow(k) + a0;
                let bound = BigUint::from(p - 1).pow(a as u32 * k) * factorial(a) * factorial(p - 1);
                assert!(enum_norm_n(n, p).unwrap().iter().all(|l| l.degree() <= bound));
            }
        }
    }

    #[test]
    fn json_schema() {
        let theta = NormPkLabel { p: 5, k: 1, zset: vec![1], twist: vec![2] };
        let assign = WreathAssignment::new(vec![(theta, part![2, 1])]).unwrap();
        let label = NormalizerCharLabel { digits: vec![Digit { k: 1, a: 3, assign }], tail: part![1] };
        let s = serde_json::to_string(&label).unwrap();
        assert_eq!(s, r#"{"digits":[{"k":1,"a":3,"assign":[{"zset":[1],"twist":[2],"mu":[2,1]}]}],"tail":[1]}"#);
        assert_eq!(label.degree(), BigUint::from(2u32));
    }
}
