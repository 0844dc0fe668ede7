use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::matching::{descending_order, dominance_match};
use crate::error::{invalid, Error, Result};
use crate::normalizer::{enum_norm_apk, enum_norm_n, Digit, NormalizerCharLabel};
use crate::sym::{block, enumerate_pprime, top_digit};
use crate::{degree, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Match block by block over the `p^k`-cores of the top digit, reusing
    /// the bijection for the remainder.
    Recursive,
    /// One sorted match over all degrees.
    Global,
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(Strategy::Recursive),
            "global" => Ok(Strategy::Global),
            _ => Err(invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub lambda: Partition,
    pub label: NormalizerCharLabel,
    pub global_degree: BigUint,
    pub local_degree: BigUint,
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Pair", 4)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("dS", &self.global_degree.to_string())?;
        st.serialize_field("dN", &self.local_degree.to_string())?;
        st.end()
    }
}

/// How one `γ`-block of the top level was matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTrace {
    pub gamma: Partition,
    pub lower_label: String,
    pub size: usize,
    /// The two extremal partitions received minimal-degree labels.
    pub endpoint_rule: bool,
    /// Set when the block had to be matched without the endpoint rule.
    pub fallback: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionRecord {
    pub n: usize,
    pub p: usize,
    pub strategy: Strategy,
    pub pairs: Vec<Pair>,
    pub block_trace: Vec<BlockTrace>,
    pub anomalies: Vec<String>,
}

impl BijectionRecord {
    /// One JSON object per pair.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for pair in &self.pairs {
            out.push_str(&serde_json::to_string(pair).expect("pairs serialize"));
            out.push('\n');
        }
        out
    }
}

type Matching = Vec<(Partition, NormalizerCharLabel)>;

/// Builds a degree-dominating bijection `Irr_{p'}(S_n) → Irr_{p'}(N_n)`.
///
/// Pairs are listed in the order of [`enumerate_pprime`]. Fails only if no
/// dominating match exists at all.
pub fn build_bijection(n: usize, p: usize, strategy: Strategy) -> Result<BijectionRecord> {
    if !crate::scalar::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let (matching, block_trace, anomalies) = match strategy {
        Strategy::Global => (global(n, p)?, Vec::new(), Vec::new()),
        Strategy::Recursive => {
            let mut memo = HashMap::new();
            let (m, trace) = recursive(n, p, &mut memo)?;
            match m {
                Some(m) => (m, trace, Vec::new()),
                None => {
                    let msg = format!("recursive strategy infeasible for n={n}, p={p}; fell back to global");
                    (global(n, p)?, trace, vec![msg])
                }
            }
        }
    };
    let pairs = matching
        .into_iter()
        .map(|(lambda, label)| {
            let global_degree = degree(&lambda);
            let local_degree = label.degree();
            Pair { lambda, label, global_degree, local_degree }
        })
        .collect();
    Ok(BijectionRecord { n, p, strategy, pairs, block_trace, anomalies })
}

/// Sorted match of `members` against `labels` (both in their canonical
/// order); the result follows the order of `members`.
fn sorted_match(members: &[Partition], labels: &[NormalizerCharLabel]) -> Result<Option<Matching>> {
    let global: Vec<BigUint> = members.iter().map(degree).collect();
    let local: Vec<BigUint> = labels.iter().map(NormalizerCharLabel::degree).collect();
    Ok(dominance_match(&global, &local)?
        .map(|assign| members.iter().cloned().zip(assign.into_iter().map(|j| labels[j].clone())).collect()))
}

fn global(n: usize, p: usize) -> Result<Matching> {
    let members = enumerate_pprime(n, p);
    let mut labels = enum_norm_n(n, p)?;
    labels.sort();
    sorted_match(&members, &labels)?.ok_or_else(|| {
        let mut g: Vec<BigUint> = members.iter().map(degree).collect();
        let mut l: Vec<BigUint> = labels.iter().map(NormalizerCharLabel::degree).collect();
        g.sort_by(|a, b| b.cmp(a));
        l.sort_by(|a, b| b.cmp(a));
        Error::Fault(format!("no dominating match for n={n}, p={p}: global {g:?} local {l:?}"))
    })
}

type Memo = HashMap<usize, Option<Matching>>;

fn recursive(n: usize, p: usize, memo: &mut Memo) -> Result<(Option<Matching>, Vec<BlockTrace>)> {
    if n < p {
        let m = Partition::all(n).into_iter().map(|l| (l.clone(), NormalizerCharLabel::identity(l))).collect();
        return Ok((Some(m), Vec::new()));
    }
    let d = top_digit(n, p);
    if !memo.contains_key(&d.r) {
        let (lower, _) = recursive(d.r, p, memo)?;
        memo.insert(d.r, lower);
    }
    let Some(lower) = memo[&d.r].clone() else {
        return Ok((None, Vec::new()));
    };
    let mut assigns = enum_norm_apk(p, d.k, d.a)?;
    assigns.sort();
    let blocks = lower
        .par_iter()
        .map(|(gamma, lower_label)| {
            let members = block(n, p, d.k, gamma)?.members;
            let labels: Vec<NormalizerCharLabel> = assigns
                .iter()
                .map(|assign| {
                    let top = Digit { k: d.k, a: d.a, assign: assign.clone() };
                    NormalizerCharLabel::with_top(top, lower_label)
                })
                .collect();
            match_block(gamma, d.a * d.pk, &members, &labels, lower_label)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut matching = Vec::new();
    let mut trace = Vec::new();
    for (m, t) in blocks {
        trace.push(t);
        match m {
            Some(m) => matching.extend(m),
            None => return Ok((None, trace)),
        }
    }
    Ok((Some(matching), trace))
}

/// Matches one block. The partitions `γ + (m)` and `γ ∪ (1^m)` take the
/// two smallest labels first; if the rest cannot then be matched, the
/// whole block is sort-matched instead.
fn match_block(
    gamma: &Partition,
    m: usize,
    members: &[Partition],
    labels: &[NormalizerCharLabel],
    lower: &NormalizerCharLabel,
) -> Result<(Option<Matching>, BlockTrace)> {
    let mut trace = BlockTrace {
        gamma: gamma.clone(),
        lower_label: lower.to_string(),
        size: members.len(),
        endpoint_rule: true,
        fallback: None,
    };
    let ends = [gamma.plus(&Partition::row(m)), gamma.union(&Partition::column(m))];
    let local: Vec<BigUint> = labels.iter().map(NormalizerCharLabel::degree).collect();
    // Smallest degree first, ties toward the smaller label.
    let mut by_size: Vec<usize> = descending_order(&local);
    by_size.reverse();
    by_size.sort_by(|&i, &j| local[i].cmp(&local[j]).then(i.cmp(&j)));
    let reserved = [by_size[0], by_size[1]];
    let end_ok = ends.iter().zip(reserved).all(|(e, j)| degree(e) >= local[j]) && ends[0] != ends[1];
    if end_ok {
        let rest_members: Vec<Partition> = members.iter().filter(|l| !ends.contains(l)).cloned().collect();
        let rest_labels: Vec<NormalizerCharLabel> =
            labels.iter().enumerate().filter(|(j, _)| !reserved.contains(j)).map(|(_, l)| l.clone()).collect();
        if let Some(rest) = sorted_match(&rest_members, &rest_labels)? {
            let mut lookup: HashMap<Partition, NormalizerCharLabel> = rest.into_iter().collect();
            lookup.insert(ends[0].clone(), labels[reserved[0]].clone());
            lookup.insert(ends[1].clone(), labels[reserved[1]].clone());
            let out = members.iter().map(|l| (l.clone(), lookup.remove(l).expect("every member matched"))).collect();
            return Ok((Some(out), trace));
        }
    }
    trace.endpoint_rule = false;
    trace.fallback = Some(if end_ok {
        "endpoint rule blocks the remaining match".into()
    } else {
        "endpoint rule not applicable".into()
    });
    let plain = sorted_match(members, labels)?;
    if plain.is_none() {
        trace.fallback = Some("block has no dominating match".into());
    }
    Ok((plain, trace))
}
