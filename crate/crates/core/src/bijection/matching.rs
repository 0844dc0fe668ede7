use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::degree;
use crate::error::{invalid, Error, Result};
use crate::normalizer::enum_norm_n;
use crate::sym::enumerate_pprime;

/// How a normalizer degree must relate to the symmetric-group degree it is
/// paired with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeRelation {
    /// `local ≤ global`.
    Dominance,
    /// `local | global`.
    Divisibility,
}

impl DegreeRelation {
    pub fn admits(self, local: &BigUint, global: &BigUint) -> bool {
        match self {
            DegreeRelation::Dominance => local <= global,
            DegreeRelation::Divisibility => !local.is_zero() && (global % local).is_zero(),
        }
    }
}

impl FromStr for DegreeRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dominance" => Ok(DegreeRelation::Dominance),
            "divisibility" => Ok(DegreeRelation::Divisibility),
            _ => Err(invalid(format!("unknown relation {s:?}"))),
        }
    }
}

/// Indices of `v` sorted by value, largest first; ties keep input order.
pub(crate) fn descending_order(v: &[BigUint]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&i, &j| v[j].cmp(&v[i]));
    idx
}

/// Whether `local_i ≤ global_i` after sorting both in decreasing order.
pub fn dominance_feasible(global: &[BigUint], local: &[BigUint]) -> Result<bool> {
    Ok(dominance_match(global, local)?.is_some())
}

/// Pairs the `i`-th largest global degree with the `i`-th largest local one.
/// Returns `assign[g] = l`, or `None` when some local degree exceeds its
/// global partner.
pub fn dominance_match(global: &[BigUint], local: &[BigUint]) -> Result<Option<Vec<usize>>> {
    if global.len() != local.len() {
        return Err(Error::SizeMismatch { expected: global.len(), actual: local.len() });
    }
    let g = descending_order(global);
    let l = descending_order(local);
    let mut assign = vec![0; global.len()];
    for (&gi, &li) in g.iter().zip(&l) {
        if local[li] > global[gi] {
            return Ok(None);
        }
        assign[gi] = li;
    }
    Ok(Some(assign))
}

/// Maximum matching by augmenting paths. Returns the partner of every left
/// vertex.
pub fn max_bipartite_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], right: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if right[v].is_none_or(|w| augment(w, adj, seen, right)) {
                right[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut right: Vec<Option<usize>> = vec![None; n_right];
    for u in 0..adj.len() {
        let mut seen = vec![false; n_right];
        augment(u, adj, &mut seen, &mut right);
    }
    let mut left = vec![None; adj.len()];
    for (v, u) in right.iter().enumerate() {
        if let Some(u) = u {
            left[*u] = Some(v);
        }
    }
    left
}

/// Whether some bijection `Irr_{p'}(S_n) → Irr_{p'}(N_n)` respects `rel`.
pub fn relation_match_exists(n: usize, p: usize, rel: DegreeRelation) -> Result<bool> {
    let global: Vec<BigUint> = enumerate_pprime(n, p).iter().map(degree).collect();
    let local: Vec<BigUint> = enum_norm_n(n, p)?.iter().map(|l| l.degree()).collect();
    if global.len() != local.len() {
        return Ok(false);
    }
    let adj: Vec<Vec<usize>> =
        global.iter().map(|g| (0..local.len()).filter(|&j| rel.admits(&local[j], g)).collect()).collect();
    Ok(max_bipartite_matching(&adj, local.len()).iter().all(Option::is_some))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn sorted_criterion_examples() {
        assert!(dominance_feasible(&big(&[6, 4, 4, 1, 1]), &big(&[4, 1, 1, 1, 1])).unwrap());
        assert!(!dominance_feasible(&big(&[1]), &big(&[2])).unwrap());
        let same = big(&[3, 1, 2, 2]);
        let m = dominance_match(&same, &same).unwrap().unwrap();
        assert!(m.iter().enumerate().all(|(i, &j)| same[i] == same[j]));
        assert!(dominance_match(&big(&[1]), &big(&[1, 1])).is_err());
    }

    #[test]
    fn seven_at_three() {
        assert!(!relation_match_exists(7, 3, DegreeRelation::Divisibility).unwrap());
        assert!(relation_match_exists(7, 3, DegreeRelation::Dominance).unwrap());
        for rel in [DegreeRelation::Dominance, DegreeRelation::Divisibility] {
            assert!(relation_match_exists(4, 5, rel).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sorted_criterion_is_hall(pairs in prop::collection::vec((1u32..30, 1u32..30), 0..=12)) {
            let global: Vec<BigUint> = pairs.iter().map(|p| BigUint::from(p.0)).collect();
            let local: Vec<BigUint> = pairs.iter().map(|p| BigUint::from(p.1)).collect();
            let adj: Vec<Vec<usize>> = global.iter().map(|g| (0..local.len()).filter(|&j| &local[j] <= g).collect()).collect();
            let perfect = max_bipartite_matching(&adj, local.len()).iter().all(Option::is_some);
            let sorted = dominance_match(&global, &local).unwrap();
            prop_assert_eq!(perfect, sorted.is_some());
            if let Some(assign) = sorted {
                let mut used = assign.clone();
                used.sort_unstable();
                prop_assert_eq!(used, (0..local.len()).collect::<Vec<_>>());
                for (i, &j) in assign.iter().enumerate() {
                    prop_assert!(local[j] <= global[i]);
                }
            }
        }
    }
}
