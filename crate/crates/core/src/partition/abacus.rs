use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// The `r`-core of a partition together with its `r`-quotient.
///
/// Quotient components are read from the β-set whose size is the least
/// multiple of `r` that is at least `ℓ(λ)`; runner `j` holds the beads
/// congruent to `j` mod `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub r: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }
}

fn beads(lambda: &Partition, t: usize) -> Vec<usize> {
    (1..=t).map(|i| lambda.part(i) + t - i).collect()
}

fn partition_of_positions(mut pos: Vec<usize>) -> Partition {
    pos.sort_unstable_by(|a, b| b.cmp(a));
    let t = pos.len();
    Partition::from_unsorted(pos.iter().enumerate().map(|(i, &h)| h - (t - 1 - i)).collect())
}

fn canonical_size(len: usize, r: usize) -> usize {
    len.div_ceil(r) * r
}

pub fn core_quotient(lambda: &Partition, r: usize) -> CoreQuotient {
    assert!(r >= 1, "abacus needs at least one runner");
    let t = canonical_size(lambda.len(), r);
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); r];
    for b in beads(lambda, t) {
        runners[b % r].push(b / r);
    }
    let quotient = runners.iter().map(|v| partition_of_positions(v.clone())).collect();
    let core_beads = runners.iter().enumerate().flat_map(|(j, v)| (0..v.len()).map(move |a| a * r + j)).collect();
    CoreQuotient { r, core: partition_of_positions(core_beads), quotient }
}

/// `true` when `λ` has no hook of length `r`.
pub fn is_core(lambda: &Partition, r: usize) -> bool {
    if r == 0 {
        return false;
    }
    // A hook of length divisible by r exists iff one of length r does.
    lambda.hooks().iter().all(|h| h.length != r)
}

/// Rebuilds the partition with the given `r`-core and `r`-quotient.
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], r: usize) -> Result<Partition> {
    if quotient.len() != r {
        return Err(Error::SizeMismatch { expected: r, actual: quotient.len() });
    }
    if !is_core(core, r) {
        return Err(Error::NotACore { partition: core.parts().to_vec(), r });
    }
    let mut t = canonical_size(core.len(), r);
    let mut counts = vec![0usize; r];
    for b in beads(core, t) {
        counts[b % r] += 1;
    }
    let deficit = quotient.iter().zip(&counts).map(|(q, &c)| q.len().saturating_sub(c)).max().unwrap_or(0);
    t += deficit * r;
    for c in &mut counts {
        *c += deficit;
    }
    let mut pos = Vec::with_capacity(t);
    for (j, (q, &b)) in quotient.iter().zip(&counts).enumerate() {
        for i in 0..b {
            pos.push((q.part(i + 1) + b - 1 - i) * r + j);
        }
    }
    Ok(partition_of_positions(pos))
}

/// `N_s(λ)`: the largest first part or length among the `s`-quotient
/// components.
pub fn n_s_invariant(lambda: &Partition, s: usize) -> usize {
    core_quotient(lambda, s).quotient.iter().map(Partition::width).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use proptest::prelude::*;

    #[test]
    fn worked_example_partitions() {
        // The β-set {16,12,9,8,4,3,2,1,0} on a 5-abacus.
        let lambda = crate::BetaSet::new(vec![16, 12, 9, 8, 4, 3, 2, 1, 0]).unwrap().partition();
        assert_eq!(lambda, part![8, 5, 3, 3]);
        let cq = core_quotient(&lambda, 5);
        assert_eq!(cq.core, part![1, 1, 1, 1]);
        let mut comps: Vec<_> = cq.quotient.iter().filter(|q| !q.is_empty()).cloned().collect();
        comps.sort();
        assert_eq!(comps, vec![part![1], part![2]]);
        assert_eq!(n_s_invariant(&lambda, 5), 2);
        assert!(lambda.in_box(4 + 5 * 2));
    }

    #[test]
    fn seven_five_five_three_three() {
        let lambda = part![7, 5, 5, 3, 3];
        let cq = core_quotient(&lambda, 5);
        assert_eq!(cq.core, part![4, 1, 1, 1, 1]);
        assert_eq!(cq.quotient, vec![part![], part![2], part![1], part![], part![]]);
        assert_eq!(n_s_invariant(&lambda, 5), 2);
        assert_eq!(from_core_quotient(&cq.core, &cq.quotient, 5).unwrap(), lambda);
    }

    #[test]
    fn long_column_example() {
        let mut parts = vec![7, 7, 4, 3, 2, 2];
        parts.extend([1; 8]);
        let mu = Partition::new(parts).unwrap();
        let cq = core_quotient(&mu, 5);
        assert_eq!(cq.core, part![2, 1]);
        assert_eq!(cq.quotient_size(), 6);
        let mut comps: Vec<_> = cq.quotient.iter().filter(|q| !q.is_empty()).cloned().collect();
        comps.sort();
        assert_eq!(comps, vec![part![1, 1, 1, 1], part![2]]);
        assert_eq!(n_s_invariant(&mu, 5), 4);
    }

    #[test]
    fn cores_are_fixed() {
        let gamma = part![2, 1];
        let cq = core_quotient(&gamma, 5);
        assert_eq!(cq.core, gamma);
        assert!(cq.quotient.iter().all(Partition::is_empty));
        assert_eq!(from_core_quotient(&gamma, &vec![Partition::empty(); 5], 5).unwrap(), gamma);
        assert_eq!(n_s_invariant(&gamma, 5), 0);
    }

    #[test]
    fn rejects_non_core() {
        let q = vec![Partition::empty(); 2];
        assert!(from_core_quotient(&part![2], &q, 2).is_err());
        assert!(from_core_quotient(&part![1], &q[..1], 2).is_err());
    }

    #[test]
    fn roundtrip_exhaustive() {
        for r in [2, 3, 5, 7] {
            for n in 0..=20 {
                for lambda in Partition::all(n) {
                    let cq = core_quotient(&lambda, r);
                    assert!(is_core(&cq.core, r));
                    assert_eq!(lambda.size(), cq.core.size() + r * cq.quotient_size());
                    assert_eq!(lambda.e_hooks(r).len(), cq.quotient_size());
                    let back = from_core_quotient(&cq.core, &cq.quotient, r).unwrap();
                    assert_eq!(back, lambda, "r={r}");
                }
            }
        }
    }

    fn strip_hooks(lambda: &Partition, r: usize, pick_last: bool) -> Partition {
        let mut x = crate::BetaSet::first_column(lambda);
        loop {
            let pairs: Vec<_> = x.hook_pairs().into_iter().filter(|(a, b)| a - b == r).collect();
            let choice = if pick_last { pairs.last() } else { pairs.first() };
            match choice {
                Some(&(a, b)) => x = x.remove_hook(a, b).unwrap(),
                None => return x.partition(),
            }
        }
    }

    proptest! {
        #[test]
        fn hook_stripping_reaches_core(parts in prop::collection::vec(1usize..9, 0..8), r in prop::sample::select(vec![2usize, 3, 5, 7])) {
            let lambda = Partition::from_unsorted(parts);
            prop_assume!(lambda.size() <= 30);
            let core = core_quotient(&lambda, r).core;
            prop_assert_eq!(strip_hooks(&lambda, r, false), core.clone());
            prop_assert_eq!(strip_hooks(&lambda, r, true), core);
        }

        #[test]
        fn n_s_independent_of_shift(parts in prop::collection::vec(1usize..9, 0..8), s in prop::sample::select(vec![2usize, 3, 5]), extra in 0usize..7) {
            let lambda = Partition::from_unsorted(parts);
            let x = crate::BetaSet::with_size(&lambda, lambda.len().max(1) + extra);
            let mut runners = vec![Vec::new(); s];
            for &b in x.elements() {
                runners[b % s].push(b / s);
            }
            let width = runners.into_iter().map(|v| partition_of_positions(v).width()).max().unwrap();
            prop_assert_eq!(width, n_s_invariant(&lambda, s));
        }
    }
}
