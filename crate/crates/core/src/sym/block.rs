use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::tuples::{partition_tuples, tuples_where};
use crate::error::{invalid, Error, Result};
use crate::{core_quotient, degree, from_core_quotient, is_core, Partition};

/// The partitions of `n` with a fixed `p^k`-core `γ ⊢ r`, `n = a·p^k + r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PPrimeBlock {
    pub n: usize,
    pub p: usize,
    pub k: u32,
    pub a: usize,
    pub r: usize,
    pub gamma: Partition,
    /// Ordered by `p^k`-quotient tuple.
    pub members: Vec<Partition>,
    pub quotients: Vec<Vec<Partition>>,
}

struct Shape {
    pk: usize,
    a: usize,
    r: usize,
}

fn shape(n: usize, p: usize, k: u32, gamma: &Partition) -> Result<Shape> {
    if !crate::scalar::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let pk = p.checked_pow(k).ok_or_else(|| invalid("p^k overflows"))?;
    if k == 0 {
        return Err(invalid("block level k must be at least 1"));
    }
    let r = gamma.size();
    if r > n || !(n - r).is_multiple_of(pk) || n == r {
        return Err(invalid(format!("{n} - |{gamma}| is not a positive multiple of {pk}")));
    }
    if !is_core(gamma, pk) {
        return Err(Error::NotACore { partition: gamma.parts().to_vec(), r: pk });
    }
    if (degree(gamma) % p).is_zero() {
        return Err(invalid(format!("{gamma} has degree divisible by {p}")));
    }
    Ok(Shape { pk, a: (n - r) / pk, r })
}

/// `P(n | γ)`. The number of `p^k` digits `a` may exceed `p − 1`; the
/// members are then no longer all of `p'`-degree.
pub fn block(n: usize, p: usize, k: u32, gamma: &Partition) -> Result<PPrimeBlock> {
    let s = shape(n, p, k, gamma)?;
    let quotients = partition_tuples(s.pk, s.a);
    let members = quotients.par_iter().map(|q| from_core_quotient(gamma, q, s.pk)).collect::<Result<Vec<_>>>()?;
    Ok(PPrimeBlock { n, p, k, a: s.a, r: s.r, gamma: gamma.clone(), members, quotients })
}

/// `Δ_x` for `x ∈ [1, a]`: members grouped by `N_{p^k}(λ)`.
pub fn delta_sets(block: &PPrimeBlock) -> BTreeMap<usize, Vec<Partition>> {
    let mut out: BTreeMap<usize, Vec<Partition>> = (1..=block.a).map(|x| (x, Vec::new())).collect();
    for (lambda, q) in block.members.iter().zip(&block.quotients) {
        let x = q.iter().map(Partition::width).max().unwrap_or(0);
        out.entry(x).or_default().push(lambda.clone());
    }
    out
}

/// `Δ_x` of `P(n | γ)` for `n = a·p^k + |γ|`, built without the rest of the
/// block: the first component of width `x` is placed explicitly and the
/// remaining size is spread over the other runners.
///
/// Every member is checked against its recomputed core and `N_{p^k}`.
pub fn delta_stratum(p: usize, k: u32, a: usize, gamma: &Partition, x: usize) -> Result<Vec<Partition>> {
    let pk = p.checked_pow(k).ok_or_else(|| invalid("p^k overflows"))?;
    let n = a * pk + gamma.size();
    shape(n, p, k, gamma)?;
    if x == 0 || x > a {
        return Err(invalid(format!("stratum {x} outside [1,{a}]")));
    }
    let mut tuples = Vec::new();
    for s in x..=a {
        let heads: Vec<Partition> = Partition::all(s).into_iter().filter(|q| q.width() == x).collect();
        if heads.is_empty() {
            continue;
        }
        for j in 0..pk {
            // Slots before j stay narrower than x; slots after may tie.
            let rests = tuples_where(pk - 1, a - s, |slot, q| if slot < j { q.width() < x } else { q.width() <= x });
            for head in &heads {
                for rest in &rests {
                    let mut t = Vec::with_capacity(pk);
                    t.extend_from_slice(&rest[..j]);
                    t.push(head.clone());
                    t.extend_from_slice(&rest[j..]);
                    tuples.push(t);
                }
            }
        }
    }
    tuples.sort();
    tuples
        .par_iter()
        .map(|q| {
            let lambda = from_core_quotient(gamma, q, pk)?;
            let cq = core_quotient(&lambda, pk);
            let width = cq.quotient.iter().map(Partition::width).max().unwrap_or(0);
            if cq.core != *gamma || width != x || lambda.size() != n {
                return Err(Error::Fault(format!("{lambda} does not lie in stratum {x} over {gamma}")));
            }
            Ok(lambda)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::sym::count_tuples;
    use num_bigint::BigUint;

    #[test]
    fn block_sizes() {
        let b = block(6, 5, 1, &part![1]).unwrap();
        assert_eq!(b.members.len(), 5);
        assert!(b.members.iter().all(|l| core_quotient(l, 5).core == part![1]));
        let b = block(30, 5, 1, &part![]).unwrap();
        assert_eq!(BigUint::from(b.members.len()), count_tuples(5, 6));
    }

    #[test]
    fn rejects_bad_cores() {
        assert!(block(8, 5, 1, &part![2]).is_err());
        assert!(block(10, 5, 1, &part![5]).is_err());
        assert!(block(8, 4, 1, &part![]).is_err());
        // (2,1) has degree 2, so it is not a 2'-core of anything.
        assert!(block(5, 2, 1, &part![2, 1]).is_err());
    }

    #[test]
    fn blocks_cover_pprime() {
        use crate::sym::{enumerate_pprime, top_digit};
        for (n, p) in [(13, 5), (20, 3), (30, 5), (17, 2)] {
            let d = top_digit(n, p);
            let mut all = Vec::new();
            for gamma in enumerate_pprime(d.r, p) {
                all.extend(block(n, p, d.k, &gamma).unwrap().members);
            }
            let mut want = enumerate_pprime(n, p);
            all.sort();
            want.sort();
            assert_eq!(all, want);
        }
    }

    #[test]
    fn delta_sizes_small() {
        let b = block(15, 5, 1, &part![]).unwrap();
        let d = delta_sets(&b);
        assert_eq!(d[&3].len(), 10);
        assert_eq!(d[&2].len(), 45);
        let b = block(30, 5, 1, &part![]).unwrap();
        assert_eq!(delta_sets(&b)[&4].len(), 200);
    }

    #[test]
    fn stratum_matches_block() {
        for (p, a, gamma) in [(5, 3, part![]), (5, 4, part![2, 1]), (3, 4, part![1]), (5, 6, part![1, 1])] {
            let b = block(a * p + gamma.size(), p, 1, &gamma).unwrap();
            let d = delta_sets(&b);
            for x in 1..=a {
                let mut s = delta_stratum(p, 1, a, &gamma, x).unwrap();
                let mut want = d[&x].clone();
                s.sort();
                want.sort();
                assert_eq!(s, want, "p={p} a={a} x={x}");
            }
        }
    }

    #[test]
    fn strata_sit_in_boxes() {
        let b = block(23, 5, 1, &part![2, 1]).unwrap();
        for (x, members) in delta_sets(&b) {
            assert!(members.iter().all(|l| l.in_box(3 + x * 5)));
        }
    }
}
