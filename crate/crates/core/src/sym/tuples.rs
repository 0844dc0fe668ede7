use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::Partition;

/// All `m`-tuples of partitions whose sizes add up to `total`, in
/// lexicographic order.
pub fn partition_tuples(m: usize, total: usize) -> Vec<Vec<Partition>> {
    tuples_where(m, total, |_, _| true)
}

/// `m`-tuples of total size `total` whose components all pass `allowed(slot, q)`,
/// in lexicographic order. The empty partition must be allowed everywhere.
pub fn tuples_where<F>(m: usize, total: usize, allowed: F) -> Vec<Vec<Partition>>
where
    F: Fn(usize, &Partition) -> bool,
{
    let mut pool: Vec<Partition> = (0..=total).flat_map(Partition::all).collect();
    pool.sort();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fill(m, total, &pool, &allowed, &mut cur, &mut out);
    out
}

fn fill<F>(
    m: usize,
    rest: usize,
    pool: &[Partition],
    allowed: &F,
    cur: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) where
    F: Fn(usize, &Partition) -> bool,
{
    let slot = cur.len();
    if slot == m {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if rest == 0 {
        let mut t = cur.clone();
        t.resize(m, Partition::empty());
        out.push(t);
        return;
    }
    for q in pool {
        let s = q.size();
        if s > rest || (slot + 1 == m && s != rest) || !allowed(slot, q) {
            continue;
        }
        cur.push(q.clone());
        fill(m, rest - s, pool, allowed, cur, out);
        cur.pop();
    }
}

/// Number of `m`-tuples of partitions of total size `total`, read off the
/// power series of `∏ (1 − x^i)^{−m}`.
pub fn count_tuples(m: usize, total: usize) -> BigUint {
    let mut p = vec![BigUint::zero(); total + 1];
    p[0] = BigUint::one();
    for part in 1..=total {
        for s in part..=total {
            let add = p[s - part].clone();
            p[s] += add;
        }
    }
    let mut acc = vec![BigUint::zero(); total + 1];
    acc[0] = BigUint::one();
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); total + 1];
        for (i, ai) in acc.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, pj) in p.iter().enumerate().take(total + 1 - i) {
                next[i + j] += ai * pj;
            }
        }
        acc = next;
    }
    acc.swap_remove(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn small_tuples() {
        let t = partition_tuples(2, 2);
        assert_eq!(t.len(), 5);
        assert_eq!(t[0], vec![part![], part![1, 1]]);
        assert_eq!(t[4], vec![part![2], part![]]);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(partition_tuples(3, 0), vec![vec![Partition::empty(); 3]]);
    }

    #[test]
    fn counts_match_enumeration() {
        for m in 1..6 {
            for total in 0..7 {
                assert_eq!(count_tuples(m, total), BigUint::from(partition_tuples(m, total).len()));
            }
        }
    }
}
