use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::tuples::{count_tuples, partition_tuples};
use crate::{degree, from_core_quotient, Partition};

/// `n = a·p^k + r` with `1 ≤ a ≤ p − 1` and `r < p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopDigit {
    pub k: u32,
    pub pk: usize,
    pub a: usize,
    pub r: usize,
}

/// The leading base-`p` digit of `n ≥ 1`.
pub fn top_digit(n: usize, p: usize) -> TopDigit {
    assert!(n >= 1 && p >= 2);
    let mut pk = 1;
    let mut k = 0;
    while pk * p <= n {
        pk *= p;
        k += 1;
    }
    TopDigit { k, pk, a: n / pk, r: n % pk }
}

/// All `λ ⊢ n` with `p ∤ χ^λ(1)`.
///
/// Built digit by digit: every such `λ` has a `p'`-core `γ ⊢ r` for the top
/// digit and an arbitrary `p^k`-quotient of total size `a`.
pub fn enumerate_pprime(n: usize, p: usize) -> Vec<Partition> {
    if n < p {
        return Partition::all(n);
    }
    let d = top_digit(n, p);
    let cores = enumerate_pprime(d.r, p);
    let tuples = partition_tuples(d.pk, d.a);
    cores
        .par_iter()
        .flat_map_iter(|gamma| {
            tuples
                .iter()
                .map(|q| from_core_quotient(gamma, q, d.pk).expect("p'-core below p^k is a p^k-core"))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Filters all of `P(n)` by the degree; only for cross-checks.
pub fn enumerate_pprime_bruteforce(n: usize, p: usize) -> Vec<Partition> {
    let pb = BigUint::from(p);
    Partition::all(n).into_iter().filter(|l| !(degree(l) % &pb).is_zero()).collect()
}

/// `|Irr_{p'}(S_n)|` as a product over base-`p` digits.
pub fn count_pprime(n: usize, p: usize) -> BigUint {
    let mut acc = BigUint::one();
    let mut pk = 1usize;
    let mut m = n;
    while m > 0 {
        let a = m % p;
        acc *= count_tuples(pk, a);
        m /= p;
        pk = pk.saturating_mul(p);
    }
    acc
}
