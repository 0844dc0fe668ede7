use num_bigint::BigUint;

use super::Partition;
use crate::scalar::{pow_exact, primes_up_to, DegreeScalar};

/// `χ^λ(1)` by the hook-length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    degree_as::<BigUint>(lambda).expect("arbitrary precision never overflows")
}

/// `χ^λ(1)` in a chosen scalar type; `None` if the value does not fit.
///
/// `n!` and the hook product are cancelled prime by prime, so no
/// intermediate exceeds the result.
pub fn degree_as<T: DegreeScalar>(lambda: &Partition) -> Option<T> {
    let n = lambda.size();
    let primes = primes_up_to(n as u64);
    let mut exps: Vec<i64> = primes.iter().map(|&q| legendre(n, q as usize) as i64).collect();
    for h in lambda.hook_lengths() {
        let mut h = h;
        for (e, &q) in exps.iter_mut().zip(&primes) {
            let q = q as usize;
            if q > h {
                break;
            }
            while h % q == 0 {
                h /= q;
                *e -= 1;
            }
        }
    }
    let mut acc = T::one();
    for (&q, &e) in primes.iter().zip(&exps) {
        debug_assert!(e >= 0, "hook product does not divide n!");
        if e > 0 {
            let f = pow_exact(&T::from_u64(q)?, e as u32)?;
            acc = acc.mul_exact(&f)?;
        }
    }
    Some(acc)
}

/// Exponent of `q` in `n!`.
fn legendre(n: usize, q: usize) -> usize {
    let mut e = 0;
    let mut m = n / q;
    while m > 0 {
        e += m;
        m /= q;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::scalar::{binomial, factorial};
    use std::collections::HashMap;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closed_forms() {
        for n in 4..40u64 {
            let l = Partition::new(vec![n as usize - 2, 2]).unwrap();
            assert_eq!(degree(&l), big(n * (n - 3) / 2));
        }
        for n in 6..40u64 {
            let l = Partition::new(vec![n as usize - 3, 3]).unwrap();
            assert_eq!(degree(&l), big(n * (n - 1) * (n - 5) / 6));
        }
        let m = 50;
        for j in 0..m {
            assert_eq!(degree(&Partition::hook(m, j)), binomial(m - 1, j));
        }
        assert_eq!(degree(&Partition::empty()), big(1));
    }

    #[test]
    fn fixed_width_scalars() {
        let l = part![5, 3, 2, 1];
        assert_eq!(degree_as::<u64>(&l), Some(2310));
        assert_eq!(degree_as::<u128>(&l), Some(2310));
        assert_eq!(degree_as::<u32>(&Partition::hook(40, 20)), None);
    }

    #[test]
    fn squares_sum_to_factorial() {
        for n in 0..=14 {
            let s: BigUint = Partition::all(n).iter().map(|l| degree(l).pow(2)).sum();
            assert_eq!(s, factorial(n), "n={n}");
        }
    }

    #[test]
    fn branching_rule() {
        let mut memo: HashMap<Partition, BigUint> = HashMap::new();
        memo.insert(Partition::empty(), big(1));
        for n in 1..=20 {
            for l in Partition::all(n) {
                let d: BigUint = l.removable_corners().iter().map(|&(r, _)| memo[&l.remove_corner(r)].clone()).sum();
                assert_eq!(d, degree(&l), "{l}");
                assert_eq!(degree(&l.conjugate()), d);
                memo.insert(l, d);
            }
        }
    }
}
