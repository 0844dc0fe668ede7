//! Scalar abstractions.
//!
//! Everything in this crate is exact. Character degrees are counted in any
//! integer type that implements [`DegreeScalar`]; the arbitrary-precision
//! [`BigUint`](num_bigint::BigUint) is the default, and the fixed-width
//! primitives are usable whenever the values are known to fit.
//! Cyclotomic integers are generic over a signed ring [`RingScalar`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Unsigned (or signed) exact integer used to hold character degrees.
pub trait DegreeScalar:
    Integer + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Checked multiplication; arbitrary-precision types never fail.
    fn mul_exact(&self, other: &Self) -> Option<Self>;

    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("usize fits the degree scalar")
    }
}

macro_rules! prim_degree {
    ($($t:ty),*) => {$(
        impl DegreeScalar for $t {
            fn mul_exact(&self, other: &Self) -> Option<Self> {
                self.checked_mul(*other)
            }
        }
    )*};
}
prim_degree!(u32, u64, u128, i64, i128);

impl DegreeScalar for BigUint {
    fn mul_exact(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

impl DegreeScalar for BigInt {
    fn mul_exact(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

/// Signed ring of coefficients for cyclotomic integers.
pub trait RingScalar:
    Signed + Clone + Debug + Display + Hash + Eq + Ord + FromPrimitive + Send + Sync + 'static
{
}

impl<T> RingScalar for T where
    T: Signed + Clone + Debug + Display + Hash + Eq + Ord + FromPrimitive + Send + Sync + 'static
{
}

/// `base^exp` in any degree scalar, `None` on overflow.
pub fn pow_exact<T: DegreeScalar>(base: &T, exp: u32) -> Option<T> {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc.mul_exact(base)?;
    }
    Some(acc)
}

pub fn big_pow(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes up to and including `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

/// Base-`p` digits of `n`, least significant first.
pub fn p_adic_digits(n: usize, p: usize) -> Vec<usize> {
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_helpers() {
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(3, 7), BigUint::zero());
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(p_adic_digits(60, 7), vec![4, 1, 1]);
        assert_eq!(pow_exact(&3u32, 4), Some(81));
        assert_eq!(pow_exact(&2u32, 40), None);
    }
}
