use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::RingScalar;

/// An element of `Z[ω]`, `ω` a primitive `p`-th root of unity, written in
/// the basis `1, ω, …, ω^{p−2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloInt<T: RingScalar> {
    p: usize,
    coeffs: Vec<T>,
}

impl<T: RingScalar> CycloInt<T> {
    pub fn zero(p: usize) -> Self {
        assert!(p >= 2);
        CycloInt { p, coeffs: vec![T::zero(); p - 1] }
    }

    pub fn from_int(p: usize, v: T) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = v;
        z
    }

    pub fn one(p: usize) -> Self {
        Self::from_int(p, T::one())
    }

    /// `ω^e` for any integer exponent.
    pub fn omega_pow(p: usize, e: i64) -> Self {
        let mut acc = vec![T::zero(); p];
        acc[e.rem_euclid(p as i64) as usize] = T::one();
        Self::reduce(p, acc)
    }

    /// Folds a coefficient vector indexed by `0..p` using
    /// `ω^{p−1} = −(1 + ω + … + ω^{p−2})`.
    fn reduce(p: usize, mut full: Vec<T>) -> Self {
        let top = full.pop().expect("p coefficients");
        let coeffs = full.into_iter().map(|c| c - top.clone()).collect();
        CycloInt { p, coeffs }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    /// Complex conjugation `ω ↦ ω^{−1}`.
    pub fn conj(&self) -> Self {
        let mut full = vec![T::zero(); self.p];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(self.p - i) % self.p] = c.clone();
        }
        Self::reduce(self.p, full)
    }

    /// The value as a rational integer, if it is one.
    pub fn to_rational(&self) -> Option<T> {
        if self.coeffs[1..].iter().all(T::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        CycloInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic integers over different primes");
    }
}

impl<T: RingScalar> Add for &CycloInt<T> {
    type Output = CycloInt<T>;
    fn add(self, rhs: Self) -> CycloInt<T> {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        CycloInt { p: self.p, coeffs }
    }
}

impl<T: RingScalar> Sub for &CycloInt<T> {
    type Output = CycloInt<T>;
    fn sub(self, rhs: Self) -> CycloInt<T> {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        CycloInt { p: self.p, coeffs }
    }
}

impl<T: RingScalar> Neg for &CycloInt<T> {
    type Output = CycloInt<T>;
    fn neg(self) -> CycloInt<T> {
        CycloInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: RingScalar> Mul for &CycloInt<T> {
    type Output = CycloInt<T>;
    fn mul(self, rhs: Self) -> CycloInt<T> {
        self.check(rhs);
        let p = self.p;
        let mut full = vec![T::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = (i + j) % p;
                full[idx] = full[idx].clone() + a.clone() * b.clone();
            }
        }
        CycloInt::reduce(p, full)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: RingScalar> $tr for CycloInt<T> {
            type Output = CycloInt<T>;
            fn $m(self, rhs: Self) -> CycloInt<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: RingScalar> fmt::Display for CycloInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if i == 0 { c.to_string() } else { format!("{c}w^{i}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
