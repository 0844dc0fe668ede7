use std::fmt;

use num_bigint::BigInt;

use super::cyclo::CycloInt;
use super::StarLabel;
use crate::error::{Error, Result};
use crate::Partition;

/// An element `(g_0, …, g_{p−1}; h)` of the iterated wreath product
/// `P_{p^k} = C_p ≀ ⋯ ≀ C_p`, acting on `p^k` points.
///
/// Stored flat: the encodings of the `p` children followed by `h`, so a
/// level-`k` element is a word of `(p^k − 1)/(p − 1)` digits in `Z_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    p: usize,
    k: u32,
    digits: Vec<u8>,
}

/// Number of `Z_p` digits in a level-`k` element.
pub fn word_len(p: usize, k: u32) -> usize {
    (0..k).map(|i| p.pow(i)).sum()
}

impl WreathElement {
    pub fn identity(p: usize, k: u32) -> Self {
        WreathElement { p, k, digits: vec![0; word_len(p, k)] }
    }

    pub fn from_digits(p: usize, k: u32, digits: Vec<u8>) -> Result<Self> {
        if digits.len() != word_len(p, k) || digits.iter().any(|&d| d as usize >= p) {
            return Err(crate::error::invalid("malformed wreath element"));
        }
        Ok(WreathElement { p, k, digits })
    }

    /// The `idx`-th element in the order of base-`p` words.
    pub fn from_index(p: usize, k: u32, mut idx: u128) -> Self {
        let mut digits = vec![0u8; word_len(p, k)];
        for d in digits.iter_mut().rev() {
            *d = (idx % p as u128) as u8;
            idx /= p as u128;
        }
        WreathElement { p, k, digits }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.p.pow(self.k)
    }

    /// The top permutation of the `p` blocks.
    pub fn h(&self) -> usize {
        if self.k == 0 {
            0
        } else {
            *self.digits.last().expect("nonempty word") as usize
        }
    }

    pub fn child(&self, i: usize) -> WreathElement {
        let len = word_len(self.p, self.k - 1);
        WreathElement { p: self.p, k: self.k - 1, digits: self.digits[i * len..(i + 1) * len].to_vec() }
    }

    /// Point `b·p^{k−1} + x` goes to `(b + h)·p^{k−1} + g_{b+h}(x)`.
    pub fn to_permutation(&self) -> Vec<usize> {
        perm(self.p, self.k, &self.digits)
    }

    /// Cycle type, built from the children: with `h = 0` the children's
    /// cycles are collected, otherwise the cycles of the product of the
    /// children are stretched by `p`.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(cycles(self.p, self.k, &self.digits))
    }

    /// The exponent `e` with `X(s)(g) = ω^e`.
    pub fn lin_exponent(&self, s: &StarLabel) -> Result<usize> {
        if s.k != self.k || s.p != self.p {
            return Err(Error::LevelMismatch { label: s.k as usize, element: self.k as usize });
        }
        Ok(lin_exp(self.p, self.k, &s.s, &self.digits))
    }

    pub fn lin_value(&self, s: &StarLabel) -> Result<CycloInt<BigInt>> {
        Ok(CycloInt::omega_pow(self.p, self.lin_exponent(s)? as i64))
    }
}

fn split(p: usize, k: u32, d: &[u8]) -> (usize, usize) {
    (word_len(p, k - 1), d[d.len() - 1] as usize)
}

fn perm(p: usize, k: u32, d: &[u8]) -> Vec<usize> {
    if k == 0 {
        return vec![0];
    }
    let (len, h) = split(p, k, d);
    let block = p.pow(k - 1);
    let kids: Vec<Vec<usize>> = (0..p).map(|i| perm(p, k - 1, &d[i * len..(i + 1) * len])).collect();
    let mut out = vec![0; p * block];
    for b in 0..p {
        let nb = (b + h) % p;
        for x in 0..block {
            out[b * block + x] = nb * block + kids[nb][x];
        }
    }
    out
}

fn cycles_of(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

fn cycles(p: usize, k: u32, d: &[u8]) -> Vec<usize> {
    if k == 0 {
        return vec![1];
    }
    let (len, h) = split(p, k, d);
    let kid = |i: usize| &d[i * len..(i + 1) * len];
    if h == 0 {
        return (0..p).flat_map(|i| cycles(p, k - 1, kid(i))).collect();
    }
    // Following block 0 once around: g_{ph} ∘ ⋯ ∘ g_{2h} ∘ g_h.
    let block = p.pow(k - 1);
    let mut prod: Vec<usize> = (0..block).collect();
    for step in 1..=p {
        let g = perm(p, k - 1, kid((step * h) % p));
        for x in prod.iter_mut() {
            *x = g[*x];
        }
    }
    cycles_of(&prod).into_iter().map(|c| c * p).collect()
}

fn lin_exp(p: usize, k: u32, s: &[usize], d: &[u8]) -> usize {
    if k == 0 {
        return 0;
    }
    let (len, h) = split(p, k, d);
    let below: usize = (0..p).map(|i| lin_exp(p, k - 1, &s[..k as usize - 1], &d[i * len..(i + 1) * len])).sum();
    (below + s[k as usize - 1] * h) % p
}

/// Cycle type of an arbitrary permutation given as an image vector.
pub fn permutation_cycle_type(perm: &[usize]) -> Partition {
    Partition::from_unsorted(cycles_of(perm))
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            return write!(f, "1");
        }
        write!(f, "(")?;
        for i in 0..self.p {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", self.child(i))?;
        }
        write!(f, ";{})", self.h())
    }
}
