use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::scalar::big_pow;

/// A p'-degree irreducible character of `N_{p^k}`.
///
/// `zset ⊆ [1, k]` lists the coordinates where the underlying linear
/// character of the Sylow subgroup is trivial; `twist[i]` is the residue mod
/// `p − 1` attached to the coordinate `zset[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormPkLabel {
    pub p: usize,
    pub k: u32,
    pub zset: Vec<u32>,
    pub twist: Vec<usize>,
}

impl NormPkLabel {
    /// `(p − 1)^{k − |zset|}`.
    pub fn degree(&self) -> BigUint {
        big_pow(self.p as u64 - 1, self.k - self.zset.len() as u32)
    }

    pub fn is_linear(&self) -> bool {
        self.zset.len() == self.k as usize || self.p == 2
    }

    /// The label of maximal degree, `zset = ∅`.
    pub fn star(p: usize, k: u32) -> Self {
        NormPkLabel { p, k, zset: Vec::new(), twist: Vec::new() }
    }
}

/// All `p^k` labels in lexicographic order.
pub fn enum_norm_pk(p: usize, k: u32) -> Vec<NormPkLabel> {
    assert!(p >= 2 && k >= 1);
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let zset: Vec<u32> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let count = (p - 1).pow(zset.len() as u32);
        for mut idx in 0..count {
            let mut twist = vec![0usize; zset.len()];
            for t in twist.iter_mut().rev() {
                *t = idx % (p - 1);
                idx /= p - 1;
            }
            out.push(NormPkLabel { p, k, zset: zset.clone(), twist });
        }
    }
    out.sort();
    out
}

fn join(v: &[impl fmt::Display]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
}

impl fmt::Display for NormPkLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}T{}", join(&self.zset), join(&self.twist))
    }
}
