//! Sylow subgroups of symmetric groups as iterated wreath products, their
//! linear characters with exact cyclotomic values, and restriction
//! multiplicities of symmetric-group characters.

mod cyclo;
mod element;
mod restriction;

pub use cyclo::CycloInt;
pub use element::{permutation_cycle_type, word_len, WreathElement};
pub use restriction::{
    m_star, omega_star_check, restriction_multiplicity, sylow_order, ClassDistribution, OmegaReport, DEFAULT_CAP,
};

use serde::Serialize;

/// A linear character `X(x_1, …, x_k)` of `P_{p^k}`: coordinate `i` takes the
/// value `ω^{s[i]}` on the level-`i` top generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StarLabel {
    pub p: usize,
    pub k: u32,
    pub s: Vec<usize>,
}

impl StarLabel {
    /// `X*_k`: every coordinate equal to `ω`.
    pub fn star(p: usize, k: u32) -> Self {
        StarLabel { p, k, s: vec![1; k as usize] }
    }

    pub fn trivial(p: usize, k: u32) -> Self {
        StarLabel { p, k, s: vec![0; k as usize] }
    }

    pub fn is_star(&self) -> bool {
        self.s.iter().all(|&x| x == 1)
    }

    /// Coordinates (1-based) where the character is trivial.
    pub fn zset(&self) -> Vec<u32> {
        (1..=self.k).filter(|&i| self.s[i as usize - 1] == 0).collect()
    }

    /// All `p^k` linear characters.
    pub fn all(p: usize, k: u32) -> Vec<StarLabel> {
        let count = p.pow(k);
        (0..count)
            .map(|mut idx| {
                let mut s = vec![0; k as usize];
                for x in s.iter_mut().rev() {
                    *x = idx % p;
                    idx /= p;
                }
                StarLabel { p, k, s }
            })
            .collect()
    }
}
