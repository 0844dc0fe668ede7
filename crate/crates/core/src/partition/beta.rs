use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A finite nonempty set of distinct nonnegative integers, stored in
/// descending order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BetaSet(Vec<usize>);

/// A hook of a Young diagram, addressed by its corner node (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hook {
    pub row: usize,
    pub col: usize,
    pub length: usize,
    pub arm: usize,
    pub leg: usize,
}

impl BetaSet {
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyBetaSet);
        }
        elements.sort_unstable_by(|a, b| b.cmp(a));
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBetaSet(elements));
        }
        Ok(BetaSet(elements))
    }

    /// The first-column hook lengths of `λ`. The empty partition gets `{0}`.
    pub fn first_column(lambda: &Partition) -> Self {
        Self::with_size(lambda, lambda.len().max(1))
    }

    /// The β-set of `λ` with exactly `t ≥ ℓ(λ)` elements.
    pub fn with_size(lambda: &Partition, t: usize) -> Self {
        assert!(t >= lambda.len() && t > 0, "β-set of size {t} too small for {lambda}");
        BetaSet((1..=t).map(|i| lambda.part(i) + t - i).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    /// `X^{+s}`: every element raised by `s`, with `0..s` added.
    pub fn shift(&self, s: usize) -> Self {
        let mut v: Vec<usize> = self.0.iter().map(|x| x + s).collect();
        v.extend((0..s).rev());
        BetaSet(v)
    }

    pub fn partition(&self) -> Partition {
        let t = self.0.len();
        Partition::from_unsorted(self.0.iter().enumerate().map(|(i, &h)| h - (t - 1 - i)).collect())
    }

    /// Replaces `x` by `y`, removing the hook `H(x, y)`.
    pub fn remove_hook(&self, x: usize, y: usize) -> Result<Self> {
        self.check_pair(x, y)?;
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&z| z != x).collect();
        v.push(y);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BetaSet(v))
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        let reason = if !self.contains(x) {
            "x is not in the set"
        } else if self.contains(y) {
            "y is already in the set"
        } else if x <= y {
            "x must exceed y"
        } else {
            return Ok(());
        };
        Err(Error::InvalidHook { x, y, reason })
    }

    /// All pairs `(x, y)` with `x ∈ X`, `y ∉ X`, `y < x`.
    pub fn hook_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &x in &self.0 {
            for y in (0..x).rev() {
                if !self.contains(y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The hook of `P(X)` removed by `H(x, y)`.
    pub fn hook_of_pair(&self, x: usize, y: usize) -> Result<Hook> {
        self.check_pair(x, y)?;
        let idx = self.0.iter().position(|&z| z == x).expect("checked");
        let row = idx + 1;
        let leg = self.0.iter().filter(|&&z| y < z && z < x).count();
        let length = x - y;
        let arm = length - 1 - leg;
        let t = self.0.len();
        let part = x - (t - 1 - idx);
        Ok(Hook { row, col: part - arm, length, arm, leg })
    }

    /// The β-pair `(x, y)` of the hook at node `(row, col)` of `P(X)`.
    pub fn pair_of_node(&self, row: usize, col: usize) -> Result<(usize, usize)> {
        let lambda = self.partition();
        let h = Hook::at(&lambda, row, col)
            .ok_or_else(|| crate::error::invalid(format!("node ({row},{col}) not in {lambda}")))?;
        if row > self.0.len() {
            return Err(crate::error::invalid("row beyond β-set"));
        }
        let x = self.0[row - 1];
        Ok((x, x - h.length))
    }
}

impl Hook {
    pub fn at(lambda: &Partition, row: usize, col: usize) -> Option<Hook> {
        if row == 0 || col == 0 || col > lambda.part(row) {
            return None;
        }
        let arm = lambda.part(row) - col;
        let leg = lambda.parts().iter().skip(row).take_while(|&&x| x >= col).count();
        Some(Hook { row, col, length: arm + leg + 1, arm, leg })
    }

    /// The hook partition `(arm + 1, 1^leg)` giving the shape of the hook.
    pub fn shape(&self) -> Partition {
        Partition::hook(self.length, self.leg)
    }
}

impl Partition {
    /// Every hook of the diagram in row-major order.
    pub fn hooks(&self) -> Vec<Hook> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.len() {
            for c in 1..=self.part(r) {
                out.push(Hook::at(self, r, c).expect("node in diagram"));
            }
        }
        out
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        self.hooks().into_iter().map(|h| h.length).collect()
    }

    /// The hooks whose length is divisible by `e`.
    pub fn e_hooks(&self, e: usize) -> Vec<Hook> {
        assert!(e >= 1);
        self.hooks().into_iter().filter(|h| h.length % e == 0).collect()
    }
}

impl TryFrom<Vec<usize>> for BetaSet {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        BetaSet::new(v)
    }
}

impl From<BetaSet> for Vec<usize> {
    fn from(b: BetaSet) -> Self {
        b.0
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
