//! Integer partitions and their Young-diagram geometry.

mod abacus;
mod beta;
mod degree;

pub use abacus::{core_quotient, from_core_quotient, is_core, n_s_invariant, CoreQuotient};
pub use beta::{BetaSet, Hook};
pub use degree::{degree, degree_as};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the empty partition of 0. Serialized as the plain
/// array of parts, e.g. `[7,5,5,3,3]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook partition `(n - leg, 1^leg)`.
    pub fn hook(n: usize, leg: usize) -> Self {
        assert!(leg < n, "hook ({n}-{leg},1^{leg}) is not a partition");
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with the convention `λ_i = 0` beyond the last part (1-based).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.first();
        let parts = (1..=first).map(|c| self.0.iter().take_while(|&&x| x >= c).count()).collect();
        Partition(parts)
    }

    /// Componentwise sum `λ + γ`.
    pub fn plus(&self, other: &Self) -> Self {
        let len = self.len().max(other.len());
        Partition((1..=len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// The partition obtained by reordering the parts of both.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// `λ ∈ B_{|λ|}(t)`: the diagram fits in a `t × t` square.
    pub fn in_box(&self, t: usize) -> bool {
        self.first() <= t && self.len() <= t
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&x| x == 1)
    }

    /// `max(λ_1, ℓ(λ))`.
    pub fn width(&self) -> usize {
        self.first().max(self.len())
    }

    /// Nodes `(r, c)` that can be removed leaving a partition (1-based).
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| (r, self.part(r))).collect()
    }

    /// Removes the node at the end of row `r` (must be a removable corner).
    pub fn remove_corner(&self, r: usize) -> Self {
        let mut parts = self.0.clone();
        parts[r - 1] -= 1;
        Self::from_unsorted(parts)
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::all_bounded(n, n)
    }

    /// Partitions of `n` whose parts are at most `max_part`.
    pub fn all_bounded(n: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, max_part.min(n), &mut cur, &mut out);
        out
    }
}

fn gen(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        gen(rest - part, part, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `7,5,5,3,3` (or an empty string for the empty partition).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used throughout the tests: `part![3, 2, 2]`.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::new(vec![$($x),+]).expect("valid partition literal") };
}
