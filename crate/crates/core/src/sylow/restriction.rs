use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::cyclo::CycloInt;
use super::element::{word_len, WreathElement};
use super::StarLabel;
use crate::error::{Error, Result};
use crate::scalar::big_pow;
use crate::sym::MnCache;
use crate::{degree, Partition};

/// Default bound on the number of group elements enumerated explicitly.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// `|P_{p^k}| = p^{(p^k − 1)/(p − 1)}`.
pub fn sylow_order(p: usize, k: u32) -> BigUint {
    big_pow(p as u64, word_len(p, k) as u32)
}

/// `m*(1) = p − 1` and `m*(k) = p^k − p^{k−1} − p^{k−2}` for `k ≥ 2`.
pub fn m_star(p: usize, k: u32) -> usize {
    match k {
        0 => 0,
        1 => p - 1,
        _ => p.pow(k) - p.pow(k - 1) - p.pow(k - 2),
    }
}

/// Element counts of a Sylow subgroup keyed by (cycle type, exponent of
/// the chosen linear character).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDistribution {
    pub p: usize,
    pub points: usize,
    pub order: BigUint,
    pub counts: BTreeMap<(Partition, usize), BigUint>,
}

impl ClassDistribution {
    /// Walks every element of `P_{p^k}`; refuses groups larger than `cap`.
    pub fn enumerate(s: &StarLabel, cap: u64) -> Result<Self> {
        let (p, k) = (s.p, s.k);
        let order = sylow_order(p, k);
        let size = order.to_u128().unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        let chunks: Vec<BTreeMap<(Partition, usize), u64>> = (0..size)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc, idx| {
                let g = WreathElement::from_index(p, k, idx);
                let e = g.lin_exponent(s).expect("levels agree");
                *acc.entry((g.cycle_type(), e)).or_insert(0) += 1;
                acc
            })
            .collect();
        let mut counts = BTreeMap::new();
        for chunk in chunks {
            for (key, c) in chunk {
                *counts.entry(key).or_insert_with(BigUint::zero) += c;
            }
        }
        Ok(ClassDistribution { p, points: p.pow(k), order, counts })
    }

    /// The same counts by recursion on the level: with `h = 0` the children
    /// are independent, otherwise only the product of the children matters
    /// and it is uniformly distributed.
    pub fn aggregate(s: &StarLabel) -> Self {
        let p = s.p;
        let mut dist = Self::trivial(p);
        for level in 1..=s.k {
            let x = s.s[level as usize - 1];
            let mut counts = dist.power(p).counts;
            let free = dist.order.pow(p as u32 - 1);
            for h in 1..p {
                for ((ct, e), c) in &dist.counts {
                    let stretched = Partition::from_unsorted(ct.parts().iter().map(|l| l * p).collect());
                    let key = (stretched, (e + x * h) % p);
                    *counts.entry(key).or_insert_with(BigUint::zero) += c * &free;
                }
            }
            dist = ClassDistribution { p, points: dist.points * p, order: dist.order.pow(p as u32) * p, counts };
        }
        dist
    }

    /// The trivial group acting on one point.
    pub fn trivial(p: usize) -> Self {
        Self::fixed_points(p, 1)
    }

    /// The trivial group acting on `m` points.
    pub fn fixed_points(p: usize, m: usize) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert((Partition::column(m), 0), BigUint::one());
        ClassDistribution { p, points: m, order: BigUint::one(), counts }
    }

    /// Direct product acting on the disjoint union of the point sets.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let mut counts = BTreeMap::new();
        for ((c1, e1), n1) in &self.counts {
            for ((c2, e2), n2) in &other.counts {
                let key = (c1.union(c2), (e1 + e2) % self.p);
                *counts.entry(key).or_insert_with(BigUint::zero) += n1 * n2;
            }
        }
        ClassDistribution { p: self.p, points: self.points + other.points, order: &self.order * &other.order, counts }
    }

    pub fn power(&self, m: usize) -> Self {
        (0..m).fold(Self::fixed_points(self.p, 0), |acc, _| acc.product(self))
    }

    /// `P_n` with the product of star characters over its base-`p` digits.
    pub fn composite_star(n: usize, p: usize) -> Self {
        let digits = crate::scalar::p_adic_digits(n, p);
        let mut dist = Self::fixed_points(p, digits.first().copied().unwrap_or(0));
        for (k, &a) in digits.iter().enumerate().skip(1) {
            if a > 0 {
                dist = Self::aggregate(&StarLabel::star(p, k as u32)).power(a).product(&dist);
            }
        }
        dist
    }

    /// `Σ_{g of type t} conj(X(g))` for every cycle type `t`.
    pub fn class_sums(&self) -> BTreeMap<Partition, CycloInt<BigInt>> {
        let mut out: BTreeMap<Partition, CycloInt<BigInt>> = BTreeMap::new();
        for ((ct, e), c) in &self.counts {
            let term = CycloInt::omega_pow(self.p, -(*e as i64)).scale(&BigInt::from(c.clone()));
            let slot = out.entry(ct.clone()).or_insert_with(|| CycloInt::zero(self.p));
            *slot = &*slot + &term;
        }
        out
    }

    /// `[χ^λ restricted, X]`; anything but a nonnegative integer is a fault.
    pub fn multiplicity(
        &self,
        lambda: &Partition,
        sums: &BTreeMap<Partition, CycloInt<BigInt>>,
        cache: &MnCache,
    ) -> Result<BigUint> {
        if lambda.size() != self.points {
            return Err(Error::SizeMismatch { expected: self.points, actual: lambda.size() });
        }
        let mut total = CycloInt::zero(self.p);
        for (ct, sum) in sums {
            let chi = cache.value(lambda, ct)?;
            total = &total + &sum.scale(&chi);
        }
        let value = total
            .to_rational()
            .ok_or_else(|| Error::Fault(format!("inner product for {lambda} is not rational: {total}")))?;
        let (q, r) = value.div_rem(&BigInt::from(self.order.clone()));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::Fault(format!("inner product for {lambda} is {value}/{}", self.order)));
        }
        Ok(q.magnitude().clone())
    }
}

/// `[χ^λ restricted to P_{p^k}, X(s)]` by explicit enumeration of `P_{p^k}`.
pub fn restriction_multiplicity(lambda: &Partition, s: &StarLabel, cap: u64) -> Result<BigUint> {
    let dist = ClassDistribution::enumerate(s, cap)?;
    dist.multiplicity(lambda, &dist.class_sums(), &MnCache::new())
}

/// Findings of a star-character inclusion check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OmegaReport {
    pub p: usize,
    pub k: u32,
    pub m_star: usize,
    pub bound: String,
    pub checked: usize,
    pub in_box: usize,
    pub positive: usize,
    pub min_positive_degree: Option<String>,
    pub violations: Vec<String>,
}

impl OmegaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each sampled `λ ⊢ p^k`: members of `B_{p^k}(m*(k))` must have positive
/// star multiplicity, and every `λ` with positive multiplicity must have
/// degree at least `(p − 1)^{p^{k−1}}`.
pub fn omega_star_check(dist: &ClassDistribution, k: u32, sample: &[Partition]) -> Result<OmegaReport> {
    let p = dist.p;
    let sums = dist.class_sums();
    let cache = MnCache::new();
    let bound = big_pow(p as u64 - 1, p.pow(k - 1) as u32);
    let t = m_star(p, k);
    let mults = sample.par_iter().map(|l| dist.multiplicity(l, &sums, &cache)).collect::<Result<Vec<_>>>()?;
    let mut report =
        OmegaReport { p, k, m_star: t, bound: bound.to_string(), checked: sample.len(), ..Default::default() };
    let mut min_deg: Option<BigUint> = None;
    for (l, m) in sample.iter().zip(mults) {
        let inside = l.in_box(t);
        if inside {
            report.in_box += 1;
            if m.is_zero() {
                report.violations.push(format!("{l} lies in B({t}) but has multiplicity 0"));
            }
        }
        if !m.is_zero() {
            report.positive += 1;
            let d = degree(l);
            if d < bound {
                report.violations.push(format!("{l} has multiplicity {m} and degree {d} < {bound}"));
            }
            if min_deg.as_ref().is_none_or(|x| &d < x) {
                min_deg = Some(d);
            }
        }
    }
    report.min_positive_degree = min_deg.map(|d| d.to_string());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn orders_and_m_star() {
        assert_eq!(sylow_order(5, 2), BigUint::from(15625u32));
        assert_eq!(sylow_order(2, 3), BigUint::from(128u32));
        assert_eq!(m_star(5, 1), 4);
        assert_eq!(m_star(5, 2), 19);
    }

    #[test]
    fn five_point_examples() {
        let star = StarLabel::star(5, 1);
        assert_eq!(restriction_multiplicity(&part![5], &star, DEFAULT_CAP).unwrap(), BigUint::zero());
        assert_eq!(restriction_multiplicity(&part![4, 1], &star, DEFAULT_CAP).unwrap(), BigUint::one());
        for l in Partition::all(5).into_iter().filter(|l| l.in_box(4)) {
            assert!(restriction_multiplicity(&l, &star, DEFAULT_CAP).unwrap() >= BigUint::one());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = restriction_multiplicity(&Partition::column(25), &StarLabel::star(5, 2), 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn enumeration_matches_aggregation() {
        for (p, k) in [(2usize, 3u32), (3, 2), (5, 1), (5, 2), (7, 1)] {
            for s in StarLabel::all(p, k).into_iter().take(6) {
                let a = ClassDistribution::enumerate(&s, DEFAULT_CAP).unwrap();
                let b = ClassDistribution::aggregate(&s);
                assert_eq!(a, b, "p={p} k={k} s={:?}", s.s);
            }
        }
    }

    #[test]
    fn cycle_type_census() {
        let d = ClassDistribution::enumerate(&StarLabel::star(5, 2), DEFAULT_CAP).unwrap();
        let types: std::collections::BTreeSet<_> = d.counts.keys().map(|(ct, _)| ct.clone()).collect();
        let total: BigUint = d.counts.values().sum();
        assert_eq!(total, BigUint::from(15625u32));
        // Solutions of 25 = a + 5b + 25c.
        let solutions = (0..=1).map(|c| (25 - 25 * c) / 5 + 1).sum::<usize>();
        assert_eq!(types.len(), solutions);
    }

    #[test]
    fn linear_constituents_bound_degree() {
        let cache = MnCache::new();
        let dists: Vec<_> =
            StarLabel::all(5, 1).iter().map(|s| ClassDistribution::enumerate(s, DEFAULT_CAP).unwrap()).collect();
        for l in Partition::all(5) {
            let total: BigUint = dists.iter().map(|d| d.multiplicity(&l, &d.class_sums(), &cache).unwrap()).sum();
            // P_5 is abelian, so the restriction is a sum of linear characters.
            assert_eq!(total, degree(&l));
        }
    }

    #[test]
    fn composite_distribution_sizes() {
        let d = ClassDistribution::composite_star(27, 5);
        assert_eq!(d.points, 27);
        assert_eq!(d.order, BigUint::from(15625u32));
        let total: BigUint = d.counts.values().sum();
        assert_eq!(total, d.order);
    }
}
