use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigUint;

use super::labels::{enum_norm_pk, NormPkLabel};
use super::wreath::WreathAssignment;
use crate::error::{invalid, Error, Result};
use crate::scalar::big_pow;
use crate::Partition;

/// Named families of characters of `N_{p^k} ≀ S_a` built from linear
/// characters `φ, η, η_i` of `N_{p^k}` (pairwise distinct within a member).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `φ ↦ ν`, `ν ∈ {(a)}°`.
    X0,
    /// `φ ↦ ν`, `ν ∈ {(a), (a−1,1)}°`.
    X,
    /// `φ ↦ ν, η ↦ (1)`, `ν ∈ {(a−1)}°`.
    Y0,
    /// `φ ↦ ν, η ↦ (1)`, `ν ∈ {(a−1), (a−2,1)}°`.
    Y,
    /// `φ ↦ ν, η_1, η_2 ↦ (1)`, `ν ∈ {(a−2)}°`.
    Z,
    /// `φ ↦ ν, η_1, η_2 ↦ (1)`, `ν ∈ {(a−2), (a−3,1)}°`; level 1, `a ≥ 6`.
    W,
    /// `φ ↦ ν, η ↦ ρ`, `ν ∈ {(a−2), (a−3,1)}°`, `ρ ∈ {(2)}°`; level 1, `a ≥ 6`.
    V,
    /// Three distinct linear characters, each with `(1)`; `a = 3`.
    V3,
    /// `φ ↦ ν, η ↦ ρ, η_1, η_2 ↦ (1)`, `ν ∈ {(a−4)}°`, `ρ ∈ {(2)}°`; level 1, `a ≥ 8`.
    Zc,
    /// Two distinct linear characters, each with `(1)`; `a = 2`.
    M,
    /// `θ ↦ (1), η_1, η_2 ↦ (1)` with `θ(1) = p − 1`; `a = 3`, `k ≥ 2`.
    A,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::X0,
        Family::X,
        Family::Y0,
        Family::Y,
        Family::Z,
        Family::W,
        Family::V,
        Family::V3,
        Family::Zc,
        Family::M,
        Family::A,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::X0 => "X0",
            Family::X => "X",
            Family::Y0 => "Y0",
            Family::Y => "Y",
            Family::Z => "Z",
            Family::W => "W",
            Family::V => "V",
            Family::V3 => "V3",
            Family::Zc => "Zc",
            Family::M => "M",
            Family::A => "A",
        }
    }

    /// Whether the family is defined for these parameters.
    pub fn admits(self, p: usize, k: u32, a: usize) -> bool {
        let a_ok = a >= 1 && a < p;
        a_ok && match self {
            Family::X0 | Family::X | Family::Y0 => a >= 2,
            Family::Y | Family::Z => a >= 3,
            Family::W | Family::V => k == 1 && a >= 6,
            Family::V3 => a == 3,
            Family::Zc => k == 1 && a >= 8,
            Family::M => a == 2,
            Family::A => a == 3 && k >= 2,
        }
    }

    /// The exact size of the family where a closed form is known.
    pub fn closed_size(self, p: usize, k: u32, a: usize) -> Option<BigUint> {
        let m = big_pow(p as u64 - 1, k);
        let one = BigUint::from(1u32);
        let c2 = |x: &BigUint| x * (x - &one) / 2u32;
        let c3 = |x: &BigUint| x * (x - &one) * (x - 2u32) / 6u32;
        let pb = BigUint::from(p);
        let size = match (self, a) {
            (Family::X0, _) => &m * 2u32,
            (Family::X, 3) => &m * 3u32,
            (Family::X, a) if a >= 4 => &m * 4u32,
            (Family::Y0, 2) => c2(&m),
            (Family::Y0, _) => &m * (&m - &one) * 2u32,
            (Family::Y, 3) => &m * (&m - &one) * 2u32,
            (Family::Y, 4) => &m * (&m - &one) * 3u32,
            (Family::Y, _) => &m * (&m - &one) * 4u32,
            (Family::Z, 3) => c3(&m),
            (Family::Z, _) => c3(&m) * 6u32,
            // 2p^3 - 12p^2 + 22p - 12 and 8p^2 - 24p + 16
            (Family::W, _) => 2u32 * pb.pow(3) + 22u32 * &pb - 12u32 * pb.pow(2) - 12u32,
            (Family::V, _) => 8u32 * pb.pow(2) + 16u32 - 24u32 * &pb,
            (Family::V3, _) => c3(&m),
            // 2p^4 - 20p^3 + 70p^2 - 100p + 48
            (Family::Zc, _) => 2u32 * pb.pow(4) + 70u32 * pb.pow(2) + 48u32 - 20u32 * pb.pow(3) - 100u32 * &pb,
            (Family::M, _) => c2(&m),
            (Family::A, _) => {
                let nonlinear = big_pow(p as u64 - 1, k - 1) * k;
                nonlinear * c2(&m)
            }
            _ => return None,
        };
        Some(size)
    }

    /// An upper bound on the degrees in the family.
    pub fn degree_bound(self, p: usize, a: usize) -> BigUint {
        let a = a as u64;
        let v = match self {
            Family::X0 => 1,
            Family::X => a - 1,
            Family::Y0 => a,
            Family::Y => a * (a - 2),
            Family::Z => a * (a - 1),
            Family::W => a * (a - 1) * (a - 3),
            Family::V => a * (a - 1) * (a - 3) / 2,
            Family::V3 => 6,
            Family::Zc => a * (a - 1) * (a - 2) * (a - 3) / 2,
            Family::M => 2,
            Family::A => 6 * (p as u64 - 1),
        };
        BigUint::from(v.max(1))
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown family {s:?}")))
    }
}

/// `{ν}°`: `ν` and its conjugate.
fn with_conjugates(nus: &[Partition]) -> Vec<Partition> {
    let set: BTreeSet<Partition> = nus.iter().flat_map(|n| [n.clone(), n.conjugate()]).collect();
    set.into_iter().collect()
}

fn two_part(first: usize, second: usize) -> Partition {
    Partition::from_unsorted(vec![first, second])
}

/// The members of a family, deduplicated and in lexicographic order.
pub fn distinguished_subset(p: usize, k: u32, a: usize, family: Family) -> Result<Vec<WreathAssignment>> {
    if !crate::scalar::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if !family.admits(p, k, a) {
        return Err(invalid(format!("family {} is not defined for p={p}, k={k}, a={a}", family.name())));
    }
    let labels = enum_norm_pk(p, k);
    let lin: Vec<NormPkLabel> = labels.iter().filter(|l| l.is_linear()).cloned().collect();
    let one = Partition::row(1);
    let mut out = BTreeSet::new();
    let mut add = |entries: Vec<(NormPkLabel, Partition)>| {
        out.insert(WreathAssignment::new(entries).expect("distinct labels"));
    };
    let distinct = |ls: &[&NormPkLabel]| (0..ls.len()).all(|i| (i + 1..ls.len()).all(|j| ls[i] != ls[j]));

    match family {
        Family::X0 | Family::X => {
            let mut nus = vec![Partition::row(a)];
            if family == Family::X {
                nus.push(two_part(a - 1, 1));
            }
            for phi in &lin {
                for nu in with_conjugates(&nus) {
                    add(vec![(phi.clone(), nu)]);
                }
            }
        }
        Family::Y0 | Family::Y => {
            let mut nus = vec![Partition::row(a - 1)];
            if family == Family::Y {
                nus.push(two_part(a - 2, 1));
            }
            let nus = with_conjugates(&nus);
            for phi in &lin {
                for eta in &lin {
                    if phi == eta {
                        continue;
                    }
                    for nu in &nus {
                        add(vec![(phi.clone(), nu.clone()), (eta.clone(), one.clone())]);
                    }
                }
            }
        }
        Family::Z | Family::W => {
            let mut nus = vec![Partition::row(a - 2)];
            if family == Family::W {
                nus.push(two_part(a - 3, 1));
            }
            let nus = with_conjugates(&nus);
            for phi in &lin {
                for e1 in &lin {
                    for e2 in &lin {
                        if !distinct(&[phi, e1, e2]) {
                            continue;
                        }
                        for nu in &nus {
                            add(vec![(phi.clone(), nu.clone()), (e1.clone(), one.clone()), (e2.clone(), one.clone())]);
                        }
                    }
                }
            }
        }
        Family::V => {
            let nus = with_conjugates(&[Partition::row(a - 2), two_part(a - 3, 1)]);
            let rhos = with_conjugates(&[Partition::row(2)]);
            for phi in &lin {
                for eta in &lin {
                    if phi == eta {
                        continue;
                    }
                    for nu in &nus {
                        for rho in &rhos {
                            add(vec![(phi.clone(), nu.clone()), (eta.clone(), rho.clone())]);
                        }
                    }
                }
            }
        }
        Family::V3 | Family::M => {
            let count = if family == Family::V3 { 3 } else { 2 };
            for (i, x) in lin.iter().enumerate() {
                for (j, y) in lin.iter().enumerate().skip(i + 1) {
                    if count == 2 {
                        add(vec![(x.clone(), one.clone()), (y.clone(), one.clone())]);
                        continue;
                    }
                    for z in lin.iter().skip(j + 1) {
                        add(vec![(x.clone(), one.clone()), (y.clone(), one.clone()), (z.clone(), one.clone())]);
                    }
                }
            }
        }
        Family::Zc => {
            let nus = with_conjugates(&[Partition::row(a - 4)]);
            let rhos = with_conjugates(&[Partition::row(2)]);
            for phi in &lin {
                for eta in &lin {
                    for e1 in &lin {
                        for e2 in &lin {
                            if !distinct(&[phi, eta, e1, e2]) {
                                continue;
                            }
                            for nu in &nus {
                                for rho in &rhos {
                                    add(vec![
                                        (phi.clone(), nu.clone()),
                                        (eta.clone(), rho.clone()),
                                        (e1.clone(), one.clone()),
                                        (e2.clone(), one.clone()),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Family::A => {
            let target = BigUint::from(p - 1);
            for theta in labels.iter().filter(|l| l.degree() == target) {
                for (i, e1) in lin.iter().enumerate() {
                    for e2 in lin.iter().skip(i + 1) {
                        add(vec![(theta.clone(), one.clone()), (e1.clone(), one.clone()), (e2.clone(), one.clone())]);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The degree-2 characters induced from two distinct linear characters of
/// `N_{p^k} × N_{p^k}`.
pub fn case_one_m_set(p: usize, k: u32) -> Result<Vec<WreathAssignment>> {
    distinguished_subset(p, k, 2, Family::M)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(p: usize, k: u32, a: usize, f: Family) -> usize {
        distinguished_subset(p, k, a, f).unwrap().len()
    }

    #[test]
    fn notation_sizes() {
        for p in [5usize, 7] {
            let m = p - 1;
            assert_eq!(size(p, 1, 3, Family::X), 3 * m);
            assert_eq!(size(p, 1, 3, Family::Y0), 2 * m * (m - 1));
            assert_eq!(size(p, 1, 2, Family::Y0), m * (m - 1) / 2);
            assert_eq!(size(p, 1, 4, Family::X), 4 * m);
            assert_eq!(size(p, 1, 4, Family::Z), m * (m - 1) * (m - 2));
        }
        assert_eq!(size(5, 1, 2, Family::M), 6);
        assert_eq!(size(5, 2, 2, Family::M), 120);
        assert_eq!(size(5, 2, 3, Family::A), 960);
    }

    #[test]
    fn closed_forms_agree() {
        for p in [5usize, 7, 11, 13] {
            for k in 1..=2u32 {
                if k == 2 && p > 7 {
                    continue;
                }
                for a in 2..p {
                    for f in Family::ALL {
                        if !f.admits(p, k, a) || (k == 2 && f == Family::Z && a > 3) {
                            continue;
                        }
                        let got = distinguished_subset(p, k, a, f).unwrap();
                        if let Some(want) = f.closed_size(p, k, a) {
                            assert_eq!(BigUint::from(got.len()), want, "{} p={p} k={k} a={a}", f.name());
                        }
                        let bound = f.degree_bound(p, a);
                        assert!(got.iter().all(|w| w.degree() <= bound && w.a() == a), "{}", f.name());
                    }
                }
            }
        }
    }

    #[test]
    fn exact_degrees() {
        for a in 2..5 {
            let x0 = distinguished_subset(7, 1, a, Family::X0).unwrap();
            assert!(x0.iter().all(|w| w.degree() == BigUint::from(1u32)));
            for w in distinguished_subset(7, 1, a, Family::X).unwrap() {
                if !x0.contains(&w) {
                    assert_eq!(w.degree(), BigUint::from(a as u32 - 1));
                }
            }
            for w in distinguished_subset(7, 1, a, Family::Y0).unwrap() {
                assert_eq!(w.degree(), BigUint::from(a as u32));
            }
        }
        assert!(case_one_m_set(5, 1).unwrap().iter().all(|w| w.degree() == BigUint::from(2u32)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(distinguished_subset(5, 1, 4, Family::W).is_err());
        assert!(distinguished_subset(5, 1, 5, Family::X).is_err());
        assert!("Q".parse::<Family>().is_err());
        assert_eq!("zc".parse::<Family>().unwrap(), Family::Zc);
    }
}
