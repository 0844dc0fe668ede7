//! Littlewood–Richardson coefficients and restrictions to Young subgroups.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Partition;

/// `c^λ_{μγ}`: the multiplicity of `χ^μ × χ^γ` in the restriction of `χ^λ`
/// to `S_{|μ|} × S_{|γ|}`, counted as LR tableaux of shape `λ/γ` and
/// content `μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, gamma: &Partition) -> Result<u64> {
    if mu.size() + gamma.size() != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() + gamma.size() });
    }
    if !lambda.contains(gamma) || !lambda.contains(mu) {
        return Ok(0);
    }
    let mut cells = Vec::new();
    for r in 1..=lambda.len() {
        for c in (gamma.part(r) + 1..=lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filler = Filler {
        lambda,
        gamma,
        mu: mu.parts(),
        cells: &cells,
        grid: vec![vec![0; lambda.first() + 2]; lambda.len() + 1],
        count: vec![0; mu.len() + 1],
    };
    Ok(filler.run(0))
}

struct Filler<'a> {
    lambda: &'a Partition,
    gamma: &'a Partition,
    mu: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    count: Vec<usize>,
}

impl Filler<'_> {
    fn run(&mut self, i: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(i) else {
            return 1;
        };
        let mut hi = self.mu.len().min(r);
        if c < self.lambda.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let lo = if r > 1 && c > self.gamma.part(r - 1) { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if self.count[v] >= self.mu[v - 1] || (v > 1 && self.count[v] + 1 > self.count[v - 1]) {
                continue;
            }
            self.count[v] += 1;
            self.grid[r][c] = v;
            total += self.run(i + 1);
            self.count[v] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// `LR(λ; μ_1, …, μ_t)`, expanded two factors at a time from the left.
pub fn lr_multi(lambda: &Partition, inners: &[Partition]) -> Result<BigUint> {
    let total: usize = inners.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), actual: total });
    }
    match inners {
        [] => Ok(BigUint::from(lambda.is_empty() as u32)),
        [only] => Ok(BigUint::from((only == lambda) as u32)),
        [first, rest @ ..] => {
            let mut acc = BigUint::zero();
            for nu in Partition::all(lambda.size() - first.size()) {
                let c = lr_coeff(lambda, first, &nu)?;
                if c > 0 {
                    acc += lr_multi(&nu, rest)? * c;
                }
            }
            Ok(acc)
        }
    }
}

/// A constituent `χ^μ × χ^γ` of `χ^λ` restricted to `S_x × S_{n−x}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub mu: Partition,
    pub gamma: Partition,
    pub multiplicity: u64,
}

/// All constituents of the restriction of `χ^λ` to `S_x × S_{|λ|−x}`.
pub fn restriction_constituents(lambda: &Partition, x: usize) -> Result<Vec<Constituent>> {
    let n = lambda.size();
    if x == 0 || x >= n {
        return Err(crate::error::invalid(format!("split {x} must lie strictly between 0 and {n}")));
    }
    let mut out = Vec::new();
    for gamma in Partition::all(n - x).into_iter().filter(|g| lambda.contains(g)) {
        for mu in Partition::all(x) {
            let c = lr_coeff(lambda, &mu, &gamma)?;
            if c > 0 {
                out.push(Constituent { mu, gamma: gamma.clone(), multiplicity: c });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{degree, part};

    #[test]
    fn basic_coefficients() {
        let l = part![3, 2, 1];
        assert_eq!(lr_coeff(&l, &l, &part![]).unwrap(), 1);
        assert_eq!(lr_coeff(&part![4, 1], &part![4], &part![1]).unwrap(), 1);
        assert_eq!(lr_coeff(&part![2, 2], &part![2, 1], &part![1]).unwrap(), 1);
        assert_eq!(lr_coeff(&part![3, 2, 1], &part![2, 1], &part![2, 1]).unwrap(), 2);
        assert!(lr_coeff(&part![2, 2], &part![2], &part![1]).is_err());
    }

    #[test]
    fn restriction_of_two_one() {
        let c = restriction_constituents(&part![2, 1], 2).unwrap();
        let pairs: Vec<_> = c.iter().map(|c| (c.mu.clone(), c.gamma.clone(), c.multiplicity)).collect();
        assert_eq!(pairs, vec![(part![2], part![1], 1), (part![1, 1], part![1], 1)]);
        let c = restriction_constituents(&part![1, 1, 1], 1).unwrap();
        assert!(c.iter().all(|c| c.gamma != part![2]));
    }

    #[test]
    fn symmetry_conjugation_and_degrees() {
        for n in 1..=12 {
            for l in Partition::all(n) {
                let dl = degree(&l);
                for x in 1..n {
                    let mut sum = BigUint::zero();
                    for c in restriction_constituents(&l, x).unwrap() {
                        assert_eq!(lr_coeff(&l, &c.gamma, &c.mu).unwrap(), c.multiplicity);
                        if n <= 9 {
                            let conj = lr_coeff(&l.conjugate(), &c.mu.conjugate(), &c.gamma.conjugate()).unwrap();
                            assert_eq!(conj, c.multiplicity);
                        }
                        sum += degree(&c.mu) * degree(&c.gamma) * c.multiplicity;
                    }
                    assert_eq!(sum, dl, "{l} split {x}");
                }
            }
        }
    }

    #[test]
    fn containment_criterion() {
        for n in 2..=9 {
            for l in Partition::all(n) {
                for x in 1..n {
                    let cons = restriction_constituents(&l, x).unwrap();
                    for g in Partition::all(n - x) {
                        assert_eq!(cons.iter().any(|c| c.gamma == g), l.contains(&g));
                    }
                }
            }
        }
    }

    #[test]
    fn multi_factor() {
        let l = part![3, 2, 1];
        let ones = vec![part![1]; 6];
        assert_eq!(lr_multi(&l, &ones).unwrap(), degree(&l));
        let two = lr_multi(&l, &[part![2, 1], part![2, 1]]).unwrap();
        assert_eq!(two, BigUint::from(2u32));
    }
}
