use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{outcome, run, CheckResult, Outcome};
use crate::error::{invalid, Result};
use crate::normalizer::max_degree_apk;
use crate::scalar::{big_pow, factorial, is_prime, p_adic_digits};
use crate::sylow::{m_star, ClassDistribution, StarLabel};
use crate::sym::MnCache;
use crate::{degree, Partition};

/// Exhaustive minimum-degree bounds over `P(n)` for `n` in `lo..=hi`:
/// nonlinear degrees are at least `n − 1`; inside `B_n(n−2)` (`n ≥ 9`) at
/// least `n(n−3)/2`; inside `B_n(n−3)` (`n ≥ 15`) at least
/// `n(n−1)(n−5)/6`.
pub fn check_min_degrees(lo: usize, hi: usize) -> CheckResult {
    run("min_degree_bounds", json!({ "from": lo, "to": hi }), || {
        if lo < 5 || hi > 40 || lo > hi {
            return Err(invalid(format!("range [{lo}, {hi}] is outside [5, 40]")));
        }
        let rows = (lo..=hi)
            .into_par_iter()
            .map(|n| {
                let mut min_nonlinear: Option<(BigUint, Partition)> = None;
                let mut min_b2: Option<(BigUint, Partition)> = None;
                let mut min_b3: Option<(BigUint, Partition)> = None;
                let keep = |slot: &mut Option<(BigUint, Partition)>, d: &BigUint, l: &Partition| {
                    if slot.as_ref().is_none_or(|(m, _)| d < m) {
                        *slot = Some((d.clone(), l.clone()));
                    }
                };
                for l in Partition::all(n) {
                    let d = degree(&l);
                    if !d.is_one() {
                        keep(&mut min_nonlinear, &d, &l);
                    }
                    if n >= 9 && l.in_box(n - 2) {
                        keep(&mut min_b2, &d, &l);
                    }
                    if n >= 15 && l.in_box(n - 3) {
                        keep(&mut min_b3, &d, &l);
                    }
                }
                let b1 = BigUint::from(n - 1);
                let b2 = BigUint::from(n * (n - 3) / 2);
                let b3 = BigUint::from(n * (n - 1) * (n - 5) / 6);
                let ok = min_nonlinear.as_ref().is_none_or(|(d, _)| *d >= b1)
                    && min_b2.as_ref().is_none_or(|(d, _)| *d >= b2)
                    && min_b3.as_ref().is_none_or(|(d, _)| *d >= b3);
                let show = |m: &Option<(BigUint, Partition)>, b: &BigUint| {
                    m.as_ref().map(|(d, l)| json!({ "min": d.to_string(), "at": l, "bound": b.to_string() }))
                };
                (ok, json!({ "n": n, "nonlinear": show(&min_nonlinear, &b1), "box2": show(&min_b2, &b2), "box3": show(&min_b3, &b3) }))
            })
            .collect::<Vec<_>>();
        let ok = rows.iter().all(|(ok, _)| *ok);
        Ok(outcome(ok, json!(rows.into_iter().map(|(_, w)| w).collect::<Vec<_>>())))
    })
}

/// The maximum over `Irr_{p'}(N_{p^k} ≀ S_a)` equals `(p−1)^{ak}·d`, with
/// `d` the largest degree of `S_a`.
pub fn check_max_deg(p: usize, k: u32, a: usize) -> CheckResult {
    run("max_normalizer_degree", json!({ "p": p, "k": k, "a": a }), || {
        let got = max_degree_apk(p, k, a)?;
        let d = Partition::all(a).iter().map(degree).max().unwrap_or_else(BigUint::one);
        let want = big_pow(p as u64 - 1, a as u32 * k) * &d;
        Ok(outcome(
            got == want,
            json!({ "enumerated": got.to_string(), "closedForm": want.to_string(), "maxDegreeSa": d.to_string() }),
        ))
    })
}

fn need_prime_at_least_5(p: usize) -> Result<()> {
    if !is_prime(p as u64) || p < 5 {
        return Err(invalid(format!("p = {p} must be a prime ≥ 5")));
    }
    Ok(())
}

/// Multiplicities of `X` in the restrictions of `lambdas`; each must be a
/// nonnegative integer or the whole call fails.
fn multiplicities(dist: &ClassDistribution, lambdas: &[Partition]) -> Result<Vec<BigUint>> {
    let sums = dist.class_sums();
    let cache = MnCache::new();
    lambdas.par_iter().map(|l| dist.multiplicity(l, &sums, &cache)).collect()
}

fn box_inclusion(
    id: &str,
    params: serde_json::Value,
    dist: &ClassDistribution,
    sample: Vec<Partition>,
    extra: serde_json::Value,
) -> CheckResult {
    run(id, params, || {
        let mults = multiplicities(dist, &sample)?;
        let zero: Vec<&Partition> = sample.iter().zip(&mults).filter(|(_, m)| m.is_zero()).map(|(l, _)| l).collect();
        let min_mult = mults.iter().min().map(ToString::to_string);
        Ok(outcome(
            zero.is_empty(),
            json!({ "checked": sample.len(), "zeroMultiplicity": zero, "minMultiplicity": min_mult, "sampling": extra }),
        ))
    })
}

/// `B_{p^k}(m*(k)) ⊆ Ω(X*_k)`. Every partition in the box is checked when
/// there are at most `sample` of them; otherwise a seeded sample of that
/// size is drawn without replacement.
pub fn check_star_box(p: usize, k: u32, sample: usize, seed: u64) -> CheckResult {
    let params = json!({ "p": p, "k": k, "sample": sample, "seed": seed });
    if let Err(e) = need_prime_at_least_5(p) {
        return run("star_box_inclusion", params, || Err(e));
    }
    let n = p.pow(k);
    let t = m_star(p, k);
    let boxed: Vec<Partition> = Partition::all_bounded(n, t).into_iter().filter(|l| l.len() <= t).collect();
    let population = boxed.len();
    let (chosen, mode) = if population <= sample {
        (boxed, "full")
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s: Vec<Partition> = boxed.choose_multiple(&mut rng, sample).cloned().collect();
        s.sort();
        (s, "sampled")
    };
    let dist = ClassDistribution::aggregate(&StarLabel::star(p, k));
    box_inclusion(
        "star_box_inclusion",
        params,
        &dist,
        chosen,
        json!({ "mode": mode, "box": t, "population": population, "seed": seed }),
    )
}

/// `B_n(T) ⊆ Ω(X*_(n))` for the product star character over the base-`p`
/// digits of `n`, with `T = Σ m*(k_i) + a_0`. Checks the whole box.
pub fn check_star_box_composite(n: usize, p: usize) -> CheckResult {
    let params = json!({ "n": n, "p": p });
    if let Err(e) = need_prime_at_least_5(p) {
        return run("star_box_inclusion_composite", params, || Err(e));
    }
    let digits = p_adic_digits(n, p);
    let t: usize = digits[0] + digits.iter().enumerate().skip(1).map(|(k, &a)| a * m_star(p, k as u32)).sum::<usize>();
    let boxed: Vec<Partition> = Partition::all_bounded(n, t).into_iter().filter(|l| l.len() <= t).collect();
    let population = boxed.len();
    let dist = ClassDistribution::composite_star(n, p);
    box_inclusion(
        "star_box_inclusion_composite",
        params,
        &dist,
        boxed,
        json!({ "mode": "full", "box": t, "population": population }),
    )
}

/// Lower bounds for constituents over the star character at `n = a·p^k + a_0`:
/// `(p−1)^{p^{k−1}}` when `n = p^k`, and `(p−1)^{ak}·a!·(p−1)!` when
/// `k ≥ 2`. Every partition below the bound must have multiplicity zero.
/// When `P(n)` is small every multiplicity is computed and the least
/// positive degree is reported.
pub fn check_star_degree_bounds(p: usize, k: u32, a: usize, a0: usize) -> CheckResult {
    run("star_degree_lower_bounds", json!({ "p": p, "k": k, "a": a, "a0": a0 }), || {
        need_prime_at_least_5(p)?;
        if k == 0 || a == 0 || a >= p || a0 >= p {
            return Err(invalid(format!("need k ≥ 1, a in [1, {}], a0 in [0, {}]", p - 1, p - 1)));
        }
        let single = a == 1 && a0 == 0;
        let bound_prime_power = single.then(|| big_pow(p as u64 - 1, p.pow(k - 1) as u32));
        let bound_digits = (k >= 2).then(|| big_pow(p as u64 - 1, a as u32 * k) * factorial(a) * factorial(p - 1));
        let Some(bound) = bound_prime_power.iter().chain(&bound_digits).max().cloned() else {
            return Ok(Outcome::Skipped("neither bound applies for k = 1 with more than one digit".into()));
        };
        let n = a * p.pow(k) + a0;
        let dist = ClassDistribution::composite_star(n, p);
        let all = Partition::all(n);
        let full = all.len() <= 20_000;
        let checked: Vec<Partition> = if full { all } else { all.into_iter().filter(|l| degree(l) < bound).collect() };
        let mults = multiplicities(&dist, &checked)?;
        let mut violations = Vec::new();
        let mut min_positive: Option<BigUint> = None;
        for (l, m) in checked.iter().zip(&mults) {
            if m.is_zero() {
                continue;
            }
            let d = degree(l);
            if d < bound {
                violations.push(json!({ "lambda": l, "degree": d.to_string(), "multiplicity": m.to_string() }));
            }
            if min_positive.as_ref().is_none_or(|x| &d < x) {
                min_positive = Some(d);
            }
        }
        Ok(outcome(
            violations.is_empty(),
            json!({
                "n": n,
                "mode": if full { "full" } else { "below-bound" },
                "checked": checked.len(),
                "boundPrimePower": bound_prime_power.map(|b| b.to_string()),
                "boundDigits": bound_digits.map(|b| b.to_string()),
                "minPositiveDegree": if full { min_positive.map(|d| d.to_string()) } else { None },
                "violations": violations,
            }),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_degree_examples() {
        let r = check_min_degrees(5, 15);
        assert!(r.passed(), "{:?}", r.witness);
        let w = r.witness.unwrap();
        assert_eq!(w[0]["nonlinear"]["min"], "4");
        assert_eq!(w[4]["box2"]["min"], "27");
        assert_eq!(w[4]["box2"]["at"], json!([7, 2]));
        assert_eq!(w[10]["box3"]["bound"], "350");
        assert!(!check_min_degrees(4, 10).passed());
    }

    #[test]
    fn max_degree_example() {
        let r = check_max_deg(5, 1, 3);
        assert!(r.passed());
        assert_eq!(r.witness.unwrap()["enumerated"], "128");
    }

    #[test]
    fn star_p5_level1() {
        let r = check_star_box(5, 1, 100, 0);
        assert!(r.passed(), "{:?}", r.witness);
        assert_eq!(r.witness.unwrap()["checked"], 5);
        let r = check_star_degree_bounds(5, 1, 1, 0);
        assert!(r.passed());
        assert_eq!(r.witness.unwrap()["minPositiveDegree"], "4");
        assert_eq!(check_star_degree_bounds(5, 1, 2, 0).status, super::super::Status::Skipped);
    }

    #[test]
    fn star_composite_small() {
        let r = check_star_box_composite(12, 5);
        assert!(r.passed(), "{:?}", r.witness);
        assert!(!check_star_box(4, 1, 10, 0).passed());
    }
}
