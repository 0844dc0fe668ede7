use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::bijection::Strategy;
use crate::part;
use crate::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub n_max: usize,
    pub primes: Vec<usize>,
    pub seed: u64,
    /// Sample size for the level-two box inclusion.
    pub star_sample: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_max: 40, primes: vec![2, 3, 5, 7, 11, 13], seed: 0x5eed, star_sample: 100 }
    }
}

type Job = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    let n_max = cfg.n_max;
    for &p in &cfg.primes {
        for n in 1..=n_max {
            out.push(Box::new(move || check_counting(n, p)));
            for s in [Strategy::Recursive, Strategy::Global] {
                out.push(Box::new(move || check_bijection(n, p, s)));
            }
        }
    }
    if n_max >= 5 {
        let hi = n_max.min(40);
        out.push(Box::new(move || check_min_degrees(5, hi)));
    }
    out.push(Box::new(|| check_appendix(97, 12)));
    out.push(Box::new(|| check_hook_addition(&part![2, 1], 5)));
    out.push(Box::new(|| check_hook_addition(&part![3, 1, 1], 4)));
    out.push(Box::new(|| check_hook_addition(&part![], 7)));
    for &p in cfg.primes.iter().filter(|&&p| p >= 5) {
        for a in 1..p {
            if a * p <= n_max {
                out.push(Box::new(move || check_max_deg(p, 1, a)));
                out.push(Box::new(move || check_subset_sizes(p, 1, a)));
                for gamma in [Partition::empty(), part![1], part![2, 1]] {
                    if a * p + gamma.size() <= n_max {
                        out.push(Box::new(move || check_delta_sizes(p, 1, a, &gamma)));
                    }
                }
            }
        }
        if p <= n_max {
            out.push(Box::new(move || check_star_box(p, 1, usize::MAX, 0)));
            out.push(Box::new(move || check_star_degree_bounds(p, 1, 1, 0)));
        }
    }
    if cfg.primes.contains(&5) && n_max >= 25 {
        let (sample, seed) = (cfg.star_sample, cfg.seed);
        out.push(Box::new(move || check_star_box(5, 2, sample, seed)));
        out.push(Box::new(|| check_star_degree_bounds(5, 2, 1, 0)));
        if n_max >= 30 {
            out.push(Box::new(move || check_star_box_composite(30.min(n_max), 5)));
        }
    }
    out
}

/// Runs the standard checks for `cfg` in parallel; results come back in a
/// fixed order independent of scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    jobs(cfg).par_iter().map(|job| job()).collect()
}
