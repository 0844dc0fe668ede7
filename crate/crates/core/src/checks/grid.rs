use num_bigint::BigInt;
use serde_json::json;

use super::{outcome, run, CheckResult};
use crate::scalar::primes_up_to;

fn pow(b: u64, e: u64) -> BigInt {
    BigInt::from(b).pow(e as u32)
}

/// `a·p^{k−1} ≥ ak + (a−1) + (p−2)`.
pub fn digit_exponent_bound_holds(a: u64, p: u64, k: u64) -> bool {
    BigInt::from(a) * pow(p, k - 1) >= BigInt::from(a * k + (a - 1) + (p - 2))
}

/// `(p−1)^{3k} + 3(p−1)^k − 2p^{2k} − 2p^k`.
pub fn cubic_gap(p: u64, k: u64) -> BigInt {
    pow(p - 1, 3 * k) + 3 * pow(p - 1, k) - 2 * pow(p, 2 * k) - 2 * pow(p, k)
}

/// Six times `(p−1)^{3k}/6 + 3(p−1)^{2k}/2 + 4(p−1)^k/3 − 2p^{2k} − p^k`,
/// which keeps everything integral.
pub fn sharp_cubic_gap_times6(p: u64, k: u64) -> BigInt {
    pow(p - 1, 3 * k) + 9 * pow(p - 1, 2 * k) + 8 * pow(p - 1, k) - 12 * pow(p, 2 * k) - 6 * pow(p, k)
}

/// The three inequalities on the lattice `5 ≤ p ≤ p_max` prime,
/// `2 ≤ k ≤ k_max`, `1 ≤ a ≤ p − 1`. The third must fail at `(5, 2)` and
/// nowhere else. Real-variable statements are only sampled on integers.
pub fn check_appendix(p_max: u64, k_max: u64) -> CheckResult {
    run("appendix_inequalities", json!({ "pMax": p_max, "kMax": k_max, "domain": "integer lattice" }), || {
        let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| p >= 5).collect();
        let mut bad1 = Vec::new();
        let mut bad2 = Vec::new();
        let mut neg3 = Vec::new();
        let mut points = 0u64;
        for &p in &primes {
            for k in 2..=k_max {
                for a in 1..p {
                    points += 1;
                    if !digit_exponent_bound_holds(a, p, k) {
                        bad1.push((a, p, k));
                    }
                }
                if cubic_gap(p, k) < BigInt::from(0) {
                    bad2.push((p, k));
                }
                if sharp_cubic_gap_times6(p, k) < BigInt::from(0) {
                    neg3.push((p, k));
                }
            }
        }
        let expected_neg: Vec<(u64, u64)> = if p_max >= 5 && k_max >= 2 { vec![(5, 2)] } else { vec![] };
        let ok = bad1.is_empty() && bad2.is_empty() && neg3 == expected_neg;
        Ok(outcome(
            ok,
            json!({
                "points": points,
                "exponentBoundFailures": bad1,
                "cubicGapFailures": bad2,
                "sharpGapNegative": neg3,
                "sharpGapExpectedNegative": expected_neg,
                "cubicGapAt5_2": cubic_gap(5, 2).to_string(),
                "sharpGapTimes6At5_2": sharp_cubic_gap_times6(5, 2).to_string(),
            }),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        // Equality: 1·5 = 2 + 0 + 3.
        assert!(digit_exponent_bound_holds(1, 5, 2));
        assert_eq!(cubic_gap(5, 2), BigInt::from(2844));
        assert_eq!(sharp_cubic_gap_times6(5, 2), BigInt::from(-1122));
        assert!(sharp_cubic_gap_times6(5, 3) > BigInt::from(0));
        assert!(sharp_cubic_gap_times6(7, 2) > BigInt::from(0));
    }

    #[test]
    fn small_grid() {
        let r = check_appendix(13, 4);
        assert!(r.passed(), "{:?}", r.witness);
    }
}
