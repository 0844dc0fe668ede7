use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{BetaSet, Partition};

/// Memo table for Murnaghan–Nakayama values, safe to share between threads.
#[derive(Default)]
pub struct MnCache {
    table: DashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `χ^λ` on the class of cycle type `t`.
    pub fn value(&self, lambda: &Partition, t: &Partition) -> Result<BigInt> {
        if lambda.size() != t.size() {
            return Err(Error::SizeMismatch { expected: lambda.size(), actual: t.size() });
        }
        Ok(self.eval(lambda, t.parts()))
    }

    fn eval(&self, lambda: &Partition, cycles: &[usize]) -> BigInt {
        let Some((&c, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        if lambda.len() <= 1 {
            return BigInt::one();
        }
        let key = (lambda.parts().to_vec(), cycles.to_vec());
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        let x = BetaSet::first_column(lambda);
        let mut acc = BigInt::zero();
        for &b in x.elements() {
            if b < c || x.contains(b - c) {
                continue;
            }
            let leg = x.elements().iter().filter(|&&z| b - c < z && z < b).count();
            let v = self.eval(&x.remove_hook(b, b - c).expect("valid rim hook").partition(), rest);
            if leg % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        self.table.insert(key, acc.clone());
        acc
    }
}

/// `χ^λ(t)` through a process-wide cache.
pub fn mn_value(lambda: &Partition, t: &Partition) -> Result<BigInt> {
    static CACHE: OnceLock<MnCache> = OnceLock::new();
    CACHE.get_or_init(MnCache::new).value(lambda, t)
}
