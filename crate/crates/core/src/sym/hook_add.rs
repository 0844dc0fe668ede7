use crate::error::{Error, Result};
use crate::{is_core, BetaSet, Partition};

/// The `x` partitions of `|γ| + x` with `x`-core `γ`, listed so that entry
/// `i` carries an added hook of leg length `i`.
pub fn add_hook_partitions(gamma: &Partition, x: usize) -> Result<Vec<Partition>> {
    if x == 0 {
        return Err(crate::error::invalid("hook length must be positive"));
    }
    if !is_core(gamma, x) {
        return Err(Error::NotACore { partition: gamma.parts().to_vec(), r: x });
    }
    let beta = BetaSet::with_size(gamma, gamma.len() + x);
    let mut out: Vec<Option<Partition>> = vec![None; x];
    for runner in 0..x {
        let top = beta.elements().iter().copied().find(|b| b % x == runner).expect("every runner holds a bead");
        let mut moved: Vec<usize> = beta.elements().iter().copied().filter(|&b| b != top).collect();
        moved.push(top + x);
        let leg = beta.elements().iter().filter(|&&z| top < z && z < top + x).count();
        let lambda = BetaSet::new(moved).expect("core runners are gap free").partition();
        if out[leg].replace(lambda).is_some() {
            return Err(Error::Fault(format!("two added {x}-hooks of leg {leg} on {gamma}")));
        }
    }
    Ok(out.into_iter().map(|l| l.expect("one hook per leg length")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{core_quotient, part};

    #[test]
    fn hooks_from_empty() {
        let l = add_hook_partitions(&Partition::empty(), 5).unwrap();
        let want: Vec<_> = (0..5).map(|i| Partition::hook(5, i)).collect();
        assert_eq!(l, want);
    }

    #[test]
    fn over_one() {
        let l = add_hook_partitions(&part![1], 5).unwrap();
        assert_eq!(l.len(), 5);
        let mut brute: Vec<_> =
            Partition::all(6).into_iter().filter(|m| core_quotient(m, 5).core == part![1]).collect();
        let mut got = l.clone();
        brute.sort();
        got.sort();
        assert_eq!(got, brute);
        assert_eq!(l[0], part![6]);
        assert_eq!(l[4], Partition::column(6));
    }

    #[test]
    fn endpoints() {
        for x in 2..8 {
            for n in 0..12 {
                for gamma in Partition::all(n).into_iter().filter(|g| is_core(g, x)) {
                    let l = add_hook_partitions(&gamma, x).unwrap();
                    assert_eq!(l[0], gamma.plus(&Partition::row(x)));
                    assert_eq!(l[x - 1], gamma.union(&Partition::column(x)));
                    assert!(l.iter().all(|m| core_quotient(m, x).core == gamma));
                }
            }
        }
    }

    #[test]
    fn rejects_non_core() {
        assert!(add_hook_partitions(&part![3], 3).is_err());
    }
}
