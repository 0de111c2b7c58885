//! Counting functions behind the size bounds.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::automata::CycleStructure;
use crate::{Error, Result};

/// `D(6)`, the largest Dedekind number served.
const DEDEKIND_6: u64 = 7_828_354;

/// Monotone Boolean functions on `n` variables as truth tables (bit `x` is
/// the value at input `x`). Built from pairs `f0 ≤ f1` on `n − 1` variables.
fn monotone_functions(n: usize) -> Vec<u32> {
    if n == 0 {
        return vec![0, 1];
    }
    let smaller = monotone_functions(n - 1);
    let shift = 1 << (n - 1);
    let mut out = Vec::new();
    for &f0 in &smaller {
        for &f1 in &smaller {
            if f0 & !f1 == 0 {
                out.push(f0 | f1 << shift);
            }
        }
    }
    out
}

/// Number of antichains of subsets of an `n`-element set, `n ≤ 6`.
pub fn dedekind(n: usize) -> Result<u64> {
    match n {
        0..=4 => Ok(monotone_functions(n).len() as u64),
        5 => {
            let four = monotone_functions(4);
            let pairs = four
                .iter()
                .map(|&f0| four.iter().filter(|&&f1| f0 & !f1 == 0).count() as u64)
                .sum();
            Ok(pairs)
        }
        6 => Ok(DEDEKIND_6),
        _ => Err(Error::InvalidArgument(format!(
            "Dedekind numbers are only provided for n ≤ 6, got {n}"
        ))),
    }
}

/// Number of compositions of `m` whose parts first weakly increase and then
/// weakly decrease; `Q(0) = 1`.
///
/// Each such composition is split at the first occurrence of its largest
/// part `k`: the parts before form a partition into parts `< k`, the parts
/// after a partition into parts `≤ k`.
pub fn unimodal_q(m: usize) -> Result<u64> {
    let overflow = || Error::Overflow("unimodal composition count");
    // rows[j][s]: partitions of s into parts ≤ j
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m + 1);
    let mut base = vec![0u64; m + 1];
    base[0] = 1;
    rows.push(base);
    for j in 1..=m {
        let mut row = rows[j - 1].clone();
        for s in j..=m {
            row[s] = row[s].checked_add(row[s - j]).ok_or_else(overflow)?;
        }
        rows.push(row);
    }
    let mut total: u64 = u64::from(m == 0);
    for k in 1..=m {
        for s in 0..=m - k {
            let term = rows[k - 1][s]
                .checked_mul(rows[k][m - k - s])
                .ok_or_else(overflow)?;
            total = total.checked_add(term).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// `1 + Σ_{m < 4n} Q(m)`, the size bound for 1-bounded chain automata with
/// `n` states.
pub fn chain_bound(n: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for m in 0..4 * n {
        total = total
            .checked_add(unimodal_q(m)?)
            .ok_or(Error::Overflow("chain bound"))?;
    }
    Ok(total)
}

/// Cycle lengths `k_1..k_p` and acyclic state count `ell` of a DFA with
/// disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub cycle_lengths: Vec<u64>,
    pub acyclic_count: u64,
}

impl From<&CycleStructure> for BoundParams {
    fn from(c: &CycleStructure) -> Self {
        BoundParams {
            cycle_lengths: c.cycle_lengths.iter().map(|&k| k as u64).collect(),
            acyclic_count: c.acyclic_count as u64,
        }
    }
}

impl BoundParams {
    /// `lcm(k_1..k_p)`, 1 when there are no cycles.
    pub fn lcm_all(&self) -> u64 {
        self.cycle_lengths.iter().fold(1, |acc, &k| acc.lcm(&k))
    }

    /// `max_{x ≠ y} lcm(k_x, k_y)`, 0 with fewer than two cycles.
    pub fn max_pair_lcm(&self) -> u64 {
        let k = &self.cycle_lengths;
        let mut best = 0;
        for x in 0..k.len() {
            for y in x + 1..k.len() {
                best = best.max(k[x].lcm(&k[y]));
            }
        }
        best
    }

    /// `P = p · max_{x≠y} lcm(k_x, k_y) + 2ℓ + 2 · lcm(k_1..k_p)`.
    pub fn p_value(&self) -> u64 {
        self.cycle_lengths.len() as u64 * self.max_pair_lcm()
            + 2 * self.acyclic_count
            + 2 * self.lcm_all()
    }
}

/// Size bound for winning sets of bounded languages:
/// `Σ_{m=0}^{ℓ+p+1} P^m`.
pub fn bounded_bound(bp: &BoundParams) -> BigUint {
    let p = BigUint::from(bp.p_value());
    let top = bp.acyclic_count + bp.cycle_lengths.len() as u64 + 1;
    let mut power = BigUint::from(1u32);
    let mut sum = BigUint::from(0u32);
    for _ in 0..=top {
        sum += &power;
        power *= &p;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedekind_values() {
        let d: Vec<u64> = (0..=6).map(|n| dedekind(n).unwrap()).collect();
        assert_eq!(d, vec![2, 3, 6, 20, 168, 7581, 7_828_354]);
        assert!(dedekind(7).is_err());
    }

    #[test]
    fn unimodal_small_values() {
        let q: Vec<u64> = (0..10).map(|m| unimodal_q(m).unwrap()).collect();
        assert_eq!(q, vec![1, 1, 2, 4, 8, 15, 27, 47, 79, 130]);
    }

    #[test]
    fn unimodal_overflow_is_reported() {
        assert_eq!(
            unimodal_q(10_000),
            Err(Error::Overflow("unimodal composition count"))
        );
    }

    #[test]
    fn chain_bounds() {
        assert_eq!(chain_bound(1).unwrap(), 9);
        for n in 1..10 {
            assert!(chain_bound(n + 1).unwrap() > chain_bound(n).unwrap());
        }
    }

    #[test]
    fn bounded_bound_examples() {
        let bp = |k: &[u64], l| BoundParams {
            cycle_lengths: k.to_vec(),
            acyclic_count: l,
        };
        assert_eq!(bounded_bound(&bp(&[1, 1, 1], 0)), BigUint::from(781u32));
        assert_eq!(bounded_bound(&bp(&[], 2)), BigUint::from(259u32));
        let b = bp(&[2, 3], 1);
        assert_eq!(b.p_value(), 26);
        let expected: u64 = (0..=4).map(|m| 26u64.pow(m)).sum();
        assert_eq!(bounded_bound(&b), BigUint::from(expected));
    }
}
