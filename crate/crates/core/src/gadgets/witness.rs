//! Turn words that drive the gadgets.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::winset::{Turn, TurnWord};
use crate::{Error, Result};

/// A subset of `{1..n}`.
pub type Subset = BTreeSet<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TurnWordKind {
    Subset,
    Gen,
    Test,
}

impl FromStr for TurnWordKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subset" => Ok(TurnWordKind::Subset),
            "gen" => Ok(TurnWordKind::Gen),
            "test" => Ok(TurnWordKind::Test),
            other => Err(Error::InvalidArgument(format!(
                "unknown turn word kind `{other}` (expected subset, gen or test)"
            ))),
        }
    }
}

fn check_range(n: usize, set: &Subset) -> Result<()> {
    match set.iter().find(|&&i| i == 0 || i > n) {
        Some(i) => Err(Error::InvalidArgument(format!(
            "element {i} outside 1..={n}"
        ))),
        None => Ok(()),
    }
}

/// `w_1 … w_n` with `w_i = BA` for `i ∈ S` and `AB` otherwise.
pub fn subset_word(n: usize, set: &Subset) -> Result<TurnWord> {
    check_range(n, set)?;
    let mut w = TurnWord::empty();
    for i in 1..=n {
        let (first, second) = if set.contains(&i) {
            (Turn::B, Turn::A)
        } else {
            (Turn::A, Turn::B)
        };
        w.push(first);
        w.push(second);
    }
    Ok(w)
}

/// Length `n`; position `i` (from 1) is `A` iff `n − i + 1 ∈ P`.
pub fn test_word(n: usize, set: &Subset) -> Result<TurnWord> {
    check_range(n, set)?;
    Ok((1..=n)
        .map(|i| {
            if set.contains(&(n - i + 1)) {
                Turn::A
            } else {
                Turn::B
            }
        })
        .collect())
}

/// Bit `i − 1` set for each element `i`.
pub fn subset_mask(set: &Subset) -> u64 {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// Concatenation of `A · subset_word(S_j) · Aⁿ` over the sets of the
/// antichain, ordered by [`subset_mask`]. The empty antichain gives the
/// empty word.
pub fn gen_word(n: usize, antichain: &[Subset]) -> Result<TurnWord> {
    for s in antichain {
        check_range(n, s)?;
    }
    for (x, s) in antichain.iter().enumerate() {
        for (y, t) in antichain.iter().enumerate() {
            if x != y && s.is_subset(t) {
                return Err(Error::InvalidArgument(
                    "gen word needs an antichain of distinct, pairwise incomparable sets".into(),
                ));
            }
        }
    }
    let mut sets: Vec<&Subset> = antichain.iter().collect();
    sets.sort_by_key(|s| subset_mask(s));
    let mut w = TurnWord::empty();
    for s in sets {
        w.push(Turn::A);
        w.extend(&subset_word(n, s)?);
        w.extend(&TurnWord::power(Turn::A, n));
    }
    Ok(w)
}

/// Argument of [`turn_word`]: one set for `subset`/`test`, an antichain for
/// `gen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TurnWordArg {
    Set(Subset),
    Antichain(Vec<Subset>),
}

pub fn turn_word(kind: TurnWordKind, n: usize, arg: &TurnWordArg) -> Result<TurnWord> {
    match (kind, arg) {
        (TurnWordKind::Subset, TurnWordArg::Set(s)) => subset_word(n, s),
        (TurnWordKind::Test, TurnWordArg::Set(s)) => test_word(n, s),
        (TurnWordKind::Gen, TurnWordArg::Antichain(a)) => gen_word(n, a),
        (TurnWordKind::Gen, TurnWordArg::Set(_)) => {
            Err(Error::InvalidArgument("gen words take an antichain".into()))
        }
        (_, TurnWordArg::Antichain(_)) => Err(Error::InvalidArgument(
            "subset and test words take a single set".into(),
        )),
    }
}

/// Every antichain of subsets of `{1..n}` in a fixed order, each listed by
/// increasing [`subset_mask`].
pub fn antichains(n: usize) -> Vec<Vec<Subset>> {
    let universe = 1usize << n;
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn grow(start: usize, universe: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for m in start..universe {
            if current.iter().all(|&c| c & m != c && c & m != m) {
                current.push(m);
                grow(m + 1, universe, current, out);
                current.pop();
            }
        }
    }
    grow(0, universe, &mut current, &mut out);
    out.sort_by_key(|a| (a.len(), a.clone()));
    out.into_iter()
        .map(|a| {
            a.into_iter()
                .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
                .collect()
        })
        .collect()
}
