//! Brute-force game oracle: the winning set computed straight from its
//! inductive definition, with no automata involved.
//!
//! `W(∅) = ∅`, `W({λ}) = {λ}`, and for longer targets
//! `W(T) = A·(W(0⁻¹T) ∪ W(1⁻¹T)) ∪ B·(W(0⁻¹T) ∩ W(1⁻¹T))`.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use super::words::{TargetSet, Turn, TurnWord};
use crate::automata::Symbol;
use crate::{Error, Result};

type Memo = HashMap<Vec<Vec<Symbol>>, Rc<BTreeSet<TurnWord>>>;

/// Every turn order of the target's length on which Alice has a winning
/// strategy.
pub fn oracle_winning_set(target: &TargetSet) -> BTreeSet<TurnWord> {
    let words: Vec<Vec<Symbol>> = target.words().iter().cloned().collect();
    let mut memo = Memo::new();
    Rc::unwrap_or_clone(solve(words, &mut memo))
}

/// Words of `words` starting with `symbol`, with that symbol removed. Sorted
/// input gives sorted output.
fn residual(words: &[Vec<Symbol>], symbol: Symbol) -> Vec<Vec<Symbol>> {
    words
        .iter()
        .filter(|w| w[0] == symbol)
        .map(|w| w[1..].to_vec())
        .collect()
}

fn solve(words: Vec<Vec<Symbol>>, memo: &mut Memo) -> Rc<BTreeSet<TurnWord>> {
    if words.is_empty() {
        return Rc::new(BTreeSet::new());
    }
    if words[0].is_empty() {
        return Rc::new(BTreeSet::from([TurnWord::empty()]));
    }
    if let Some(hit) = memo.get(&words) {
        return Rc::clone(hit);
    }
    let zero = solve(residual(&words, 0), memo);
    let one = solve(residual(&words, 1), memo);
    let prefixed = |turn: Turn, rest: &TurnWord| {
        let mut w = TurnWord::new(vec![turn]);
        w.extend(rest);
        w
    };
    let mut out: BTreeSet<TurnWord> = zero.union(&one).map(|w| prefixed(Turn::A, w)).collect();
    out.extend(zero.intersection(&one).map(|w| prefixed(Turn::B, w)));
    let out = Rc::new(out);
    memo.insert(words, Rc::clone(&out));
    out
}

/// Whether Alice wins `target` under the turn order `turns`, evaluated by the
/// same recursion along the single word.
pub fn alice_wins(target: &TargetSet, turns: &TurnWord) -> Result<bool> {
    if turns.len() != target.length() {
        return Err(Error::LengthMismatch {
            word: turns.len(),
            target: target.length(),
        });
    }
    let words: Vec<&[Symbol]> = target.words().iter().map(|w| w.as_slice()).collect();
    Ok(wins(&words, turns.turns()))
}

fn wins(words: &[&[Symbol]], turns: &[Turn]) -> bool {
    let Some((turn, rest)) = turns.split_first() else {
        return !words.is_empty();
    };
    let branch = |symbol: Symbol| {
        let sub: Vec<&[Symbol]> = words
            .iter()
            .filter(|w| w[0] == symbol)
            .map(|w| &w[1..])
            .collect();
        wins(&sub, rest)
    };
    match turn {
        Turn::A => branch(0) || branch(1),
        Turn::B => branch(0) && branch(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[&str]) -> BTreeSet<TurnWord> {
        list.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn empty_target_has_empty_winning_set() {
        assert!(oracle_winning_set(&TargetSet::empty(2)).is_empty());
        assert!(oracle_winning_set(&TargetSet::empty(0)).is_empty());
    }

    #[test]
    fn lambda_target() {
        let t = TargetSet::new(0, [vec![]]).unwrap();
        assert_eq!(oracle_winning_set(&t), words(&[""]));
        assert!(alice_wins(&t, &TurnWord::empty()).unwrap());
    }

    #[test]
    fn full_target_wins_everything() {
        assert_eq!(
            oracle_winning_set(&TargetSet::full(2)),
            words(&["AA", "AB", "BA", "BB"])
        );
    }

    #[test]
    fn diagonal_target() {
        let t = TargetSet::parse_words(["00", "11"]).unwrap();
        assert_eq!(oracle_winning_set(&t), words(&["AA", "BA"]));
        assert!(alice_wins(&t, &"BA".parse().unwrap()).unwrap());
        assert!(!alice_wins(&t, &"AB".parse().unwrap()).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let t = TargetSet::parse_words(["00"]).unwrap();
        assert_eq!(
            alice_wins(&t, &"A".parse().unwrap()),
            Err(Error::LengthMismatch { word: 1, target: 2 })
        );
    }

    #[test]
    fn single_word_and_membership_agree() {
        let t = TargetSet::parse_words(["001", "010", "100", "111", "110"]).unwrap();
        let w = oracle_winning_set(&t);
        assert_eq!(w.len(), t.len());
        for turns in TurnWord::all_of_length(3) {
            assert_eq!(w.contains(&turns), alice_wins(&t, &turns).unwrap());
        }
    }
}
