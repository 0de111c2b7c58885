//! Parametric automaton families: chains, exact-k-ones, Dyck.

use std::collections::{HashMap, VecDeque};

use crate::automata::{Alphabet, Dfa, StateId};
use crate::{Error, Result};

/// Chain automaton on `m + p` states: `0` stays put, `1` moves one step
/// right, and the last state's `1` returns to `m`, closing a `p`-cycle.
/// With `p = 0` the last state absorbs both letters and must not be final.
pub fn chain_dfa(m: usize, p: usize, finals: &[StateId]) -> Result<Dfa> {
    if m == 0 {
        return Err(Error::InvalidArgument("chain needs m ≥ 1".into()));
    }
    let total = m + p;
    if let Some(f) = finals.iter().find(|&&f| f as usize >= total) {
        return Err(Error::InvalidArgument(format!(
            "final state {f} outside 0..{total}"
        )));
    }
    if p == 0 && finals.contains(&((m - 1) as StateId)) {
        return Err(Error::InvalidArgument(format!(
            "with p = 0 the absorbing state {} cannot be final",
            m - 1
        )));
    }
    let trans = (0..total)
        .map(|i| {
            let one = if i + 1 < total {
                i + 1
            } else if p == 0 {
                i
            } else {
                m
            };
            [i as StateId, one as StateId]
        })
        .collect();
    Dfa::new(0, trans, finals.iter().copied())
}

/// Minimal DFA for words with exactly `n` ones: states `0..=n` count ones,
/// `n` is final and `n + 1` is a rejecting sink.
pub fn exact_k_dfa(n: usize) -> Dfa {
    let trans = (0..=n + 1)
        .map(|i| {
            let one = (i + 1).min(n + 1);
            [i as StateId, one as StateId]
        })
        .collect();
    Dfa::new(0, trans, [n as StateId]).expect("ids in range")
}

/// `n³/6 + n² + 11n/6 + 2`, the number of states of the minimal
/// winning-set DFA for exactly `n` ones.
pub fn exact_k_wdfa_size(n: u64) -> u64 {
    (n * n * n + 6 * n * n + 11 * n + 12) / 6
}

/// State of the direct winning-set automaton for exactly `n` ones.
///
/// `(i, ell, span)` stands for the game state whose members are the
/// intervals `{j, …, j + ell − 1}` of the exact-k DFA with
/// `i ≤ j ≤ i + span − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub i: usize,
    pub ell: usize,
    pub span: usize,
}

impl Triple {
    /// `0 ≤ i ≤ n`, `1 ≤ ell ≤ n − i + 1`, `1 ≤ span ≤ n − i − ell + 2`.
    pub fn is_valid(&self, n: usize) -> bool {
        self.i <= n
            && self.ell >= 1
            && self.ell <= n - self.i + 1
            && self.span >= 1
            && self.span + self.i + self.ell <= n + 2
    }

    /// Successor on a `B` turn, `None` for the rejecting sink. Intervals are
    /// clipped so that none reaches the sink state `n + 1`.
    pub fn step_b(&self, n: usize) -> Option<Triple> {
        let ell = self.ell + 1;
        if ell > n - self.i + 1 {
            return None;
        }
        let span = self.span.min(n + 2 - self.i - ell);
        let t = Triple { ell, span, ..*self };
        (span >= 1).then_some(t)
    }

    /// Successor on an `A` turn.
    pub fn step_a(&self, n: usize) -> Triple {
        if self.ell == 1 {
            Triple {
                span: (self.span + 1).min(n - self.i + 1),
                ..*self
            }
        } else {
            Triple {
                i: self.i + 1,
                ell: self.ell - 1,
                span: self.span,
            }
        }
    }

    /// Some member interval is exactly `{n}`.
    pub fn is_accepting(&self, n: usize) -> bool {
        self.ell == 1 && self.i <= n && n < self.i + self.span
    }
}

/// All valid triples for `n`, in lexicographic order.
pub fn exact_k_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for i in 0..=n {
        for ell in 1..=n - i + 1 {
            for span in 1..=n + 2 - i - ell {
                out.push(Triple { i, ell, span });
            }
        }
    }
    out
}

/// Winning-set DFA for exactly `n` ones built directly on triples, from
/// `(0, 1, 1)`, with one rejecting sink. States are numbered in
/// breadth-first order, `A` first; the sink is last.
pub fn exact_k_symbolic_wdfa(n: usize) -> Dfa {
    let start = Triple {
        i: 0,
        ell: 1,
        span: 1,
    };
    let mut ids: HashMap<Triple, usize> = HashMap::from([(start, 0)]);
    let mut order = vec![start];
    let mut edges: Vec<[Option<usize>; 2]> = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        let mut row = [None; 2];
        for (slot, next) in row.iter_mut().zip([Some(t.step_a(n)), t.step_b(n)]) {
            if let Some(next) = next {
                debug_assert!(next.is_valid(n), "{next:?} invalid for n = {n}");
                let id = *ids.entry(next).or_insert_with(|| {
                    order.push(next);
                    queue.push_back(next);
                    order.len() - 1
                });
                *slot = Some(id);
            }
        }
        edges.push(row);
    }
    let sink = order.len() as StateId;
    let mut trans: Vec<[StateId; 2]> = edges
        .iter()
        .map(|row| row.map(|t| t.map_or(sink, |id| id as StateId)))
        .collect();
    trans.push([sink, sink]);
    let finals = order
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_accepting(n))
        .map(|(q, _)| q as StateId);
    Dfa::new(0, trans, finals)
        .expect("ids in range")
        .with_alphabet(Alphabet::TurnOrder)
}

/// Balance counter: `0` opens, `1` closes, final at balance 0. States
/// `0..=max_balance` are balances; `max_balance + 1` is a rejecting sink hit
/// on overflow or underflow.
pub fn dyck_dfa(max_balance: usize) -> Result<Dfa> {
    if max_balance == 0 {
        return Err(Error::InvalidArgument("dyck needs max_balance ≥ 1".into()));
    }
    let sink = (max_balance + 1) as StateId;
    let trans = (0..=max_balance + 1)
        .map(|b| {
            if b > max_balance {
                return [sink, sink];
            }
            let up = if b < max_balance {
                (b + 1) as StateId
            } else {
                sink
            };
            let down = if b > 0 { (b - 1) as StateId } else { sink };
            [up, down]
        })
        .collect();
    Dfa::new(0, trans, [0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{equivalent, minimize, words_of_length};

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn chain_examples() {
        let d = chain_dfa(3, 0, &[1]).unwrap();
        assert!(d.accepts(&bits("1")));
        assert!(d.accepts(&bits("0100")));
        assert!(!d.accepts(&bits("11")));
        let d = chain_dfa(2, 2, &[2]).unwrap();
        assert!(d.accepts(&bits("11")));
        assert!(!d.accepts(&bits("111")));
        assert!(d.accepts(&bits("1111")));
        assert!(chain_dfa(3, 0, &[2]).is_err());
        assert!(chain_dfa(3, 1, &[4]).is_err());
        assert!(chain_dfa(0, 1, &[]).is_err());
    }

    #[test]
    fn one_bounded_chain_is_exact_two() {
        let d = chain_dfa(4, 0, &[2]).unwrap();
        assert!(equivalent(&minimize(&d), &exact_k_dfa(2)));
    }

    #[test]
    fn exact_k_counts_ones() {
        let d = exact_k_dfa(1);
        assert!(d.accepts(&bits("010")));
        assert!(!d.accepts(&bits("0110")));
        for n in 1..5 {
            assert_eq!(minimize(&exact_k_dfa(n)).state_count(), n + 2);
            for w in words_of_length(6) {
                let ones = w.iter().filter(|&&s| s == 1).count();
                assert_eq!(exact_k_dfa(n).accepts(&w), ones == n);
            }
        }
    }

    #[test]
    fn closed_form_values() {
        let v: Vec<u64> = (1..=8).map(exact_k_wdfa_size).collect();
        assert_eq!(v, vec![5, 11, 21, 36, 57, 85, 121, 166]);
    }

    #[test]
    fn triples_cover_the_symbolic_automaton() {
        for n in 0..=8 {
            let d = exact_k_symbolic_wdfa(n);
            assert_eq!(d.state_count(), exact_k_triples(n).len() + 1);
            assert_eq!(d.state_count() as u64, exact_k_wdfa_size(n as u64));
            assert!(exact_k_triples(n).iter().all(|t| t.is_valid(n)));
        }
    }

    #[test]
    fn dyck_examples() {
        let d = dyck_dfa(4).unwrap();
        for w in ["0011", "0101", "001101", "00001111", ""] {
            assert!(d.accepts(&bits(w)), "{w}");
        }
        for w in ["0110", "0100", "10", "000001111"] {
            assert!(!d.accepts(&bits(w)), "{w}");
        }
        assert!(dyck_dfa(0).is_err());
    }
}
