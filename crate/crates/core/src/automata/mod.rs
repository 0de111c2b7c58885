//! Binary-alphabet finite automata.
//!
//! States are dense integers `0..state_count`. Every [`Dfa`] is complete:
//! each state has a successor on both symbols. Words are slices of symbols
//! `0` and `1`; for automata over the turn alphabet `{A, B}` the symbol `0`
//! stands for `A` and `1` for `B`.

mod analyze;
pub mod format;
mod ops;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use analyze::{analyze, Analysis, CycleStructure};
pub use ops::{canonical, determinize, equivalent, minimize, refine_partition};

pub type StateId = u32;

/// Input symbol, either 0 or 1.
pub type Symbol = u8;

/// Which two-letter alphabet an automaton reads.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    /// `{0, 1}`: target languages.
    #[default]
    Binary,
    /// `{A, B}`: turn orders, with `A ↦ 0` and `B ↦ 1`.
    TurnOrder,
}

impl Alphabet {
    /// The tag written after the header in the text format, if any.
    pub fn tag(self) -> Option<&'static str> {
        match self {
            Alphabet::Binary => None,
            Alphabet::TurnOrder => Some("ab"),
        }
    }

    pub fn letter(self, symbol: Symbol) -> char {
        match (self, symbol) {
            (Alphabet::Binary, 0) => '0',
            (Alphabet::Binary, _) => '1',
            (Alphabet::TurnOrder, 0) => 'A',
            (Alphabet::TurnOrder, _) => 'B',
        }
    }
}

/// A complete deterministic automaton over a two-letter alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: FixedBitSet,
    trans: Vec<[StateId; 2]>,
}

impl Dfa {
    /// Builds a DFA from its transition table, checking every id is in range.
    pub fn new(
        initial: StateId,
        trans: Vec<[StateId; 2]>,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let n = trans.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs at least one state".into(),
            ));
        }
        if initial as usize >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range 0..{n}"
            )));
        }
        for (q, row) in trans.iter().enumerate() {
            for &t in row {
                if t as usize >= n {
                    return Err(Error::InvalidAutomaton(format!(
                        "transition from {q} to {t} out of range 0..{n}"
                    )));
                }
            }
        }
        let mut set = FixedBitSet::with_capacity(n);
        for f in finals {
            if f as usize >= n {
                return Err(Error::InvalidAutomaton(format!(
                    "final state {f} out of range 0..{n}"
                )));
            }
            set.insert(f as usize);
        }
        Ok(Dfa {
            alphabet: Alphabet::Binary,
            initial,
            finals: set,
            trans,
        })
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(q as usize)
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.ones().map(|q| q as StateId)
    }

    pub fn next(&self, q: StateId, symbol: Symbol) -> StateId {
        self.trans[q as usize][symbol as usize]
    }

    pub fn transitions(&self) -> &[[StateId; 2]] {
        &self.trans
    }

    /// State reached from `q` after reading `word`.
    pub fn run_from(&self, q: StateId, word: &[Symbol]) -> StateId {
        word.iter().fold(q, |q, &s| self.next(q, s))
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.is_final(self.run_from(self.initial, word))
    }

    /// States with a path (possibly empty) to a final state.
    pub fn live_states(&self) -> FixedBitSet {
        let n = self.state_count();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (q, row) in self.trans.iter().enumerate() {
            for &t in row {
                rev[t as usize].push(q as StateId);
            }
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q as usize] {
                if !live.put(p as usize) {
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn count_by_length(&self, max_len: usize) -> Vec<u64> {
        let n = self.state_count();
        let mut counts = vec![0u64; n];
        counts[self.initial as usize] = 1;
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push(self.finals().map(|f| counts[f as usize]).sum());
            if len == max_len {
                break;
            }
            let mut next = vec![0u64; n];
            for (q, &c) in counts.iter().enumerate() {
                if c != 0 {
                    for &t in &self.trans[q] {
                        next[t as usize] += c;
                    }
                }
            }
            counts = next;
        }
        out
    }
}

/// A nondeterministic automaton over a two-letter alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initials: FixedBitSet,
    finals: FixedBitSet,
    trans: Vec<[Vec<StateId>; 2]>,
}

impl Nfa {
    pub fn new(
        state_count: usize,
        initials: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
        edges: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Result<Self> {
        let n = state_count;
        let check = |q: StateId, what: &str| {
            if q as usize >= n {
                Err(Error::InvalidAutomaton(format!(
                    "{what} {q} out of range 0..{n}"
                )))
            } else {
                Ok(q)
            }
        };
        let mut ini = FixedBitSet::with_capacity(n);
        for q in initials {
            ini.insert(check(q, "initial state")? as usize);
        }
        let mut fin = FixedBitSet::with_capacity(n);
        for q in finals {
            fin.insert(check(q, "final state")? as usize);
        }
        let mut trans = vec![[Vec::new(), Vec::new()]; n];
        for (p, s, q) in edges {
            check(p, "source state")?;
            check(q, "target state")?;
            if s > 1 {
                return Err(Error::InvalidAutomaton(format!("symbol {s} is not binary")));
            }
            trans[p as usize][s as usize].push(q);
        }
        for row in &mut trans {
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        Ok(Nfa {
            alphabet: Alphabet::Binary,
            initials: ini,
            finals: fin,
            trans,
        })
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.trans.len()
    }

    pub fn initials(&self) -> impl Iterator<Item = StateId> + '_ {
        self.initials.ones().map(|q| q as StateId)
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.ones().map(|q| q as StateId)
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(q as usize)
    }

    pub fn successors(&self, q: StateId, symbol: Symbol) -> &[StateId] {
        &self.trans[q as usize][symbol as usize]
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut current = self.initials.clone();
        for &s in word {
            let mut next = FixedBitSet::with_capacity(self.state_count());
            for q in current.ones() {
                for &t in &self.trans[q][s as usize] {
                    next.insert(t as usize);
                }
            }
            current = next;
        }
        current.ones().any(|q| self.finals.contains(q))
    }
}

impl From<&Dfa> for Nfa {
    fn from(dfa: &Dfa) -> Self {
        let mut initials = FixedBitSet::with_capacity(dfa.state_count());
        initials.insert(dfa.initial as usize);
        Nfa {
            alphabet: dfa.alphabet,
            initials,
            finals: dfa.finals.clone(),
            trans: dfa.trans.iter().map(|&[a, b]| [vec![a], vec![b]]).collect(),
        }
    }
}

/// All binary words of length `len`, in lexicographic order with `0 < 1`.
pub fn words_of_length(len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    assert!(len < 64, "word length {len} too large to enumerate");
    (0u64..1 << len).map(move |code| {
        (0..len)
            .map(|i| ((code >> (len - 1 - i)) & 1) as Symbol)
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity() -> Dfa {
        Dfa::new(0, vec![[0, 1], [1, 0]], [0]).unwrap()
    }

    #[test]
    fn rejects_out_of_range_ids() {
        assert!(Dfa::new(2, vec![[0, 1], [1, 0]], []).is_err());
        assert!(Dfa::new(0, vec![[0, 5], [1, 0]], []).is_err());
        assert!(Dfa::new(0, vec![[0, 1], [1, 0]], [2]).is_err());
        assert!(Dfa::new(0, vec![], []).is_err());
    }

    #[test]
    fn parity_acceptance() {
        let d = parity();
        assert!(d.accepts(&[]));
        assert!(d.accepts(&[1, 0, 1]));
        assert!(!d.accepts(&[1, 0, 0]));
    }

    #[test]
    fn counts_match_enumeration() {
        let d = parity();
        let counts = d.count_by_length(6);
        for (len, &c) in counts.iter().enumerate() {
            let brute = words_of_length(len).filter(|w| d.accepts(w)).count() as u64;
            assert_eq!(c, brute);
        }
    }

    #[test]
    fn live_states_exclude_dead_sink() {
        // 0 -1-> 1 (final), 1 -1-> 2 (dead sink)
        let d = Dfa::new(0, vec![[0, 1], [1, 2], [2, 2]], [1]).unwrap();
        let live = d.live_states();
        assert!(live.contains(0) && live.contains(1) && !live.contains(2));
    }

    #[test]
    fn nfa_from_dfa_accepts_same_words() {
        let d = parity();
        let n = Nfa::from(&d);
        for len in 0..6 {
            for w in words_of_length(len) {
                assert_eq!(d.accepts(&w), n.accepts(&w));
            }
        }
    }
}
