//! Game states and their transitions.
//!
//! A game state is a set of state sets of the target DFA. Alice is winning
//! from a game state when, for some member `S`, she can force every state of
//! `S` into the target simultaneously. On an `A` turn each member splits into
//! all sets obtained by picking one letter per state; on a `B` turn each
//! member is replaced by the union of its successors.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::automata::{Dfa, StateId};
use crate::{Error, Result};

use super::words::{Turn, TurnWord};

/// Largest DFA the game construction accepts; state sets are 128-bit masks.
pub const MAX_DFA_STATES: usize = 128;

/// A set of DFA states, as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(pub u128);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn singleton(q: StateId) -> Self {
        StateSet(1 << q)
    }

    pub fn contains(self, q: StateId) -> bool {
        self.0 >> q & 1 == 1
    }

    pub fn insert(&mut self, q: StateId) {
        self.0 |= 1 << q;
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = StateId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let q = bits.trailing_zeros();
                bits &= bits - 1;
                q
            })
        })
    }
}

impl FromIterator<StateId> for StateSet {
    fn from_iter<I: IntoIterator<Item = StateId>>(iter: I) -> Self {
        let mut s = StateSet::EMPTY;
        for q in iter {
            s.insert(q);
        }
        s
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str("}")
    }
}

/// A set of state sets, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameState(Box<[StateSet]>);

impl GameState {
    pub fn new(sets: impl IntoIterator<Item = StateSet>) -> Self {
        let mut v: Vec<StateSet> = sets.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        GameState(v.into_boxed_slice())
    }

    /// `{{q}}`.
    pub fn singleton(q: StateId) -> Self {
        GameState(Box::new([StateSet::singleton(q)]))
    }

    pub fn sets(&self) -> &[StateSet] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, set: StateSet) -> bool {
        self.0.binary_search(&set).is_ok()
    }

    pub fn union(&self, other: &GameState) -> GameState {
        GameState::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Every member is a superset of some member of `other`.
    pub fn is_dominated_by(&self, other: &GameState) -> bool {
        self.0
            .iter()
            .all(|&s| other.0.iter().any(|&t| t.is_subset(s)))
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Removes every set that has a proper subset in the list, then sorts.
///
/// A proper subset is numerically smaller than its superset, so after an
/// ascending sort every set only needs checking against the kept sets
/// before it.
pub(crate) fn antichain_minimize(sets: &mut Vec<u128>) {
    sets.sort_unstable();
    sets.dedup();
    let mut kept = 0;
    for i in 0..sets.len() {
        let s = sets[i];
        if !sets[..kept].iter().any(|&k| k & !s == 0) {
            sets[kept] = s;
            kept += 1;
        }
    }
    sets.truncate(kept);
}

/// Memo for [`Game::step_cached`], valid for one [`Game`].
#[derive(Clone, Debug, Default)]
pub struct StepCache {
    members: FxHashMap<u128, Box<[u128]>>,
    buffer: Vec<u128>,
}

/// Game transitions over a fixed target DFA.
///
/// [`Game::step`] works on normalized game states: members touching a state
/// with no path to a final state are dropped (they can never be won),
/// accepting sinks are erased from members (they are won for good), and
/// members with a proper subset in the same game state are dropped. None of
/// these changes acceptance of any continuation. [`Game::step_raw`] applies
/// the transition literally.
#[derive(Clone, Debug)]
pub struct Game<'a> {
    dfa: &'a Dfa,
    succ: Vec<[u128; 2]>,
    finals: u128,
    dead: u128,
    accepting_sinks: u128,
}

impl<'a> Game<'a> {
    pub fn new(dfa: &'a Dfa) -> Result<Self> {
        let n = dfa.state_count();
        if n > MAX_DFA_STATES {
            return Err(Error::TooManyStates {
                states: n,
                max: MAX_DFA_STATES,
            });
        }
        let live = dfa.live_states();
        let mut finals = 0u128;
        let mut dead = 0u128;
        let mut accepting_sinks = 0u128;
        let mut succ = Vec::with_capacity(n);
        for q in 0..n as StateId {
            let [a, b] = dfa.transitions()[q as usize];
            succ.push([1u128 << a, 1u128 << b]);
            if dfa.is_final(q) {
                finals |= 1 << q;
                if a == q && b == q {
                    accepting_sinks |= 1 << q;
                }
            }
            if !live.contains(q as usize) {
                dead |= 1 << q;
            }
        }
        Ok(Game {
            dfa,
            succ,
            finals,
            dead,
            accepting_sinks,
        })
    }

    pub fn dfa(&self) -> &Dfa {
        self.dfa
    }

    /// `{{q0}}`, normalized.
    pub fn initial(&self) -> GameState {
        self.normalize(&GameState::singleton(self.dfa.initial()))
    }

    pub fn is_accepting(&self, gs: &GameState) -> bool {
        gs.sets().iter().any(|s| s.0 & !self.finals == 0)
    }

    pub fn normalize(&self, gs: &GameState) -> GameState {
        let mut sets: Vec<u128> = gs
            .sets()
            .iter()
            .filter(|s| s.0 & self.dead == 0)
            .map(|s| s.0 & !self.accepting_sinks)
            .collect();
        antichain_minimize(&mut sets);
        GameState(sets.into_iter().map(StateSet).collect())
    }

    /// One normalized game transition.
    pub fn step(&self, gs: &GameState, turn: Turn) -> GameState {
        let mut out: Vec<u128> = Vec::new();
        match turn {
            Turn::A => {
                for s in gs.sets() {
                    if s.0 & self.dead != 0 {
                        continue;
                    }
                    let elems: Vec<StateId> =
                        StateSet(s.0 & !self.accepting_sinks).iter().collect();
                    self.choices(&elems, 0, 0, &mut out);
                }
            }
            Turn::B => {
                for s in gs.sets() {
                    let mut u = 0u128;
                    for q in s.iter() {
                        let [a, b] = self.succ[q as usize];
                        u |= a | b;
                    }
                    if u & self.dead == 0 {
                        out.push(u & !self.accepting_sinks);
                    }
                }
            }
        }
        antichain_minimize(&mut out);
        GameState(out.into_iter().map(StateSet).collect())
    }

    /// [`Game::step`] with the minimal `A`-successors of each member
    /// memoized in `cache`; members recur across the game states of one
    /// exploration.
    pub fn step_cached(&self, gs: &GameState, turn: Turn, cache: &mut StepCache) -> GameState {
        let mut out = std::mem::take(&mut cache.buffer);
        out.clear();
        for s in gs.sets() {
            match turn {
                Turn::A => {
                    if s.0 & self.dead != 0 {
                        continue;
                    }
                    let succ = cache.members.entry(s.0).or_insert_with(|| {
                        let elems: Vec<StateId> =
                            StateSet(s.0 & !self.accepting_sinks).iter().collect();
                        let mut found = Vec::new();
                        self.choices(&elems, 0, 0, &mut found);
                        antichain_minimize(&mut found);
                        found.into_boxed_slice()
                    });
                    out.extend_from_slice(succ);
                }
                Turn::B => {
                    let u = s.iter().fold(0u128, |u, q| {
                        let [a, b] = self.succ[q as usize];
                        u | a | b
                    });
                    if u & self.dead == 0 {
                        out.push(u & !self.accepting_sinks);
                    }
                }
            }
        }
        antichain_minimize(&mut out);
        let next = GameState(out.iter().map(|&s| StateSet(s)).collect());
        cache.buffer = out;
        next
    }

    /// Depth-first enumeration of per-state letter choices for one member,
    /// skipping branches that cannot produce a new minimal set.
    fn choices(&self, elems: &[StateId], idx: usize, partial: u128, found: &mut Vec<u128>) {
        if found.iter().any(|&f| f & !partial == 0) {
            return;
        }
        let Some(&q) = elems.get(idx) else {
            found.push(partial);
            return;
        };
        let [t0, t1] = self.succ[q as usize];
        let dead0 = t0 & self.dead != 0;
        let dead1 = t1 & self.dead != 0;
        let m0 = t0 & !self.accepting_sinks;
        let m1 = t1 & !self.accepting_sinks;
        if (!dead0 && m0 & !partial == 0) || (!dead1 && m1 & !partial == 0) {
            self.choices(elems, idx + 1, partial, found);
            return;
        }
        if !dead0 {
            self.choices(elems, idx + 1, partial | m0, found);
        }
        if !dead1 && t1 != t0 {
            self.choices(elems, idx + 1, partial | m1, found);
        }
    }

    /// The literal game transition, with no reductions.
    pub fn step_raw(&self, gs: &GameState, turn: Turn) -> GameState {
        let mut out: Vec<StateSet> = Vec::new();
        for s in gs.sets() {
            match turn {
                Turn::A => {
                    let mut partials = vec![0u128];
                    for q in s.iter() {
                        let [a, b] = self.succ[q as usize];
                        partials = partials.into_iter().flat_map(|p| [p | a, p | b]).collect();
                        partials.sort_unstable();
                        partials.dedup();
                    }
                    out.extend(partials.into_iter().map(StateSet));
                }
                Turn::B => {
                    let u = s.iter().fold(0u128, |u, q| {
                        let [a, b] = self.succ[q as usize];
                        u | a | b
                    });
                    out.push(StateSet(u));
                }
            }
        }
        GameState::new(out)
    }

    pub fn run(&self, gs: &GameState, word: &TurnWord) -> GameState {
        word.turns()
            .iter()
            .fold(self.normalize(gs), |g, &t| self.step(&g, t))
    }

    pub fn run_raw(&self, gs: &GameState, word: &TurnWord) -> GameState {
        word.turns()
            .iter()
            .fold(gs.clone(), |g, &t| self.step_raw(&g, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(qs: &[StateId]) -> StateSet {
        qs.iter().copied().collect()
    }

    fn diagonal() -> Dfa {
        // {00, 11}: 0 -0-> 1 -0-> 3, 0 -1-> 2 -1-> 3, 4 rejecting sink
        Dfa::new(0, vec![[1, 2], [3, 4], [4, 3], [4, 4], [4, 4]], [3]).unwrap()
    }

    #[test]
    fn state_set_basics() {
        let s = set(&[0, 3, 127]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(127));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        assert!(set(&[3]).is_subset(s));
        assert_eq!(s.to_string(), "{0,3,127}");
    }

    #[test]
    fn antichain_minimize_keeps_minimal_sets() {
        let mut v = vec![0b111, 0b011, 0b100, 0b011, 0b110];
        antichain_minimize(&mut v);
        assert_eq!(v, vec![0b011, 0b100]);
    }

    #[test]
    fn raw_steps_follow_definition() {
        let d = diagonal();
        let g = Game::new(&d).unwrap();
        let start = GameState::singleton(0);
        let b = g.step_raw(&start, Turn::B);
        assert_eq!(b, GameState::new([set(&[1, 2])]));
        let ba = g.step_raw(&b, Turn::A);
        assert_eq!(ba, GameState::new([set(&[3]), set(&[3, 4]), set(&[4])]));
        assert!(g.is_accepting(&ba));
        let ab = g.step_raw(&g.step_raw(&start, Turn::A), Turn::B);
        assert!(!g.is_accepting(&ab));
    }

    #[test]
    fn normalized_steps_reduce() {
        let d = diagonal();
        let g = Game::new(&d).unwrap();
        let ba = g.run(&GameState::singleton(0), &"BA".parse().unwrap());
        // state 3 is not a sink, 4 is dead
        assert_eq!(ba, GameState::new([set(&[3])]));
        let ab = g.run(&GameState::singleton(0), &"AB".parse().unwrap());
        assert!(ab.is_empty());
    }

    #[test]
    fn accepting_sink_members_become_empty() {
        // 0 -> 1 on both letters, 1 accepting sink
        let d = Dfa::new(0, vec![[1, 1], [1, 1]], [1]).unwrap();
        let g = Game::new(&d).unwrap();
        let gs = g.step(&g.initial(), Turn::B);
        assert_eq!(gs, GameState::new([StateSet::EMPTY]));
        assert!(g.is_accepting(&gs));
        assert_eq!(g.step(&gs, Turn::A), gs);
        assert_eq!(g.step(&gs, Turn::B), gs);
    }

    #[test]
    fn too_many_states() {
        let d = Dfa::new(0, vec![[0, 0]; 129], []).unwrap();
        assert_eq!(
            Game::new(&d).err(),
            Some(Error::TooManyStates {
                states: 129,
                max: 128
            })
        );
    }
}
