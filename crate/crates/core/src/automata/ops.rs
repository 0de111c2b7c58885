use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use super::{Dfa, Nfa, StateId};

/// Subset construction over reachable subsets only.
///
/// States are numbered in breadth-first discovery order, symbol 0 before 1.
/// An NFA with no initial state yields a one-state rejecting DFA.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let n = nfa.state_count();
    let mut index: HashMap<FixedBitSet, StateId> = HashMap::new();
    let mut subsets: Vec<FixedBitSet> = Vec::new();
    let mut trans: Vec<[StateId; 2]> = Vec::new();

    let start = nfa.initials.clone();
    index.insert(start.clone(), 0);
    subsets.push(start);

    let mut cursor = 0;
    while cursor < subsets.len() {
        let mut row = [0; 2];
        for (symbol, slot) in row.iter_mut().enumerate() {
            let mut next = FixedBitSet::with_capacity(n);
            for q in subsets[cursor].ones() {
                for &t in &nfa.trans[q][symbol] {
                    next.insert(t as usize);
                }
            }
            *slot = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len() as StateId;
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
        }
        trans.push(row);
        cursor += 1;
    }

    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.ones().any(|q| nfa.finals.contains(q)))
        .map(|(i, _)| i as StateId);
    Dfa::new(0, trans, finals)
        .expect("subset construction yields valid ids")
        .with_alphabet(nfa.alphabet)
}

/// Reachable states in breadth-first order from the initial state.
fn bfs_order(dfa: &Dfa) -> Vec<StateId> {
    let mut seen = FixedBitSet::with_capacity(dfa.state_count());
    let mut order = vec![dfa.initial];
    seen.insert(dfa.initial as usize);
    let mut cursor = 0;
    while cursor < order.len() {
        let q = order[cursor];
        for &t in &dfa.trans[q as usize] {
            if !seen.put(t as usize) {
                order.push(t);
            }
        }
        cursor += 1;
    }
    order
}

/// Drops unreachable states and renumbers the rest in BFS discovery order.
pub fn canonical(dfa: &Dfa) -> Dfa {
    let order = bfs_order(dfa);
    let mut rename = vec![StateId::MAX; dfa.state_count()];
    for (new, &old) in order.iter().enumerate() {
        rename[old as usize] = new as StateId;
    }
    let trans = order
        .iter()
        .map(|&q| {
            let [a, b] = dfa.trans[q as usize];
            [rename[a as usize], rename[b as usize]]
        })
        .collect();
    let finals = order
        .iter()
        .enumerate()
        .filter(|(_, &q)| dfa.is_final(q))
        .map(|(i, _)| i as StateId);
    Dfa::new(0, trans, finals)
        .expect("renumbering preserves validity")
        .with_alphabet(dfa.alphabet)
}

/// Coarsest partition of the states compatible with acceptance and the
/// transition table (Moore refinement). Returns the class of every state and
/// the number of classes. Class ids are assigned in order of first
/// appearance, so the result is deterministic.
pub fn refine_partition(trans: &[[StateId; 2]], accepting: &[bool]) -> (Vec<u32>, usize) {
    let n = trans.len();
    let mut class: Vec<u32> = Vec::with_capacity(n);
    let mut count = {
        let mut ids: HashMap<bool, u32> = HashMap::new();
        for &acc in accepting {
            let next = ids.len() as u32;
            class.push(*ids.entry(acc).or_insert(next));
        }
        ids.len()
    };
    loop {
        let mut ids: FxHashMap<(u32, u32, u32), u32> =
            FxHashMap::with_capacity_and_hasher(count * 2, Default::default());
        let mut next_class = Vec::with_capacity(n);
        for q in 0..n {
            let [a, b] = trans[q];
            let key = (class[q], class[a as usize], class[b as usize]);
            let fresh = ids.len() as u32;
            next_class.push(*ids.entry(key).or_insert(fresh));
        }
        let next_count = ids.len();
        class = next_class;
        if next_count == count {
            return (class, count);
        }
        count = next_count;
    }
}

/// Minimal DFA for the same language, canonically numbered.
///
/// Equal languages over the same alphabet give identical outputs.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let reachable = canonical(dfa);
    let accepting: Vec<bool> = (0..reachable.state_count())
        .map(|q| reachable.is_final(q as StateId))
        .collect();
    let (class, count) = refine_partition(&reachable.trans, &accepting);
    let mut trans = vec![[0; 2]; count];
    let mut finals = Vec::new();
    for q in 0..reachable.state_count() {
        let c = class[q] as usize;
        let [a, b] = reachable.trans[q];
        trans[c] = [class[a as usize], class[b as usize]];
        if accepting[q] {
            finals.push(c as StateId);
        }
    }
    let quotient = Dfa::new(class[reachable.initial as usize], trans, finals)
        .expect("quotient is well formed")
        .with_alphabet(dfa.alphabet);
    canonical(&quotient)
}

/// Language equality, decided by exploring the reachable product automaton.
pub fn equivalent(a: &Dfa, b: &Dfa) -> bool {
    if a.alphabet != b.alphabet {
        return false;
    }
    let mut seen: HashSet<(StateId, StateId)> = HashSet::new();
    let mut queue = VecDeque::from([(a.initial, b.initial)]);
    seen.insert((a.initial, b.initial));
    while let Some((p, q)) = queue.pop_front() {
        if a.is_final(p) != b.is_final(q) {
            return false;
        }
        for s in 0..2 {
            let pair = (a.next(p, s), b.next(q, s));
            if seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    true
}
