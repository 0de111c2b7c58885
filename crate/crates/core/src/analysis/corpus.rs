//! DFA families used as test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{Dfa, StateId};

/// Number of complete transition tables on `n` states.
pub fn table_count(n: usize) -> u64 {
    (n as u64).pow(2 * n as u32)
}

/// Transition table number `index` (mixed radix, state 0's 0-successor is
/// the least significant digit).
pub fn table(n: usize, mut index: u64) -> Vec<[StateId; 2]> {
    let mut trans = vec![[0; 2]; n];
    for row in trans.iter_mut() {
        for slot in row.iter_mut() {
            *slot = (index % n as u64) as StateId;
            index /= n as u64;
        }
    }
    trans
}

fn with_finals(trans: Vec<[StateId; 2]>, mask: u32) -> Dfa {
    let n = trans.len();
    Dfa::new(0, trans, (0..n as StateId).filter(|q| mask >> q & 1 == 1))
        .expect("generated tables are in range")
}

/// Every complete DFA on `n` states with initial state 0: transition tables
/// in [`table`] order, final-state masks ascending within each table.
pub fn exhaustive_dfas(n: usize) -> impl Iterator<Item = Dfa> {
    (0..table_count(n)).flat_map(move |t| {
        let trans = table(n, t);
        (0u32..1 << n).map(move |mask| with_finals(trans.clone(), mask))
    })
}

/// `count` DFAs with uniformly random tables and final sets; sizes uniform
/// in `min_states..=max_states`.
pub fn random_dfas(seed: u64, count: usize, min_states: usize, max_states: usize) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(min_states..=max_states);
            let trans = (0..n)
                .map(|_| {
                    [
                        rng.random_range(0..n as StateId),
                        rng.random_range(0..n as StateId),
                    ]
                })
                .collect();
            with_finals(trans, rng.random_range(0u32..1 << n))
        })
        .collect()
}

/// `count` DFAs with pairwise disjoint cycles, hence bounded languages.
///
/// States are laid out as a sequence of components, each either a simple
/// cycle or a single acyclic state. A cycle state sends one letter to the
/// next state of its cycle and the other letter to a later component; an
/// acyclic state sends both letters to later components. The last state is
/// a rejecting sink and some other state is final. Sizes are uniform in
/// `1..=max_states`.
pub fn bounded_dfas(seed: u64, count: usize, max_states: usize) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_states);
            let sink = (n - 1) as StateId;
            let mut trans = vec![[sink, sink]; n];
            let mut start = 0;
            while start < n - 1 {
                let remaining = n - 1 - start;
                let cyclic = rng.random_bool(0.6);
                let len = if cyclic {
                    rng.random_range(1..=remaining)
                } else {
                    1
                };
                let end = start + len;
                let later = |rng: &mut ChaCha8Rng| rng.random_range(end as StateId..n as StateId);
                for q in start..end {
                    if cyclic {
                        let next = if q + 1 == end { start } else { q + 1 } as StateId;
                        let out = later(&mut rng);
                        trans[q] = if rng.random_bool(0.5) {
                            [next, out]
                        } else {
                            [out, next]
                        };
                    } else {
                        trans[q] = [later(&mut rng), later(&mut rng)];
                    }
                }
                start = end;
            }
            // at least one final state whenever there is room for one
            let mask = rng.random_range(u32::from(n > 1)..1 << (n - 1));
            with_finals(trans, mask)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{analyze, minimize};

    #[test]
    fn exhaustive_sizes() {
        assert_eq!(exhaustive_dfas(1).count(), 2);
        assert_eq!(exhaustive_dfas(2).count(), 64);
        assert_eq!(exhaustive_dfas(3).count(), 729 * 8);
    }

    #[test]
    fn table_indexing_round_trips() {
        assert_eq!(table(3, 2 + 3), vec![[2, 1], [0, 0], [0, 0]]);
        assert_eq!(table(3, 2 + 9), vec![[2, 0], [1, 0], [0, 0]]);
        assert_eq!(table(2, table_count(2) - 1), vec![[1, 1], [1, 1]]);
    }

    #[test]
    fn random_corpus_is_reproducible() {
        let a = random_dfas(42, 20, 4, 6);
        assert_eq!(a, random_dfas(42, 20, 4, 6));
        assert_ne!(a, random_dfas(43, 20, 4, 6));
        assert!(a.iter().all(|d| (4..=6).contains(&d.state_count())));
    }

    #[test]
    fn bounded_corpus_has_disjoint_cycles() {
        for d in bounded_dfas(7, 200, 8) {
            assert!(d.state_count() <= 8);
            assert!(analyze(&d).cycles.disjoint, "{d}");
            assert!(analyze(&minimize(&d)).cycles.disjoint, "{d}");
        }
    }
}
