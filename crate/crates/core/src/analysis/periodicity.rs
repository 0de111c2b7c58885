use std::collections::HashMap;

use serde::Serialize;

use crate::automata::{analyze, Dfa};
use crate::winset::{explore, Game, GameState, Turn};
use crate::{Error, Result};

use super::counting::BoundParams;

/// Eventual period of a game state under repeated `A` turns, up to
/// language equivalence, with the caps predicted for DFAs with disjoint
/// cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Periodicity {
    /// Smallest `k` with `A^k` and `A^{k+m}` leading to equivalent states.
    pub k: u64,
    /// Smallest period `m ≥ 1` for that `k`.
    pub m: u64,
    /// `lcm(k_1..k_p) + 2n + max_{x≠y} lcm(k_x, k_y)`.
    pub k_cap: u64,
    /// `lcm(k_1..k_p)`.
    pub m_cap: u64,
}

impl Periodicity {
    pub fn within_caps(&self) -> bool {
        self.k <= self.k_cap && self.m <= self.m_cap
    }
}

/// Finds the smallest `k` and `m ≥ 1` such that reading `A^k` and `A^{k+m}`
/// from `gs` gives equivalent game states.
///
/// Requires the reachable part of `dfa` to have pairwise disjoint cycles.
pub fn a_periodicity(dfa: &Dfa, gs: &GameState, max_game_states: usize) -> Result<Periodicity> {
    let cycles = analyze(dfa).cycles;
    if !cycles.disjoint {
        return Err(Error::Precondition(
            "periodicity needs a DFA whose cycles are pairwise disjoint".into(),
        ));
    }
    let bp = BoundParams::from(&cycles);
    let n = dfa.state_count() as u64;
    let game = Game::new(dfa)?;
    let graph = explore(&game, std::slice::from_ref(gs), max_game_states)?;
    let classes = graph.classes();

    // Classes are right-congruent, so the class sequence along A^t is
    // eventually periodic and the first repeat gives the minimal (k, m).
    let mut first_seen: HashMap<u32, u64> = HashMap::new();
    let mut state = graph.roots[0];
    let a = Turn::A.symbol() as usize;
    for t in 0.. {
        let class = classes[state as usize];
        if let Some(&k) = first_seen.get(&class) {
            return Ok(Periodicity {
                k,
                m: t - k,
                k_cap: bp.lcm_all() + 2 * n + bp.max_pair_lcm(),
                m_cap: bp.lcm_all(),
            });
        }
        first_seen.insert(class, t);
        state = graph.trans[state as usize][a];
    }
    unreachable!("the class sequence is finite")
}
