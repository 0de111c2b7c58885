use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::automata::{minimize, refine_partition, Alphabet, Dfa};
use crate::{Error, Result};

use super::game::{Game, GameState, StepCache};
use super::words::Turn;

/// Default limit on the number of game states explored.
pub const DEFAULT_MAX_GAME_STATES: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_game_states: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_game_states: DEFAULT_MAX_GAME_STATES,
        }
    }
}

/// The reachable part of the game automaton from a list of roots.
#[derive(Clone, Debug)]
pub struct GameGraph {
    pub states: IndexSet<GameState, FxBuildHasher>,
    /// Successors on `A` and `B`.
    pub trans: Vec<[u32; 2]>,
    pub accepting: Vec<bool>,
    /// Index of each root (after normalization) in `states`.
    pub roots: Vec<u32>,
}

impl GameGraph {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Language-equivalence class of every explored game state.
    pub fn classes(&self) -> Vec<u32> {
        refine_partition(&self.trans, &self.accepting).0
    }
}

/// Breadth-first exploration of normalized game states, `A` before `B`.
pub fn explore(game: &Game, roots: &[GameState], max_game_states: usize) -> Result<GameGraph> {
    let mut states: IndexSet<GameState, FxBuildHasher> = IndexSet::default();
    let mut root_ids = Vec::with_capacity(roots.len());
    for r in roots {
        let (id, _) = states.insert_full(game.normalize(r));
        root_ids.push(id as u32);
    }
    if states.len() > max_game_states {
        return Err(Error::CapExceeded {
            cap: max_game_states,
        });
    }
    let mut trans: Vec<[u32; 2]> = Vec::new();
    let mut cache = StepCache::default();
    let mut cursor = 0;
    while cursor < states.len() {
        let mut row = [0u32; 2];
        for (slot, turn) in row.iter_mut().zip([Turn::A, Turn::B]) {
            let next = game.step_cached(&states[cursor], turn, &mut cache);
            let (id, _) = states.insert_full(next);
            if states.len() > max_game_states {
                return Err(Error::CapExceeded {
                    cap: max_game_states,
                });
            }
            *slot = id as u32;
        }
        trans.push(row);
        cursor += 1;
    }
    let accepting = states.iter().map(|g| game.is_accepting(g)).collect();
    Ok(GameGraph {
        states,
        trans,
        accepting,
        roots: root_ids,
    })
}

/// Result of [`winning_dfa_with`].
#[derive(Clone, Debug)]
pub struct WinningDfa {
    /// Minimal DFA over the turn alphabet, `A` as symbol 0.
    pub dfa: Dfa,
    /// Normalized game states reached before minimization.
    pub explored: usize,
}

/// Minimal DFA recognizing the winning set of `L(dfa)`.
pub fn winning_dfa(dfa: &Dfa) -> Result<Dfa> {
    winning_dfa_with(dfa, &BuildOptions::default()).map(|w| w.dfa)
}

pub fn winning_dfa_with(dfa: &Dfa, options: &BuildOptions) -> Result<WinningDfa> {
    let game = Game::new(dfa)?;
    let graph = explore(&game, &[game.initial()], options.max_game_states)?;
    let finals = graph
        .accepting
        .iter()
        .enumerate()
        .filter(|(_, &a)| a)
        .map(|(i, _)| i as u32);
    let raw =
        Dfa::new(graph.roots[0], graph.trans.clone(), finals)?.with_alphabet(Alphabet::TurnOrder);
    Ok(WinningDfa {
        dfa: minimize(&raw),
        explored: graph.len(),
    })
}

/// Whether two game states accept the same turn words.
pub fn gs_equivalent(
    game: &Game,
    a: &GameState,
    b: &GameState,
    max_game_states: usize,
) -> Result<bool> {
    let graph = explore(game, &[a.clone(), b.clone()], max_game_states)?;
    let classes = graph.classes();
    Ok(classes[graph.roots[0] as usize] == classes[graph.roots[1] as usize])
}
