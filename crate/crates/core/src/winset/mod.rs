//! Winning sets: the game oracle, game states, and the winning-set DFA.

mod congruence;
mod construct;
mod game;
mod oracle;
mod words;

pub use congruence::{congruent, singleton_equiv_test};
pub use construct::{
    explore, gs_equivalent, winning_dfa, winning_dfa_with, BuildOptions, GameGraph, WinningDfa,
    DEFAULT_MAX_GAME_STATES,
};
pub use game::{Game, GameState, StateSet, StepCache, MAX_DFA_STATES};
pub use oracle::{alice_wins, oracle_winning_set};
pub use words::{TargetSet, Turn, TurnWord};
