//! Winning sets of regular languages.
//!
//! In the word-construction game on a target language `L ⊆ {0,1}*`, a turn
//! order `w ∈ {A,B}^n` says which player picks each letter of an `n`-letter
//! word; Alice wins when the finished word lies in `L`. The turn orders Alice
//! can win form the winning set `W(L)`, which is regular whenever `L` is.
//!
//! The crate is organised as:
//!
//! * [`automata`]: binary DFAs and NFAs, subset construction, minimization,
//!   structural analysis and the text/DOT formats.
//! * [`winset`]: the brute-force game oracle, game states and their
//!   transitions, and construction of the minimal winning-set DFA.
//! * [`gadgets`]: builders for the automaton families used in the
//!   experiments (gadgets, chain automata, exact-k, Dyck) and their turn words.
//! * [`analysis`]: Dedekind numbers, bounds, enumeration and claim
//!   verification producing [`analysis::Report`]s.
//! * [`cli`]: the command surface used by the `winset` binary.

pub mod analysis;
pub mod automata;
pub mod cli;
mod error;
pub mod gadgets;
pub mod winset;

pub use error::{Error, Result};
