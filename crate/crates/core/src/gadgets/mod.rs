//! Builders for the automaton families used in the experiments, and the
//! turn words that drive them.

mod factory;
mod families;
mod witness;

pub use factory::{build_gadget, Gadget, GadgetKind};
pub use families::{
    chain_dfa, dyck_dfa, exact_k_dfa, exact_k_symbolic_wdfa, exact_k_triples, exact_k_wdfa_size,
    Triple,
};
pub use witness::{
    antichains, gen_word, subset_mask, subset_word, test_word, turn_word, Subset, TurnWordArg,
    TurnWordKind,
};
