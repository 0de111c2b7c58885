//! Counting functions, bounds, enumeration and claim verification.

mod corpus;
mod counting;
mod enumerate;
mod periodicity;
mod report;
mod verify;

pub use corpus::{bounded_dfas, exhaustive_dfas, random_dfas, table, table_count};
pub use counting::{bounded_bound, chain_bound, dedekind, unimodal_q, BoundParams};
pub use enumerate::{sc_enumerate, sc_enumerate_with, Enumeration};
pub use periodicity::{a_periodicity, Periodicity};
pub use report::{Check, Envelope, Report, ReportBuilder};
pub use verify::{
    chain_automata, exact_k_predicate, verify_bounded_bound, verify_chain_bound,
    verify_chain_congruence, verify_core_properties, verify_dyck, verify_enumerate,
    verify_enumerate_with, verify_exact_k, verify_gadgets, verify_lower_bound, verify_periodicity,
    ChainCorpus, Corpus, VerifyOptions, ENUMERATION_VALUES,
};
