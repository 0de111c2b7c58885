//! Claim verification. Each `verify_*` function recomputes a claim from
//! scratch and returns a [`Report`] whose checks say what was compared.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{analyze, equivalent, minimize, Dfa, StateId};
use crate::gadgets::{
    antichains, build_gadget, chain_dfa, dyck_dfa, exact_k_dfa, exact_k_symbolic_wdfa,
    exact_k_wdfa_size, gen_word, subset_word, test_word, GadgetKind, Subset,
};
use crate::winset::{
    alice_wins, congruent, gs_equivalent, oracle_winning_set, singleton_equiv_test,
    winning_dfa_with, BuildOptions, Game, GameState, StateSet, TargetSet, Turn, TurnWord,
    DEFAULT_MAX_GAME_STATES,
};
use crate::{Error, Result};

use super::corpus::{bounded_dfas, exhaustive_dfas, random_dfas};
use super::counting::{bounded_bound, chain_bound, dedekind, BoundParams};
use super::enumerate::sc_enumerate_with;
use super::periodicity::a_periodicity;
use super::report::{Report, ReportBuilder};

/// Settings shared by all verifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub max_game_states: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_game_states: DEFAULT_MAX_GAME_STATES,
            seed: 42,
            jobs: 1,
        }
    }
}

impl VerifyOptions {
    fn build(&self) -> BuildOptions {
        BuildOptions {
            max_game_states: self.max_game_states,
        }
    }

    /// Runs `f` on a pool of `jobs` threads.
    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

fn wdfa(dfa: &Dfa, opts: &VerifyOptions) -> Result<Dfa> {
    Ok(winning_dfa_with(dfa, &opts.build())?.dfa)
}

fn word(turns: &[(Turn, usize)]) -> TurnWord {
    let mut w = TurnWord::empty();
    for &(t, count) in turns {
        w.extend(&TurnWord::power(t, count));
    }
    w
}

fn subsets(n: usize) -> Vec<Subset> {
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// Runs per-item checks in parallel (order preserved) and gathers the
/// failures of each named check.
fn collect_failures<T: Sync>(
    opts: &VerifyOptions,
    items: &[T],
    names: &[&str],
    f: impl Fn(&T) -> Result<Vec<Option<String>>> + Sync,
) -> Result<Vec<Vec<String>>> {
    let results: Vec<Result<Vec<Option<String>>>> =
        opts.install(|| items.par_iter().map(&f).collect())?;
    let mut failures = vec![Vec::new(); names.len()];
    for r in results {
        for (slot, outcome) in failures.iter_mut().zip(r?) {
            if let Some(msg) = outcome {
                slot.push(msg);
            }
        }
    }
    Ok(failures)
}

/// DFA families for [`verify_core_properties`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Corpus {
    /// Every DFA on `1..=max_states` states.
    Exhaustive { max_states: usize },
    /// Seeded random DFAs.
    Random {
        seed: u64,
        count: usize,
        min_states: usize,
        max_states: usize,
    },
}

impl Corpus {
    pub fn dfas(&self) -> Vec<Dfa> {
        match *self {
            Corpus::Exhaustive { max_states } => {
                (1..=max_states).flat_map(exhaustive_dfas).collect()
            }
            Corpus::Random {
                seed,
                count,
                min_states,
                max_states,
            } => random_dfas(seed, count, min_states, max_states),
        }
    }
}

const ORACLE_MAX_LEN: usize = 8;
const COUNT_MAX_LEN: usize = 10;

/// Winning-set DFA against the brute-force oracle, plus the counting,
/// downward-closure and Dedekind properties, over a corpus.
pub fn verify_core_properties(corpus: &Corpus, opts: &VerifyOptions) -> Result<Report> {
    let mut b = ReportBuilder::new("core");
    b.param("corpus", corpus)
        .param("oracle_max_len", ORACLE_MAX_LEN)
        .param("count_max_len", COUNT_MAX_LEN);
    let dfas = corpus.dfas();
    let names = [
        "oracle-equivalence",
        "cardinality",
        "downward-closure",
        "dedekind-bound",
    ];
    let failures = collect_failures(opts, &dfas, &names, |d| {
        let w = wdfa(d, opts)?;
        let mut out = vec![None; 4];

        'oracle: for len in 0..=ORACLE_MAX_LEN {
            let won = oracle_winning_set(&TargetSet::from_dfa(d, len));
            for t in TurnWord::all_of_length(len) {
                if w.accepts(&t.symbols()) != won.contains(&t) {
                    out[0] = Some(format!("{d}turn word {t}"));
                    break 'oracle;
                }
            }
        }

        let (wc, lc) = (
            w.count_by_length(COUNT_MAX_LEN),
            d.count_by_length(COUNT_MAX_LEN),
        );
        if wc != lc {
            out[1] = Some(format!(
                "{d}winning counts {wc:?} vs language counts {lc:?}"
            ));
        }

        'down: for len in 1..=COUNT_MAX_LEN {
            for t in TurnWord::all_of_length(len) {
                let sym = t.symbols();
                if !w.accepts(&sym) {
                    continue;
                }
                for i in (0..len).filter(|&i| sym[i] == 1) {
                    let mut lower = sym.clone();
                    lower[i] = 0;
                    if !w.accepts(&lower) {
                        out[2] = Some(format!("{d}{t} accepted, flip at {i} rejected"));
                        break 'down;
                    }
                }
            }
        }

        let bound = dedekind(d.state_count())?;
        if w.state_count() as u64 > bound {
            out[3] = Some(format!("{d}size {} > D = {bound}", w.state_count()));
        }
        Ok(out)
    })?;

    let total: usize = failures.iter().map(Vec::len).sum();
    b.measured(serde_json::json!({ "automata": dfas.len(), "violations": total }))
        .expected(serde_json::json!({ "violations": 0 }));
    for (name, fails) in names.iter().zip(failures) {
        let detail = format!("{} of {} automata violate", fails.len(), dfas.len());
        b.check_with(name, fails.is_empty(), detail, fails);
    }
    Ok(b.finish())
}

/// Membership predicate for the winning set of exactly `n` ones.
pub fn exact_k_predicate(n: usize, w: &TurnWord) -> bool {
    let a = w.count(Turn::A);
    let bs = w.count(Turn::B);
    let mut balance: i64 = 0;
    let suffixes_ok = w.turns().iter().rev().all(|&t| {
        balance += if t == Turn::A { 1 } else { -1 };
        balance >= 0
    });
    a >= n && bs <= n && suffixes_ok
}

/// Size formula, suffix characterization and symbolic cross-check for the
/// winning set of exactly `n` ones.
pub fn verify_exact_k(n: usize, opts: &VerifyOptions) -> Result<Report> {
    if n == 0 || n > 10 {
        return Err(Error::InvalidArgument(format!(
            "exact-k verification takes 1 ≤ n ≤ 10, got {n}"
        )));
    }
    let mut b = ReportBuilder::new("exactk");
    b.param("n", n);
    let generic = wdfa(&exact_k_dfa(n), opts)?;
    let expected = exact_k_wdfa_size(n as u64);
    let size = generic.state_count() as u64;
    b.measured(size).expected(expected);
    b.check(
        "size",
        size == expected,
        format!("{size} states, formula {expected}"),
    );

    let max_len = (3 * n + 2).min(14);
    let mismatches: Vec<String> = (0..=max_len)
        .flat_map(TurnWord::all_of_length)
        .filter(|t| generic.accepts(&t.symbols()) != exact_k_predicate(n, t))
        .map(|t| t.to_string())
        .collect();
    b.check_with(
        "suffix-characterization",
        mismatches.is_empty(),
        format!("all turn words up to length {max_len}"),
        mismatches,
    );

    let symbolic = exact_k_symbolic_wdfa(n);
    let sym_size = symbolic.state_count() as u64;
    b.check(
        "symbolic-size",
        sym_size == expected && minimize(&symbolic).state_count() as u64 == sym_size,
        format!("{sym_size} triple states, all pairwise inequivalent"),
    );
    b.check(
        "symbolic-equivalent",
        equivalent(&symbolic, &generic),
        "triple automaton recognizes the generic winning set",
    );
    Ok(b.finish())
}

/// Membership of `A^{2i} B^{2j} A^{2k}` in the winning set of the Dyck
/// language, against `i ≥ j ∧ k ≥ 2j`, for every even length up to
/// `max_len`.
pub fn verify_dyck(max_len: usize, opts: &VerifyOptions) -> Result<Report> {
    if max_len % 2 == 1 || max_len > 16 {
        return Err(Error::InvalidArgument(format!(
            "dyck verification takes an even length ≤ 16, got {max_len}"
        )));
    }
    const ORACLE_MAX: usize = 10;
    let mut b = ReportBuilder::new("dyck");
    b.param("max_len", max_len)
        .param("oracle_max_len", ORACLE_MAX);
    let mut mismatches = Vec::new();
    let mut oracle_mismatches = Vec::new();
    let mut checked = 0usize;
    for m in (0..=max_len).step_by(2) {
        let dyck = dyck_dfa(m.max(1))?;
        let w = wdfa(&dyck, opts)?;
        let target = (m <= ORACLE_MAX).then(|| TargetSet::from_dfa(&dyck, m));
        let half = m / 2;
        for i in 0..=half {
            for j in 0..=half - i {
                let k = half - i - j;
                let t = word(&[(Turn::A, 2 * i), (Turn::B, 2 * j), (Turn::A, 2 * k)]);
                let member = w.accepts(&t.symbols());
                checked += 1;
                if member != (i >= j && k >= 2 * j) {
                    mismatches.push(format!("{t} (i={i}, j={j}, k={k}): member={member}"));
                }
                if let Some(target) = &target {
                    if alice_wins(target, &t)? != member {
                        oracle_mismatches.push(t.to_string());
                    }
                }
            }
        }
        if let Some(target) = &target {
            let won = oracle_winning_set(target);
            for t in TurnWord::all_of_length(m) {
                if w.accepts(&t.symbols()) != won.contains(&t) {
                    oracle_mismatches.push(format!("length {m}: {t}"));
                }
            }
        }
    }
    b.measured(serde_json::json!({ "words": checked, "mismatches": mismatches.len() }))
        .expected(serde_json::json!({ "mismatches": 0 }));
    b.check_with(
        "characterization",
        mismatches.is_empty(),
        format!("{checked} words of the form A^2i B^2j A^2k"),
        mismatches,
    );
    b.check_with(
        "oracle-agreement",
        oracle_mismatches.is_empty(),
        format!("automaton against brute force for lengths ≤ {ORACLE_MAX}"),
        oracle_mismatches,
    );
    Ok(b.finish())
}

/// The lower-bound construction: minimal winning-set size at least `D(n)`,
/// and for every antichain `𝕊` and `P ⊆ {1..n}` the word
/// `gen(𝕊) · Aⁿ · B · B · test(P)` is won iff some member of `𝕊` lies in
/// `P`.
pub fn verify_lower_bound(n: usize, opts: &VerifyOptions) -> Result<Report> {
    if !(1..=2).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "lower-bound verification takes n ∈ {{1, 2}}, got {n}"
        )));
    }
    let mut b = ReportBuilder::new("lower-bound");
    b.param("n", n);
    let g = build_gadget(GadgetKind::LowerBound, n)?;
    let built = winning_dfa_with(&g.dfa, &opts.build())?;
    let w = built.dfa;
    let d_n = dedekind(n)?;
    let size = w.state_count() as u64;
    b.measured(size).expected(format!(">= {d_n}"));
    b.check(
        "size-at-least-dedekind",
        size >= d_n,
        format!(
            "{size} states ({} game states explored), D({n}) = {d_n}",
            built.explored
        ),
    );

    let families = antichains(n);
    let reached: BTreeSet<StateId> = families
        .iter()
        .map(|f| Ok(w.run_from(w.initial(), &gen_word(n, f)?.symbols())))
        .collect::<Result<_>>()?;
    b.check(
        "distinct-antichain-states",
        reached.len() == families.len(),
        format!(
            "{} antichains reach {} distinct states",
            families.len(),
            reached.len()
        ),
    );

    let game = Game::new(&g.dfa)?;
    let start = game.initial();
    let mut failures = Vec::new();
    let mut literal_failures = 0usize;
    let mut pairs = 0usize;
    for family in &families {
        let gen = gen_word(n, family)?;
        for p in subsets(n) {
            pairs += 1;
            let expected = family.iter().any(|s| s.is_subset(&p));
            let test = test_word(n, &p)?;
            let repaired = gen
                .concat(&word(&[(Turn::A, n), (Turn::B, 2)]))
                .concat(&test);
            let by_dfa = w.accepts(&repaired.symbols());
            let by_game = game.is_accepting(&game.run(&start, &repaired));
            if by_dfa != expected || by_game != expected {
                failures.push(format!(
                    "antichain {family:?}, P={p:?}: dfa={by_dfa} game={by_game} expected={expected}"
                ));
            }
            let literal = gen.concat(&TurnWord::power(Turn::A, n + 1)).concat(&test);
            if w.accepts(&literal.symbols()) != expected {
                literal_failures += 1;
            }
        }
    }
    b.check_with(
        "distinguishing-words",
        failures.is_empty(),
        format!("{pairs} antichain/P pairs, automaton and direct game run"),
        failures,
    );
    b.note(format!(
        "the construction has {} states; with A^(n+1) in place of A^n B B, {literal_failures} of {pairs} pairs disagree with the predicate",
        g.dfa.state_count()
    ));
    Ok(b.finish())
}

/// Behavioral lemmas of the subset factory, testing and state factory
/// gadgets.
pub fn verify_gadgets(max_n: usize, opts: &VerifyOptions) -> Result<Report> {
    let mut b = ReportBuilder::new("gadgets");
    b.param("max_n", max_n);
    let ports = |g: &crate::gadgets::Gadget, prefix: &str, s: &Subset| -> StateSet {
        s.iter().map(|i| g.port(&format!("{prefix}{i}"))).collect()
    };

    let mut subset_fail = Vec::new();
    let mut testing_fail = Vec::new();
    let mut death_fail = Vec::new();
    let mut factory_fail = Vec::new();
    for n in 1..=max_n {
        let g = build_gadget(GadgetKind::Subset, n)?;
        let game = Game::new(&g.dfa)?;
        for s in subsets(n) {
            let reached = game.run(&GameState::singleton(g.port("b1")), &subset_word(n, &s)?);
            let expected = GameState::new([ports(&g, "o", &s)]);
            if !gs_equivalent(&game, &reached, &expected, opts.max_game_states)? {
                subset_fail.push(format!("n={n} S={s:?}: reached {reached}"));
            }
        }

        let g = build_gadget(GadgetKind::Testing, n)?;
        let game = Game::new(&g.dfa)?;
        for i_set in subsets(n) {
            let start = GameState::new([ports(&g, "q", &i_set)]);
            for p in subsets(n) {
                let end = game.run_raw(&start, &test_word(n, &p)?);
                if game.is_accepting(&end) != i_set.is_subset(&p) {
                    testing_fail.push(format!("n={n} I={i_set:?} P={p:?}"));
                }
            }
        }
        let states = g.dfa.state_count() as u32;
        for mask in 1u32..1 << states {
            let start = GameState::new([(0..states).filter(|q| mask >> q & 1 == 1).collect()]);
            for len in [2 * n, 2 * n + 1] {
                for t in TurnWord::all_of_length(len) {
                    if game.is_accepting(&game.run_raw(&start, &t)) {
                        death_fail.push(format!("n={n} from {start} on {t}"));
                    }
                }
            }
        }

        if n <= 2 {
            let g = build_gadget(GadgetKind::LowerBound, n)?;
            let game = Game::new(&g.dfa)?;
            let a1 = StateSet::singleton(g.port("a1"));
            let r_states: StateSet = (1..=3 * n + 1).map(|i| g.port(&format!("r{i}"))).collect();
            for family in antichains(n) {
                let gs = game.run(&GameState::singleton(g.port("a1")), &gen_word(n, &family)?);
                let ok = if family.iter().any(|s| s.is_empty()) {
                    gs == GameState::new([StateSet::EMPTY])
                } else {
                    let projected: BTreeSet<StateSet> = gs
                        .sets()
                        .iter()
                        .filter(|s| s.is_subset(r_states))
                        .copied()
                        .collect();
                    let expected: BTreeSet<StateSet> =
                        family.iter().map(|s| ports(&g, "r", s)).collect();
                    gs.contains(a1) && projected == expected
                };
                if !ok {
                    factory_fail.push(format!("n={n} antichain {family:?}: reached {gs}"));
                }
            }
        }
    }
    let total = subset_fail.len() + testing_fail.len() + death_fail.len() + factory_fail.len();
    b.measured(serde_json::json!({ "violations": total }))
        .expected(serde_json::json!({ "violations": 0 }));
    b.check_with(
        "subset-factory",
        subset_fail.is_empty(),
        "from {{b1}} the subset word for S is equivalent to {{o_i : i in S}}",
        subset_fail,
    );
    b.check_with(
        "testing-acceptance",
        testing_fail.is_empty(),
        "from {{q_i : i in I}} the test word for P is won iff I ⊆ P",
        testing_fail,
    );
    b.check_with(
        "testing-death",
        death_fail.is_empty(),
        "no single nonempty set of testing states survives 2n or 2n+1 letters",
        death_fail,
    );
    b.check_with(
        "state-factory",
        factory_fail.is_empty(),
        "gen word for an antichain keeps {a1} and adds the antichain on r-states (n ≤ 2)",
        factory_fail,
    );
    Ok(b.finish())
}

/// Every chain automaton with at most `max_states` states.
pub fn chain_automata(max_states: usize) -> Vec<(usize, usize, Vec<StateId>)> {
    let mut out = Vec::new();
    for total in 1..=max_states {
        for m in 1..=total {
            let p = total - m;
            let candidates = if p == 0 { total - 1 } else { total };
            for mask in 0u32..1 << candidates {
                let finals = (0..candidates as StateId)
                    .filter(|q| mask >> q & 1 == 1)
                    .collect();
                out.push((m, p, finals));
            }
        }
    }
    out
}

/// Chain automata checked by [`verify_chain_congruence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainCorpus {
    /// Every chain automaton with at most `max_states` states.
    Exhaustive { max_states: usize },
    /// Every chain automaton with at most `exhaustive_max` states, plus
    /// `per_size` distinct seeded ones of each larger size up to
    /// `max_states`.
    Sampled {
        exhaustive_max: usize,
        max_states: usize,
        per_size: usize,
        seed: u64,
    },
}

impl ChainCorpus {
    pub fn chains(&self) -> Vec<(usize, usize, Vec<StateId>)> {
        match *self {
            ChainCorpus::Exhaustive { max_states } => chain_automata(max_states),
            ChainCorpus::Sampled {
                exhaustive_max,
                max_states,
                per_size,
                seed,
            } => {
                let mut out = chain_automata(exhaustive_max);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for total in exhaustive_max + 1..=max_states {
                    // m + p = total: total·2^total − 2^(total−1) automata
                    let available = (total << total) - (1 << (total - 1));
                    let mut picked = BTreeSet::new();
                    while picked.len() < per_size.min(available) {
                        let m = rng.random_range(1..=total);
                        let p = total - m;
                        let candidates = if p == 0 { total - 1 } else { total };
                        let mask: u32 = rng.random_range(0..1 << candidates);
                        picked.insert((m, p, mask));
                    }
                    for (m, p, mask) in picked {
                        let finals = (0..total as StateId)
                            .filter(|q| mask >> q & 1 == 1)
                            .collect();
                        out.push((m, p, finals));
                    }
                }
                out
            }
        }
    }
}

/// Congruences of chain automata: `A^{n−1} ≡ Aⁿ`, `B^{n−1} ≡ Bⁿ`,
/// `B^k A^k B^{k+1} ≡ B^{k+1} A^k B^k` and `A^{k+1} B^k A^k ≡ A^k B^k A^{k+1}`
/// for `k ≤ 3`, checked by transformation functions on the minimal
/// winning-set DFA, plus `AB`/`BA` domination on singleton game states.
pub fn verify_chain_congruence(corpus: &ChainCorpus, opts: &VerifyOptions) -> Result<Report> {
    let mut b = ReportBuilder::new("chain-congruence");
    b.param("corpus", corpus).param("max_k", 3);
    let chains = corpus.chains();
    let names = [
        "powers",
        "k-families",
        "ab-ba-domination",
        "singleton-test-soundness",
    ];
    let failures = collect_failures(opts, &chains, &names, |(m, p, finals)| {
        let d = chain_dfa(*m, *p, finals)?;
        let n = m + p;
        let w = wdfa(&d, opts)?;
        let label = format!("chain m={m} p={p} finals={finals:?}");
        let mut out = vec![None; 4];

        let mut pairs = vec![
            (word(&[(Turn::A, n - 1)]), word(&[(Turn::A, n)])),
            (word(&[(Turn::B, n - 1)]), word(&[(Turn::B, n)])),
        ];
        if let Some((v, u)) = pairs.iter().find(|(v, u)| !congruent(&w, v, u)) {
            out[0] = Some(format!("{label}: {v} vs {u}"));
        }
        let powers = pairs.len();
        for k in 0..=3 {
            pairs.push((
                word(&[(Turn::B, k), (Turn::A, k), (Turn::B, k + 1)]),
                word(&[(Turn::B, k + 1), (Turn::A, k), (Turn::B, k)]),
            ));
            pairs.push((
                word(&[(Turn::A, k + 1), (Turn::B, k), (Turn::A, k)]),
                word(&[(Turn::A, k), (Turn::B, k), (Turn::A, k + 1)]),
            ));
        }
        if let Some((v, u)) = pairs[powers..].iter().find(|(v, u)| !congruent(&w, v, u)) {
            out[1] = Some(format!("{label}: {v} vs {u}"));
        }

        let game = Game::new(&d)?;
        let ab = word(&[(Turn::A, 1), (Turn::B, 1)]);
        let ba = word(&[(Turn::B, 1), (Turn::A, 1)]);
        for q in 0..n as StateId {
            let start = GameState::singleton(q);
            let after_ab = game.run_raw(&start, &ab);
            let after_ba = game.run_raw(&start, &ba);
            if !after_ab.is_dominated_by(&after_ba) {
                out[2] = Some(format!(
                    "{label}: from {{{{{q}}}}} AB gives {after_ab}, BA gives {after_ba}"
                ));
                break;
            }
        }

        // The singleton test is sufficient for congruence: it must never
        // claim a pair that the transformation functions separate.
        for (v, u) in &pairs {
            if singleton_equiv_test(&d, v, u)? && !congruent(&w, v, u) {
                out[3] = Some(format!("{label}: {v} vs {u}"));
                break;
            }
        }
        Ok(out)
    })?;
    let total: usize = failures.iter().map(Vec::len).sum();
    b.measured(serde_json::json!({ "automata": chains.len(), "violations": total }))
        .expected(serde_json::json!({ "violations": 0 }));
    for (name, fails) in names.iter().zip(failures) {
        let detail = format!("{} of {} chain automata violate", fails.len(), chains.len());
        b.check_with(name, fails.is_empty(), detail, fails);
    }
    Ok(b.finish())
}

/// Minimal winning-set sizes of all 1-bounded chain automata with at most
/// `max_states` states against `1 + Σ_{m<4n} Q(m)`.
pub fn verify_chain_bound(max_states: usize, opts: &VerifyOptions) -> Result<Report> {
    let mut b = ReportBuilder::new("chain-bound");
    b.param("max_states", max_states);
    let chains: Vec<_> = chain_automata(max_states)
        .into_iter()
        .filter(|(_, p, _)| *p == 0)
        .collect();
    let sizes: Vec<Result<(usize, u64)>> = opts.install(|| {
        chains
            .par_iter()
            .map(|(m, p, finals)| {
                let d = chain_dfa(*m, *p, finals)?;
                Ok((wdfa(&d, opts)?.state_count(), chain_bound(*m)?))
            })
            .collect()
    })?;
    let mut violations = Vec::new();
    let mut largest = vec![0usize; max_states + 1];
    for ((m, _, finals), r) in chains.iter().zip(sizes) {
        let (size, bound) = r?;
        largest[*m] = largest[*m].max(size);
        if size as u64 > bound {
            violations.push(format!("m={m} finals={finals:?}: {size} > {bound}"));
        }
    }
    let bounds: Vec<u64> = (1..=max_states).map(chain_bound).collect::<Result<_>>()?;
    b.measured(serde_json::json!({ "largest_by_states": &largest[1..] }))
        .expected(serde_json::json!({ "bound_by_states": bounds }));
    b.check_with(
        "size-within-bound",
        violations.is_empty(),
        format!("{} one-bounded chain automata", chains.len()),
        violations,
    );
    Ok(b.finish())
}

/// Minimal winning-set sizes of seeded DFAs with disjoint cycles against
/// `Σ_{m=0}^{ℓ+p+1} P^m`, computed on the minimal DFA's cycle structure.
pub fn verify_bounded_bound(
    count: usize,
    max_states: usize,
    opts: &VerifyOptions,
) -> Result<Report> {
    let mut b = ReportBuilder::new("bounded-bound");
    b.param("seed", opts.seed)
        .param("count", count)
        .param("max_states", max_states);
    let dfas = bounded_dfas(opts.seed, count, max_states);
    let names = ["disjoint-cycles", "size-within-bound"];
    let failures = collect_failures(opts, &dfas, &names, |d| {
        let min = minimize(d);
        let cycles = analyze(&min).cycles;
        let mut out = vec![None; 2];
        if !cycles.disjoint {
            out[0] = Some(format!("{d}"));
            return Ok(out);
        }
        let bound = bounded_bound(&BoundParams::from(&cycles));
        let size = wdfa(&min, opts)?.state_count();
        if num_bigint::BigUint::from(size) > bound {
            out[1] = Some(format!("{d}size {size} > bound {bound}"));
        }
        Ok(out)
    })?;
    let total: usize = failures.iter().map(Vec::len).sum();
    b.measured(serde_json::json!({ "automata": dfas.len(), "violations": total }))
        .expected(serde_json::json!({ "violations": 0 }));
    b.note("lcm over no cycles is 1 and the pairwise maximum over fewer than two cycles is 0");
    for (name, fails) in names.iter().zip(failures) {
        let detail = format!("{} of {} automata violate", fails.len(), dfas.len());
        b.check_with(name, fails.is_empty(), detail, fails);
    }
    Ok(b.finish())
}

/// `A`-periodicity of every singleton game state of seeded DFAs with
/// disjoint cycles, against the caps on `k` and `m`.
pub fn verify_periodicity(count: usize, max_states: usize, opts: &VerifyOptions) -> Result<Report> {
    let mut b = ReportBuilder::new("periodicity");
    b.param("seed", opts.seed)
        .param("count", count)
        .param("max_states", max_states);
    let dfas = bounded_dfas(opts.seed, count, max_states);
    let names = ["within-caps"];
    let failures = collect_failures(opts, &dfas, &names, |d| {
        let min = minimize(d);
        for q in 0..min.state_count() as StateId {
            let p = a_periodicity(&min, &GameState::singleton(q), opts.max_game_states)?;
            if !p.within_caps() {
                return Ok(vec![Some(format!("{min}from {{{{{q}}}}}: {p:?}"))]);
            }
        }
        Ok(vec![None])
    })?;
    let fails = failures.into_iter().next().unwrap_or_default();
    b.measured(serde_json::json!({ "automata": dfas.len(), "violations": fails.len() }))
        .expected(serde_json::json!({ "violations": 0 }));
    b.check_with(
        "within-caps",
        fails.is_empty(),
        "every singleton game state of the minimal DFA",
        fails,
    );
    Ok(b.finish())
}

/// Known maxima of minimal winning-set sizes over all DFAs with 1 to 5
/// states.
pub const ENUMERATION_VALUES: [usize; 5] = [1, 4, 16, 62, 517];

pub fn verify_enumerate(n: usize, opts: &VerifyOptions) -> Result<Report> {
    verify_enumerate_with(n, opts, None)
}

/// [`verify_enumerate`] with resumable progress in `checkpoint`.
pub fn verify_enumerate_with(
    n: usize,
    opts: &VerifyOptions,
    checkpoint: Option<&std::path::Path>,
) -> Result<Report> {
    let mut b = ReportBuilder::new("enumerate");
    b.param("n", n);
    let e = sc_enumerate_with(n, opts.jobs, opts.max_game_states, checkpoint)?;
    let expected = ENUMERATION_VALUES[n - 1];
    b.measured(e.max_size).expected(expected);
    b.check(
        "maximum",
        e.max_size == expected,
        format!("{} automata, maximum {}", e.automata, e.max_size),
    );
    let bound = dedekind(n)?;
    b.check(
        "dedekind-bound",
        e.max_size as u64 <= bound,
        format!("D({n}) = {bound}"),
    );
    b.note(format!(
        "witness: {}",
        e.witness.to_string().trim_end().replace('\n', "; ")
    ));
    Ok(b.finish())
}
