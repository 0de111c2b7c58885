use std::collections::BTreeSet;

use proptest::prelude::*;

use winset::analysis::{dedekind, unimodal_q};
use winset::automata::{minimize, words_of_length, Dfa, StateId};
use winset::gadgets::{antichains, chain_dfa};
use winset::winset::{
    oracle_winning_set, winning_dfa, Game, GameState, StateSet, StepCache, TargetSet, Turn,
    TurnWord,
};

fn dfa_strategy(max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(|n| {
        (
            prop::collection::vec((0..n as StateId, 0..n as StateId), n),
            0u32..1 << n,
        )
            .prop_map(move |(trans, mask)| {
                let trans = trans.into_iter().map(|(a, b)| [a, b]).collect();
                Dfa::new(0, trans, (0..n as StateId).filter(|q| mask >> q & 1 == 1)).unwrap()
            })
    })
}

/// A DFA together with a game state over its states.
fn game_strategy() -> impl Strategy<Value = (Dfa, Vec<StateSet>, Vec<StateSet>)> {
    dfa_strategy(6).prop_flat_map(|d| {
        let full = (1u128 << d.state_count()) - 1;
        let sets = prop::collection::vec((0..=full).prop_map(StateSet), 0..5);
        (Just(d), sets.clone(), sets)
    })
}

fn turn_strategy() -> impl Strategy<Value = Turn> {
    prop_oneof![Just(Turn::A), Just(Turn::B)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn step_distributes_over_union((d, x, y) in game_strategy(), t in turn_strategy()) {
        let game = Game::new(&d).unwrap();
        let gx = GameState::new(x);
        let gy = GameState::new(y);
        let together = game.step(&gx.union(&gy), t);
        let apart = game.normalize(&game.step(&gx, t).union(&game.step(&gy, t)));
        prop_assert_eq!(together, apart);
    }

    #[test]
    fn pruned_step_matches_literal_step((d, x, _) in game_strategy(), t in turn_strategy()) {
        let game = Game::new(&d).unwrap();
        let g = GameState::new(x);
        prop_assert_eq!(game.step(&g, t), game.normalize(&game.step_raw(&g, t)));
    }

    #[test]
    fn cached_step_matches_step((d, x, y) in game_strategy(), t in turn_strategy()) {
        let game = Game::new(&d).unwrap();
        let mut cache = StepCache::default();
        for g in [GameState::new(x), GameState::new(y)] {
            let g = game.normalize(&g);
            prop_assert_eq!(game.step_cached(&g, t, &mut cache), game.step(&g, t));
        }
    }

    #[test]
    fn normalize_is_idempotent_and_order_free((d, x, _) in game_strategy()) {
        let game = Game::new(&d).unwrap();
        let once = game.normalize(&GameState::new(x.clone()));
        prop_assert_eq!(game.normalize(&once), once.clone());
        let mut reversed = x;
        reversed.reverse();
        prop_assert_eq!(game.normalize(&GameState::new(reversed)), once);
    }

    #[test]
    fn winning_dfa_agrees_with_oracle(d in dfa_strategy(5), len in 0usize..=6) {
        let w = winning_dfa(&d).unwrap();
        let won = oracle_winning_set(&TargetSet::from_dfa(&d, len));
        for t in TurnWord::all_of_length(len) {
            prop_assert_eq!(w.accepts(&t.symbols()), won.contains(&t), "turns {}", t);
        }
    }

    #[test]
    fn winning_set_has_language_cardinality(d in dfa_strategy(5), len in 0usize..=8) {
        let w = winning_dfa(&d).unwrap();
        let words = words_of_length(len).filter(|x| d.accepts(x)).count();
        let turns = TurnWord::all_of_length(len).filter(|t| w.accepts(&t.symbols())).count();
        prop_assert_eq!(words, turns);
    }

    #[test]
    fn minimize_is_idempotent(d in dfa_strategy(7)) {
        let once = minimize(&d);
        prop_assert_eq!(minimize(&once), once);
    }

    #[test]
    fn text_format_round_trips(d in dfa_strategy(7)) {
        let back: Dfa = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn turn_words_round_trip(turns in prop::collection::vec(turn_strategy(), 0..12)) {
        let w = TurnWord::new(turns);
        prop_assert_eq!(w.to_string().parse::<TurnWord>().unwrap(), w);
    }

    #[test]
    fn chain_finals_order_is_irrelevant(m in 1usize..6, p in 0usize..6, mask in 0u32..1 << 11) {
        let total = m + p;
        let allowed = |q: usize| q < total && !(p == 0 && q == m - 1);
        let finals: Vec<StateId> = (0..total).filter(|&q| allowed(q) && mask >> q & 1 == 1).map(|q| q as StateId).collect();
        let mut reversed = finals.clone();
        reversed.reverse();
        prop_assert_eq!(chain_dfa(m, p, &finals).unwrap(), chain_dfa(m, p, &reversed).unwrap());
    }
}

/// Counts compositions of `m` that weakly rise and then weakly fall by
/// listing all `2^{m-1}` compositions.
fn unimodal_brute(m: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    let mut count = 0;
    for cuts in 0u32..1 << (m - 1) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..m - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        let peak = parts
            .iter()
            .position(|&x| x == *parts.iter().max().unwrap())
            .unwrap();
        let rises = parts[..=peak].windows(2).all(|w| w[0] <= w[1]);
        let falls = parts[peak..].windows(2).all(|w| w[0] >= w[1]);
        count += u64::from(rises && falls);
    }
    count
}

#[test]
fn unimodal_count_matches_listing() {
    for m in 0..=18 {
        assert_eq!(unimodal_q(m).unwrap(), unimodal_brute(m), "m = {m}");
    }
}

/// Antichains of subsets of `{0..n}` by filtering all families of subsets.
fn antichains_brute(n: usize) -> u64 {
    let subsets = 1usize << n;
    let mut count = 0;
    for family in 0u64..1 << subsets {
        let members: Vec<usize> = (0..subsets).filter(|s| family >> s & 1 == 1).collect();
        let ok = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || a & !b != 0));
        count += u64::from(ok);
    }
    count
}

#[test]
fn dedekind_matches_antichain_listings() {
    for n in 0..=4 {
        let d = dedekind(n).unwrap();
        assert_eq!(d, antichains_brute(n), "n = {n}");
        assert_eq!(d, antichains(n).len() as u64, "n = {n}");
        let distinct: BTreeSet<_> = antichains(n).into_iter().collect();
        assert_eq!(distinct.len() as u64, d);
    }
}
