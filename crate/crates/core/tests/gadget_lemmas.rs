use std::collections::BTreeSet;

use winset::automata::StateId;
use winset::gadgets::{
    antichains, build_gadget, gen_word, subset_word, test_word, Gadget, GadgetKind, Subset,
};
use winset::winset::{gs_equivalent, Game, GameState, StateSet, TurnWord};

fn subsets(n: usize) -> Vec<Subset> {
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn ports(g: &Gadget, prefix: &str, set: &Subset) -> StateSet {
    set.iter()
        .map(|i| g.port(&format!("{prefix}{i}")))
        .collect()
}

#[test]
fn subset_factory_produces_every_subset() {
    for n in 1..=3 {
        let g = build_gadget(GadgetKind::Subset, n).unwrap();
        let game = Game::new(&g.dfa).unwrap();
        for s in subsets(n) {
            let reached = game.run(
                &GameState::singleton(g.port("b1")),
                &subset_word(n, &s).unwrap(),
            );
            let expected = GameState::new([ports(&g, "o", &s)]);
            assert!(
                gs_equivalent(&game, &reached, &expected, 10_000).unwrap(),
                "n={n} S={s:?}: reached {reached}"
            );
        }
    }
}

#[test]
fn testing_gadget_accepts_exactly_contained_sets() {
    for n in 1..=3 {
        let g = build_gadget(GadgetKind::Testing, n).unwrap();
        let game = Game::new(&g.dfa).unwrap();
        for i_set in subsets(n).into_iter().filter(|s| !s.is_empty()) {
            let start = GameState::new([ports(&g, "q", &i_set)]);
            for p in subsets(n) {
                let end = game.run_raw(&start, &test_word(n, &p).unwrap());
                assert_eq!(
                    game.is_accepting(&end),
                    i_set.is_subset(&p),
                    "n={n} I={i_set:?} P={p:?}"
                );
            }
        }
    }
}

#[test]
fn testing_gadget_dies_after_two_n_letters() {
    for n in 1..=3 {
        let g = build_gadget(GadgetKind::Testing, n).unwrap();
        let game = Game::new(&g.dfa).unwrap();
        let all: Vec<StateId> = (0..g.dfa.state_count() as StateId).collect();
        for mask in 1u32..1 << all.len() {
            let start = GameState::new([all
                .iter()
                .filter(|&&q| mask >> q & 1 == 1)
                .copied()
                .collect::<StateSet>()]);
            for len in [2 * n, 2 * n + 1] {
                for w in TurnWord::all_of_length(len) {
                    assert!(
                        !game.is_accepting(&game.run_raw(&start, &w)),
                        "n={n} {start} {w}"
                    );
                }
            }
        }
    }
}

#[test]
fn state_factory_reproduces_antichains() {
    for n in 1..=2 {
        let g = build_gadget(GadgetKind::LowerBound, n).unwrap();
        let game = Game::new(&g.dfa).unwrap();
        let r_states: BTreeSet<StateId> =
            (1..=3 * n + 1).map(|i| g.port(&format!("r{i}"))).collect();
        for family in antichains(n) {
            let gs = game.run(
                &GameState::singleton(g.port("a1")),
                &gen_word(n, &family).unwrap(),
            );
            if family.iter().any(|s| s.is_empty()) {
                // an empty member wins everything and absorbs the rest
                assert_eq!(gs, GameState::new([StateSet::EMPTY]));
                continue;
            }
            assert!(gs.contains(StateSet::singleton(g.port("a1"))), "{gs}");
            let projected: BTreeSet<StateSet> = gs
                .sets()
                .iter()
                .filter(|s| s.iter().all(|q| r_states.contains(&q)))
                .copied()
                .collect();
            let expected: BTreeSet<StateSet> = family.iter().map(|s| ports(&g, "r", s)).collect();
            assert_eq!(projected, expected, "n={n} family={family:?} reached {gs}");
        }
    }
}
