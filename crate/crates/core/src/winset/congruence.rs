use crate::automata::Dfa;
use crate::Result;

use super::game::{Game, GameState};
use super::words::TurnWord;

/// Whether `v` and `w` induce the same state transformation on `wdfa`.
///
/// On a minimal DFA for a language this is exactly syntactic congruence:
/// `x·v·y` and `x·w·y` are accepted together for all `x`, `y`.
pub fn congruent(wdfa: &Dfa, v: &TurnWord, w: &TurnWord) -> bool {
    let (v, w) = (v.symbols(), w.symbols());
    (0..wdfa.state_count() as u32).all(|q| wdfa.run_from(q, &v) == wdfa.run_from(q, &w))
}

/// Compares `v` and `w` from every singleton game state `{{q}}` of the
/// target DFA: true when each start accepts both or neither.
pub fn singleton_equiv_test(dfa: &Dfa, v: &TurnWord, w: &TurnWord) -> Result<bool> {
    let game = Game::new(dfa)?;
    Ok((0..dfa.state_count() as u32).all(|q| {
        let start = GameState::singleton(q);
        game.is_accepting(&game.run(&start, v)) == game.is_accepting(&game.run(&start, w))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::winset::winning_dfa;

    fn exact_one() -> Dfa {
        Dfa::new(0, vec![[0, 1], [1, 2], [2, 2]], [1]).unwrap()
    }

    #[test]
    fn exact_one_congruences() {
        let w = winning_dfa(&exact_one()).unwrap();
        let p = |s: &str| s.parse::<TurnWord>().unwrap();
        assert!(congruent(&w, &p("BB"), &p("BBB")));
        assert!(!congruent(&w, &p("A"), &p("B")));
        assert!(congruent(&w, &p("AB"), &p("AB")));
    }

    #[test]
    fn singleton_test_separates_letters() {
        let d = exact_one();
        let p = |s: &str| s.parse::<TurnWord>().unwrap();
        assert!(singleton_equiv_test(&d, &p("AA"), &p("AAA")).unwrap());
        assert!(!singleton_equiv_test(&d, &p("A"), &p("B")).unwrap());
    }
}
