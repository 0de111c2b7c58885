use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::automata::{words_of_length, Dfa, Symbol};
use crate::{Error, Result};

/// Whose turn it is to pick the next letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    /// Alice, who wants the word in the target.
    A,
    /// Bob.
    B,
}

impl Turn {
    /// Symbol used for this turn by turn-order automata.
    pub fn symbol(self) -> Symbol {
        match self {
            Turn::A => 0,
            Turn::B => 1,
        }
    }

    pub fn from_symbol(s: Symbol) -> Self {
        if s == 0 {
            Turn::A
        } else {
            Turn::B
        }
    }
}

/// A turn order: a word over `{A, B}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurnWord(Vec<Turn>);

impl TurnWord {
    pub fn new(turns: Vec<Turn>) -> Self {
        TurnWord(turns)
    }

    pub fn empty() -> Self {
        TurnWord(Vec::new())
    }

    /// `turn` repeated `count` times.
    pub fn power(turn: Turn, count: usize) -> Self {
        TurnWord(vec![turn; count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn turns(&self) -> &[Turn] {
        &self.0
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        self.0.iter().map(|t| t.symbol()).collect()
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        TurnWord(symbols.iter().map(|&s| Turn::from_symbol(s)).collect())
    }

    pub fn count(&self, turn: Turn) -> usize {
        self.0.iter().filter(|&&t| t == turn).count()
    }

    pub fn push(&mut self, turn: Turn) {
        self.0.push(turn);
    }

    pub fn extend(&mut self, other: &TurnWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &TurnWord) -> TurnWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    /// Index-wise order induced by `A < B`.
    pub fn is_below(&self, other: &TurnWord) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All turn words of length `len`, lexicographic with `A < B`.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = TurnWord> {
        words_of_length(len).map(|w| TurnWord::from_symbols(&w))
    }
}

impl FromIterator<Turn> for TurnWord {
    fn from_iter<I: IntoIterator<Item = Turn>>(iter: I) -> Self {
        TurnWord(iter.into_iter().collect())
    }
}

impl fmt::Display for TurnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            f.write_str(match t {
                Turn::A => "A",
                Turn::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for TurnWord {
    type Err = Error;

    /// Parses letters `A`/`B`; `λ` or the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "λ" {
            return Ok(TurnWord::empty());
        }
        s.chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Turn::A),
                'B' | 'b' => Ok(Turn::B),
                other => Err(Error::InvalidArgument(format!(
                    "`{other}` is not a turn letter (expected A or B)"
                ))),
            })
            .collect()
    }
}

impl Serialize for TurnWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An explicit set of binary words sharing one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSet {
    length: usize,
    words: BTreeSet<Vec<Symbol>>,
}

impl TargetSet {
    pub fn new(length: usize, words: impl IntoIterator<Item = Vec<Symbol>>) -> Result<Self> {
        let words: BTreeSet<Vec<Symbol>> = words.into_iter().collect();
        for w in &words {
            if w.len() != length {
                return Err(Error::InvalidArgument(format!(
                    "word of length {} in a target set of length {length}",
                    w.len()
                )));
            }
            if w.iter().any(|&s| s > 1) {
                return Err(Error::InvalidArgument("target words must be binary".into()));
            }
        }
        Ok(TargetSet { length, words })
    }

    /// Parses words written with `0`/`1`; all must share one length.
    pub fn parse_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let parsed: Vec<Vec<Symbol>> = words
            .into_iter()
            .map(|w| {
                let w = if w == "λ" { "" } else { w };
                w.chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        other => Err(Error::InvalidArgument(format!(
                            "`{other}` is not a binary letter"
                        ))),
                    })
                    .collect::<Result<Vec<Symbol>>>()
            })
            .collect::<Result<_>>()?;
        let length = match parsed.first() {
            Some(w) => w.len(),
            None => {
                return Err(Error::InvalidArgument(
                    "an empty word list does not fix a length".into(),
                ))
            }
        };
        TargetSet::new(length, parsed)
    }

    pub fn empty(length: usize) -> Self {
        TargetSet {
            length,
            words: BTreeSet::new(),
        }
    }

    pub fn full(length: usize) -> Self {
        TargetSet {
            length,
            words: words_of_length(length).collect(),
        }
    }

    /// `L(dfa) ∩ {0,1}^length`, by running the DFA on every word.
    pub fn from_dfa(dfa: &Dfa, length: usize) -> Self {
        TargetSet {
            length,
            words: words_of_length(length).filter(|w| dfa.accepts(w)).collect(),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &BTreeSet<Vec<Symbol>> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turn_words_parse_and_print() {
        let w: TurnWord = "ABBA".parse().unwrap();
        assert_eq!(w.to_string(), "ABBA");
        assert_eq!(w.symbols(), vec![0, 1, 1, 0]);
        assert_eq!("λ".parse::<TurnWord>().unwrap(), TurnWord::empty());
        assert!("AXB".parse::<TurnWord>().is_err());
    }

    #[test]
    fn index_wise_order() {
        let ab: TurnWord = "AB".parse().unwrap();
        let bb: TurnWord = "BB".parse().unwrap();
        let ba: TurnWord = "BA".parse().unwrap();
        assert!(ab.is_below(&bb));
        assert!(!ab.is_below(&ba));
        assert!(!ab.is_below(&"ABA".parse().unwrap()));
    }

    #[test]
    fn target_sets_check_lengths() {
        assert!(TargetSet::parse_words(["00", "1"]).is_err());
        assert!(TargetSet::parse_words(["02"]).is_err());
        let t = TargetSet::parse_words(["00", "11"]).unwrap();
        assert_eq!(t.length(), 2);
        assert_eq!(t.len(), 2);
        assert_eq!(TargetSet::full(3).len(), 8);
    }
}
