use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::automata::{Dfa, StateId};
use crate::{Error, Result};

/// A DFA together with names for its states.
///
/// Every state gets a port named after its role (`b1`, `e4`, `q2`, ...);
/// a few states also carry alias ports (`o1`..`on` in the subset gadget).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub dfa: Dfa,
    pub ports: BTreeMap<String, StateId>,
}

impl Gadget {
    /// State id behind a port. Panics on unknown names.
    pub fn port(&self, name: &str) -> StateId {
        match self.ports.get(name) {
            Some(&q) => q,
            None => panic!("gadget has no port `{name}`"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    Subset,
    StateFactory,
    Testing,
    LowerBound,
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subset" => Ok(GadgetKind::Subset),
            "state_factory" | "state-factory" => Ok(GadgetKind::StateFactory),
            "testing" => Ok(GadgetKind::Testing),
            "lower_bound" | "lower-bound" => Ok(GadgetKind::LowerBound),
            other => Err(Error::InvalidArgument(format!(
                "unknown gadget kind `{other}` (expected subset, state_factory, testing or lower_bound)"
            ))),
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Subset => "subset",
            GadgetKind::StateFactory => "state_factory",
            GadgetKind::Testing => "testing",
            GadgetKind::LowerBound => "lower_bound",
        })
    }
}

/// Incremental construction of a named automaton. A branch `x → {y, z}`
/// sends 0 to `y` and 1 to `z`; a doubled edge sends both letters to one
/// target.
#[derive(Default)]
struct Builder {
    index: HashMap<String, StateId>,
    names: Vec<String>,
    trans: Vec<Option<[StateId; 2]>>,
    finals: Vec<StateId>,
}

impl Builder {
    fn state(&mut self, name: &str) -> StateId {
        if let Some(&q) = self.index.get(name) {
            return q;
        }
        let q = self.names.len() as StateId;
        self.index.insert(name.to_string(), q);
        self.names.push(name.to_string());
        self.trans.push(None);
        q
    }

    fn branch(&mut self, from: &str, zero: &str, one: &str) {
        let (f, z, o) = (self.state(from), self.state(zero), self.state(one));
        debug_assert!(self.trans[f as usize].is_none(), "{from} wired twice");
        self.trans[f as usize] = Some([z, o]);
    }

    fn double(&mut self, from: &str, to: &str) {
        self.branch(from, to, to);
    }

    fn sink(&mut self, name: &str, accepting: bool) {
        self.double(name, name);
        if accepting {
            let q = self.state(name);
            self.finals.push(q);
        }
    }

    fn accepting(&mut self, name: &str) {
        let q = self.state(name);
        self.finals.push(q);
    }

    fn finish(self, initial: &str, aliases: &[(String, String)]) -> Gadget {
        let initial = self.index[initial];
        let trans = self
            .trans
            .iter()
            .enumerate()
            .map(|(q, t)| t.unwrap_or_else(|| panic!("state {} left unwired", self.names[q])))
            .collect();
        let dfa = Dfa::new(initial, trans, self.finals).expect("builder ids are in range");
        let mut ports: BTreeMap<String, StateId> = self
            .names
            .iter()
            .enumerate()
            .map(|(q, name)| (name.clone(), q as StateId))
            .collect();
        for (alias, target) in aliases {
            ports.insert(alias.clone(), self.index[target]);
        }
        Gadget { dfa, ports }
    }
}

pub fn build_gadget(kind: GadgetKind, n: usize) -> Result<Gadget> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "gadget size n must be at least 1".into(),
        ));
    }
    Ok(match kind {
        GadgetKind::Subset => subset_gadget(n),
        GadgetKind::StateFactory => state_factory_gadget(n),
        GadgetKind::Testing => testing_gadget(n),
        GadgetKind::LowerBound => lower_bound_gadget(n),
    })
}

/// Index of the e-state that plays the output `o_i`.
fn output_index(n: usize, i: usize) -> usize {
    2 * n + i - 2
}

/// The subset-making part: a `b` ladder whose rungs either skip through a
/// `d` state or step down into `c_i`, each `c_i` feeding the `e` chain at
/// offset `3i-2`, so that the letters read at each `b_i` decide whether
/// `o_i` ends up in the produced set. The last `e` state is left for the
/// caller to wire.
fn wire_subset(b: &mut Builder, n: usize) -> Vec<(String, String)> {
    for i in 1..n {
        b.branch(&format!("b{i}"), &format!("d{i}"), &format!("c{i}"));
        b.double(&format!("d{i}"), &format!("b{}", i + 1));
    }
    b.branch(&format!("b{n}"), &format!("c{n}"), &format!("b{}", n + 1));
    b.sink(&format!("b{}", n + 1), true);
    for i in 1..=n {
        b.branch(
            &format!("c{i}"),
            &format!("s{i}"),
            &format!("e{}", 3 * i - 2),
        );
        b.sink(&format!("s{i}"), false);
    }
    for j in 1..3 * n - 2 {
        b.double(&format!("e{j}"), &format!("e{}", j + 1));
    }
    (1..=n)
        .map(|i| (format!("o{i}"), format!("e{}", output_index(n, i))))
        .collect()
}

/// Subset factory: from `{{b1}}`, the subset turn word for `S` leads to a
/// game state equivalent to `{{o_i : i ∈ S}}`. Standalone, the `e` chain
/// runs into an accepting sink `z`.
fn subset_gadget(n: usize) -> Gadget {
    let mut b = Builder::default();
    b.state("b1");
    let aliases = wire_subset(&mut b, n);
    b.double(&format!("e{}", 3 * n - 2), "z");
    b.sink("z", true);
    b.finish("b1", &aliases)
}

/// The two `3n+1` cycles around the subset part. The exit of `r_n` is left
/// for the caller.
fn wire_state_factory(b: &mut Builder, n: usize, exit: &str) -> Vec<(String, String)> {
    let len = 3 * n + 1;
    b.branch("a1", "a2", "b1");
    for i in 2..=len {
        let next = if i == len { 1 } else { i + 1 };
        b.double(&format!("a{i}"), &format!("a{next}"));
    }
    let aliases = wire_subset(b, n);
    b.double(&format!("e{}", 3 * n - 2), "r1");
    for i in 1..=len {
        let next = format!("r{}", if i == len { 1 } else { i + 1 });
        if i == n {
            b.branch(&format!("r{i}"), &next, exit);
        } else {
            b.double(&format!("r{i}"), &next);
        }
    }
    aliases
}

/// Game state factory with its exit into a rejecting sink.
fn state_factory_gadget(n: usize) -> Gadget {
    let mut b = Builder::default();
    b.state("a1");
    let aliases = wire_state_factory(&mut b, n, "exit");
    b.sink("exit", false);
    b.finish("a1", &aliases)
}

fn wire_testing(b: &mut Builder, n: usize) {
    for i in 1..2 * n {
        let next = format!("q{}", i + 1);
        if i == n {
            b.branch(&format!("q{i}"), "r", &next);
        } else {
            b.double(&format!("q{i}"), &next);
        }
    }
    for i in n + 1..=2 * n {
        b.accepting(&format!("q{i}"));
    }
    b.double(&format!("q{}", 2 * n), "r'");
    b.sink("r", false);
    b.sink("r'", false);
}

/// Testing gadget: from `{{q_i : i ∈ I}}` the test word for `P` is won iff
/// `I ⊆ P`.
fn testing_gadget(n: usize) -> Gadget {
    let mut b = Builder::default();
    b.state("q1");
    wire_testing(&mut b, n);
    b.finish("q1", &[])
}

/// State factory whose exit runs through two connector states `x1`, `x2`
/// into the testing gadget; initial state `a1`. Every antichain over
/// `{1..n}` yields a distinct state of the minimal winning-set DFA.
fn lower_bound_gadget(n: usize) -> Gadget {
    let mut b = Builder::default();
    b.state("a1");
    let aliases = wire_state_factory(&mut b, n, "x1");
    b.double("x1", "x2");
    b.double("x2", "q1");
    wire_testing(&mut b, n);
    b.finish("a1", &aliases)
}
