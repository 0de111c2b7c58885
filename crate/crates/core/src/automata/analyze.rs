use std::collections::VecDeque;

use serde::Serialize;

use super::{Dfa, StateId};

/// Cycle structure of the reachable part of a DFA's transition graph.
///
/// The graph is taken as a simple graph: parallel edges and the two
/// self-loops of a sink count once, so a sink is a cycle of length 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    /// Lengths of the simple cycles, ordered by their smallest state id.
    /// Only cycles that form a whole strongly connected component are listed.
    pub cycle_lengths: Vec<usize>,
    /// Reachable states on no cycle.
    pub acyclic_count: usize,
    /// False when some strongly connected component is not a simple cycle.
    pub disjoint: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub cycles: CycleStructure,
    /// Length of a shortest path from each state to a final state.
    pub distance_to_final: Vec<Option<u32>>,
}

pub fn analyze(dfa: &Dfa) -> Analysis {
    Analysis {
        cycles: cycle_structure(dfa),
        distance_to_final: distances(dfa),
    }
}

fn distances(dfa: &Dfa) -> Vec<Option<u32>> {
    let n = dfa.state_count();
    let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (q, row) in dfa.transitions().iter().enumerate() {
        for &t in row {
            rev[t as usize].push(q as StateId);
        }
    }
    let mut dist = vec![None; n];
    let mut queue: VecDeque<StateId> = dfa.finals().collect();
    for &f in &queue {
        dist[f as usize] = Some(0);
    }
    while let Some(q) = queue.pop_front() {
        let d = dist[q as usize].unwrap();
        for &p in &rev[q as usize] {
            if dist[p as usize].is_none() {
                dist[p as usize] = Some(d + 1);
                queue.push_back(p);
            }
        }
    }
    dist
}

fn successors(dfa: &Dfa, q: usize) -> impl Iterator<Item = usize> {
    let [a, b] = dfa.transitions()[q];
    let second = (a != b).then_some(b as usize);
    std::iter::once(a as usize).chain(second)
}

fn cycle_structure(dfa: &Dfa) -> CycleStructure {
    let n = dfa.state_count();
    let reachable = {
        let mut seen = vec![false; n];
        let mut stack = vec![dfa.initial() as usize];
        seen[dfa.initial() as usize] = true;
        while let Some(q) = stack.pop() {
            for t in successors(dfa, q) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    };
    let comp = tarjan(dfa, &reachable);

    let mut members: Vec<Vec<usize>> = Vec::new();
    for (q, c) in comp.iter().enumerate() {
        if let Some(c) = *c {
            if members.len() <= c {
                members.resize(c + 1, Vec::new());
            }
            members[c].push(q);
        }
    }
    members.sort_by_key(|m| m[0]);

    let mut out = CycleStructure {
        cycle_lengths: Vec::new(),
        acyclic_count: 0,
        disjoint: true,
    };
    for m in &members {
        let c = comp[m[0]];
        let internal = |q: usize| successors(dfa, q).filter(|&t| comp[t] == c).count();
        if m.len() == 1 && internal(m[0]) == 0 {
            out.acyclic_count += 1;
        } else if m.iter().all(|&q| internal(q) == 1) {
            out.cycle_lengths.push(m.len());
        } else {
            out.disjoint = false;
        }
    }
    out
}

/// Strongly connected components of the reachable states (iterative Tarjan).
fn tarjan(dfa: &Dfa, reachable: &[bool]) -> Vec<Option<usize>> {
    let n = dfa.state_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![None; n];
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if !reachable[root] || index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, Vec<usize>)> = Vec::new();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, successors(dfa, root).collect()));
        while let Some((v, pending)) = call.last_mut() {
            let v = *v;
            if let Some(w) = pending.pop() {
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, successors(dfa, w).collect()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _)) = call.last() {
                    low[*parent] = low[*parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = Some(next_comp);
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}
