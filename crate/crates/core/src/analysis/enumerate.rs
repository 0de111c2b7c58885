use std::collections::HashMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{minimize, Dfa};
use crate::winset::{winning_dfa_with, BuildOptions};
use crate::{Error, Result};

use super::corpus::{table, table_count};

/// Largest minimal winning-set DFA over all DFAs of one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub states: usize,
    pub max_size: usize,
    /// First DFA reaching `max_size` in enumeration order.
    #[serde(serialize_with = "serialize_display")]
    pub witness: Dfa,
    pub automata: u64,
}

fn serialize_display<S: serde::Serializer>(d: &Dfa, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(d)
}

/// Largest outcome so far as `(size, index)`; ties keep the lower index.
fn better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// Tables per checkpoint block.
const BLOCK: u64 = 1 << 16;

/// Every complete binary DFA on `n` states with initial state 0 (all
/// transition tables, every final set; no isomorphism reduction), reporting
/// the largest minimal winning-set DFA and the first DFA attaining it.
///
/// Winning sets depend only on the language, so results are cached per
/// minimal DFA. Work is split over `jobs` threads; the outcome does not
/// depend on `jobs`.
pub fn sc_enumerate(n: usize, jobs: usize, max_game_states: usize) -> Result<Enumeration> {
    sc_enumerate_with(n, jobs, max_game_states, None)
}

/// [`sc_enumerate`] that records progress in `checkpoint` after every block
/// of tables and resumes from it when the file already exists.
pub fn sc_enumerate_with(
    n: usize,
    jobs: usize,
    max_game_states: usize,
    checkpoint: Option<&Path>,
) -> Result<Enumeration> {
    if !(1..=5).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "enumeration supports 1 to 5 states, got {n}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let options = BuildOptions { max_game_states };
    let masks = 1u64 << n;
    let tables = table_count(n);

    let per_table = |cache: &mut HashMap<Dfa, usize>, t: u64| -> Result<(usize, u64)> {
        let trans = table(n, t);
        let mut best = (0, u64::MAX);
        for mask in 0..masks {
            let finals = (0..n as u32).filter(|q| mask >> q & 1 == 1);
            let dfa = Dfa::new(0, trans.clone(), finals)?;
            let key = minimize(&dfa);
            let size = match cache.get(&key) {
                Some(&s) => s,
                None => {
                    let s = winning_dfa_with(&key, &options)?.dfa.state_count();
                    cache.insert(key, s);
                    s
                }
            };
            best = better(best, (size, t * masks + mask));
        }
        Ok(best)
    };

    let (mut next, mut best) = match checkpoint {
        Some(path) if path.exists() => read_checkpoint(path, n)?,
        _ => (0, (0, u64::MAX)),
    };
    while next < tables {
        let end = (next + BLOCK).min(tables);
        let results: Vec<Result<(usize, u64)>> = pool.install(|| {
            (next..end)
                .collect::<Vec<_>>()
                .par_chunks(1024)
                .map(|chunk| {
                    let mut cache = HashMap::new();
                    let mut best = (0, u64::MAX);
                    for &t in chunk {
                        best = better(best, per_table(&mut cache, t)?);
                    }
                    Ok(best)
                })
                .collect()
        });
        for r in results {
            best = better(best, r?);
        }
        next = end;
        if let Some(path) = checkpoint {
            write_checkpoint(path, n, next, best)?;
        }
    }

    let (size, index) = best;
    let trans = table(n, index / masks);
    let mask = index % masks;
    let witness = Dfa::new(0, trans, (0..n as u32).filter(|q| mask >> q & 1 == 1))?;
    Ok(Enumeration {
        states: n,
        max_size: size,
        witness,
        automata: tables * masks,
    })
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Checkpoint line: `enumerate <n> <next table> <best size> <best index>`.
fn write_checkpoint(path: &Path, n: usize, next: u64, best: (usize, u64)) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(
        &tmp,
        format!("enumerate {n} {next} {} {}\n", best.0, best.1),
    )
    .and_then(|_| fs::rename(&tmp, path))
    .map_err(|e| io_error(path, e))
}

fn read_checkpoint(path: &Path, n: usize) -> Result<(u64, (usize, u64))> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = || io_error(path, "malformed enumeration checkpoint");
    match fields.as_slice() {
        ["enumerate", states, next, size, index] => {
            if states.parse::<usize>().map_err(|_| bad())? != n {
                return Err(io_error(path, format!("checkpoint is not for {n} states")));
            }
            Ok((
                next.parse().map_err(|_| bad())?,
                (
                    size.parse().map_err(|_| bad())?,
                    index.parse().map_err(|_| bad())?,
                ),
            ))
        }
        _ => Err(bad()),
    }
}
