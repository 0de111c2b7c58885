//! Command surface of the `winset` binary.
//!
//! [`run`] performs a parsed command and returns what should go to standard
//! output together with the pass/fail outcome; [`exit_code`] maps library
//! errors to process exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    dedekind, verify_bounded_bound, verify_chain_bound, verify_chain_congruence,
    verify_core_properties, verify_dyck, verify_enumerate, verify_enumerate_with, verify_exact_k,
    verify_gadgets, verify_lower_bound, verify_periodicity, ChainCorpus, Corpus, Envelope, Report,
    VerifyOptions,
};
use crate::automata::format::{parse_dfa, to_dot, write_dfa, write_dfa_with_ports};
use crate::automata::{Dfa, StateId};
use crate::gadgets::{
    build_gadget, chain_dfa, dyck_dfa, exact_k_dfa, exact_k_symbolic_wdfa, GadgetKind,
};
use crate::winset::{
    oracle_winning_set, winning_dfa_with, BuildOptions, TargetSet, TurnWord,
    DEFAULT_MAX_GAME_STATES,
};
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "winset",
    version,
    about = "Winning-set automata for word-construction games"
)]
pub struct Cli {
    /// Cap on explored game states per winning-set construction.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GAME_STATES)]
    pub max_game_states: usize,
    /// Enable the long-running parameter ranges.
    #[arg(long, global = true)]
    pub heavy: bool,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the produced automaton as Graphviz DOT to this path.
    #[arg(long, global = true)]
    pub dot_out: Option<PathBuf>,
    /// Report 0 ms runtimes so that reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// Build the minimal winning-set DFA of a DFA file.
    Build { file: PathBuf },
    /// Brute-force winning set of a finite target set.
    Oracle {
        /// Target words, one per line.
        #[arg(conflicts_with_all = ["inline", "language"])]
        file: Option<PathBuf>,
        /// Space-separated target words.
        #[arg(long, conflicts_with = "language")]
        inline: Option<String>,
        /// Take the words of length `--len` accepted by this DFA.
        #[arg(long, requires = "len")]
        language: Option<PathBuf>,
        #[arg(long)]
        len: Option<usize>,
    },
    /// Emit a gadget DFA with its named ports.
    Gadget {
        #[arg(value_parser = parse_kind)]
        #[serde(serialize_with = "serialize_display")]
        kind: GadgetKind,
        n: usize,
    },
    /// Emit the chain automaton with an `m`-state tail and a `p`-cycle.
    Chain {
        m: usize,
        p: usize,
        finals: Vec<StateId>,
    },
    /// Emit the DFA of words with exactly `n` ones.
    Exactk {
        n: usize,
        /// Emit the winning-set DFA built on triples instead.
        #[arg(long, conflicts_with = "winning")]
        symbolic: bool,
        /// Emit the winning-set DFA built by the generic construction.
        #[arg(long)]
        winning: bool,
    },
    /// Emit the Dyck DFA truncated at the given balance.
    Dyck { max_balance: usize },
    /// Largest minimal winning-set DFA over all DFAs with `n` states.
    Enumerate {
        n: usize,
        /// Record progress here and resume from it if present.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Check a claim and report.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Main size parameter of the claim; each claim has its own default.
        param: Option<usize>,
    },
    /// Number of antichains of subsets of an `n`-set.
    Dedekind { n: usize },
    /// Convert a DFA file to Graphviz DOT.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Core,
    Exactk,
    Dyck,
    LowerBound,
    ChainBound,
    ChainCongruence,
    BoundedBound,
    Periodicity,
    Gadgets,
    Enumerate,
    All,
}

fn parse_kind(s: &str) -> std::result::Result<GadgetKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Standard output of a command and whether its claims held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, pass: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// Exit code for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } | Error::TooManyStates { .. } | Error::Overflow(_) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn read_dfa(path: &Path) -> Result<Dfa> {
    Ok(parse_dfa(&read(path)?)?.dfa)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if cli.max_game_states == 0 || cli.jobs == 0 {
        return Err(Error::InvalidArgument(
            "--max-game-states and --jobs must be positive".into(),
        ));
    }
    let opts = VerifyOptions {
        max_game_states: cli.max_game_states,
        seed: cli.seed,
        jobs: cli.jobs,
    };
    match &cli.command {
        Command::Build { file } => {
            let parsed = parse_dfa(&read(file)?)?;
            let input = parsed.dfa;
            let built = winning_dfa_with(
                &input,
                &BuildOptions {
                    max_game_states: cli.max_game_states,
                },
            )?;
            let stats = json!({
                "input_states": input.state_count(),
                "explored_game_states": built.explored,
                "winning_states": built.dfa.state_count(),
                "completion_sink": parsed.completion_sink,
            });
            let completion = match parsed.completion_sink {
                Some(q) => format!("# completed with rejecting sink {q}\n"),
                None => String::new(),
            };
            let text = format!(
                "{completion}# input states {}\n# explored game states {}\n# winning-set states {}\n{}",
                input.state_count(),
                built.explored,
                built.dfa.state_count(),
                write_dfa(&built.dfa)
            );
            emit_automaton(cli, &built.dfa, text, stats)
        }
        Command::Oracle {
            file,
            inline,
            language,
            len,
        } => {
            let target = match (file, inline, language) {
                (Some(path), None, None) => {
                    let text = read(path)?;
                    TargetSet::parse_words(
                        text.lines()
                            .map(str::trim)
                            .filter(|l| !l.is_empty() && !l.starts_with('#')),
                    )?
                }
                (None, Some(words), None) => TargetSet::parse_words(words.split_whitespace())?,
                (None, None, Some(path)) => {
                    let len =
                        len.ok_or_else(|| Error::InvalidArgument("--language needs --len".into()))?;
                    TargetSet::from_dfa(&read_dfa(path)?, len)
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "oracle takes a target file, --inline words or --language with --len"
                            .into(),
                    ))
                }
            };
            let won: Vec<TurnWord> = oracle_winning_set(&target).into_iter().collect();
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&won).expect("words serialize");
                    s.push('\n');
                    s
                }
                _ => won.iter().map(|w| format!("{w}\n")).collect(),
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Gadget { kind, n } => {
            let g = build_gadget(*kind, *n)?;
            let text = write_dfa_with_ports(&g.dfa, &g.ports);
            let stats = json!({ "kind": kind.to_string(), "n": n, "states": g.dfa.state_count(), "ports": g.ports });
            emit_automaton(cli, &g.dfa, text, stats)
        }
        Command::Chain { m, p, finals } => {
            let d = chain_dfa(*m, *p, finals)?;
            let stats = json!({ "m": m, "p": p, "finals": finals });
            emit_automaton(cli, &d, write_dfa(&d), stats)
        }
        Command::Exactk {
            n,
            symbolic,
            winning,
        } => {
            let d = if *symbolic {
                exact_k_symbolic_wdfa(*n)
            } else if *winning {
                winning_dfa_with(
                    &exact_k_dfa(*n),
                    &BuildOptions {
                        max_game_states: cli.max_game_states,
                    },
                )?
                .dfa
            } else {
                exact_k_dfa(*n)
            };
            let stats = json!({ "n": n, "states": d.state_count() });
            emit_automaton(cli, &d, write_dfa(&d), stats)
        }
        Command::Dyck { max_balance } => {
            let d = dyck_dfa(*max_balance)?;
            let stats = json!({ "max_balance": max_balance, "states": d.state_count() });
            emit_automaton(cli, &d, write_dfa(&d), stats)
        }
        Command::Enumerate { n, checkpoint } => {
            if *n == 5 && !cli.heavy {
                return Err(Error::InvalidArgument(
                    "enumerating 5-state DFAs takes hours; pass --heavy".into(),
                ));
            }
            let report = verify_enumerate_with(*n, &opts, checkpoint.as_deref())?;
            match cli.format {
                Format::Text => {
                    let pass = report.pass;
                    Ok(Outcome {
                        stdout: format!("{}\n", report.measured),
                        pass,
                    })
                }
                _ => emit_reports(cli, vec![report]),
            }
        }
        Command::Verify { claim, param } => {
            let reports = verify(*claim, *param, cli.heavy, &opts)?;
            emit_reports(cli, reports)
        }
        Command::Dedekind { n } => {
            let value = dedekind(*n)?;
            let stdout = match cli.format {
                Format::Json => format!("{}\n", json!({ "n": n, "value": value })),
                Format::Csv => format!("n,value\n{n},{value}\n"),
                Format::Text => format!("{value}\n"),
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Dot { file } => {
            let d = read_dfa(file)?;
            let dot = to_dot(&d);
            if let Some(path) = &cli.dot_out {
                write(path, &dot)?;
            }
            Ok(Outcome::ok(dot))
        }
    }
}

/// Prints an automaton in the text format (or wrapped in JSON with its
/// statistics) and writes the DOT file when requested.
fn emit_automaton(cli: &Cli, dfa: &Dfa, text: String, stats: serde_json::Value) -> Result<Outcome> {
    if let Some(path) = &cli.dot_out {
        write(path, &to_dot(dfa))?;
    }
    let stdout = match cli.format {
        Format::Text => text,
        Format::Json => {
            let mut v = stats;
            v["dfa"] = json!(text);
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("json value serializes")
            )
        }
        Format::Csv => {
            return Err(Error::InvalidArgument(
                "automata are emitted as text or json, not csv".into(),
            ))
        }
    };
    Ok(Outcome::ok(stdout))
}

fn emit_reports(cli: &Cli, mut reports: Vec<Report>) -> Result<Outcome> {
    if cli.no_timing {
        for r in &mut reports {
            r.millis = 0;
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let config = serde_json::to_value(cli).expect("configuration serializes");
    let envelope = Envelope::new(cli.seed, config, reports);
    let stdout = match cli.format {
        Format::Text => envelope.to_text(),
        Format::Json => envelope.to_json(),
        Format::Csv => envelope.to_csv()?,
    };
    Ok(Outcome { stdout, pass })
}

/// Chain automata up to 10 states exhaustively, plus 100 seeded chains each
/// of 11 and 12 states.
pub fn default_chain_corpus(seed: u64) -> ChainCorpus {
    ChainCorpus::Sampled {
        exhaustive_max: 10,
        max_states: 12,
        per_size: 100,
        seed,
    }
}

/// Runs one claim, or all of them, with the defaults below when `param` is
/// absent.
///
/// | claim | parameter | default | `--heavy` |
/// |---|---|---|---|
/// | core | largest exhaustive DFA size | 3 | |
/// | exactk | `n` (otherwise 1..=8) | 1..=8 | |
/// | dyck | largest even length | 14 | |
/// | lower-bound | `n` | 1 | 1 and 2 |
/// | chain-bound | largest chain size | 12 | |
/// | chain-congruence | largest chain size | all ≤ 10, 100 seeded each of 11 and 12 | all ≤ 12 |
/// | bounded-bound, periodicity | corpus size (≤ 8 states) | 200 | |
/// | gadgets | largest `n` | 3 | |
/// | enumerate | largest `n` (1..=n) | 3 | 4 |
pub fn verify(
    claim: Claim,
    param: Option<usize>,
    heavy: bool,
    opts: &VerifyOptions,
) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    match claim {
        Claim::Core => {
            let max_states = param.unwrap_or(3);
            out.push(verify_core_properties(
                &Corpus::Exhaustive { max_states },
                opts,
            )?);
            let random = Corpus::Random {
                seed: opts.seed,
                count: 500,
                min_states: 4,
                max_states: 6,
            };
            out.push(verify_core_properties(&random, opts)?);
        }
        Claim::Exactk => match param {
            Some(n) => out.push(verify_exact_k(n, opts)?),
            None => {
                for n in 1..=8 {
                    out.push(verify_exact_k(n, opts)?);
                }
            }
        },
        Claim::Dyck => out.push(verify_dyck(param.unwrap_or(14), opts)?),
        Claim::LowerBound => match param {
            Some(n) => out.push(verify_lower_bound(n, opts)?),
            None => {
                out.push(verify_lower_bound(1, opts)?);
                if heavy {
                    out.push(verify_lower_bound(2, opts)?);
                }
            }
        },
        Claim::ChainBound => out.push(verify_chain_bound(param.unwrap_or(12), opts)?),
        Claim::ChainCongruence => {
            let corpus = match param {
                Some(max_states) => ChainCorpus::Exhaustive { max_states },
                None if heavy => ChainCorpus::Exhaustive { max_states: 12 },
                None => default_chain_corpus(opts.seed),
            };
            out.push(verify_chain_congruence(&corpus, opts)?);
        }
        Claim::BoundedBound => out.push(verify_bounded_bound(param.unwrap_or(200), 8, opts)?),
        Claim::Periodicity => out.push(verify_periodicity(param.unwrap_or(200), 8, opts)?),
        Claim::Gadgets => out.push(verify_gadgets(param.unwrap_or(3), opts)?),
        Claim::Enumerate => {
            let top = param.unwrap_or(if heavy { 4 } else { 3 });
            if top >= 5 && !heavy {
                return Err(Error::InvalidArgument(
                    "enumerating 5-state DFAs takes hours; pass --heavy".into(),
                ));
            }
            for n in 1..=top {
                out.push(verify_enumerate(n, opts)?);
            }
        }
        Claim::All => {
            for c in [
                Claim::Core,
                Claim::Exactk,
                Claim::Dyck,
                Claim::LowerBound,
                Claim::ChainBound,
                Claim::ChainCongruence,
                Claim::BoundedBound,
                Claim::Periodicity,
                Claim::Gadgets,
                Claim::Enumerate,
            ] {
                out.extend(verify(c, None, heavy, opts)?);
            }
        }
    }
    Ok(out)
}
