//! Line-oriented text format and Graphviz export.
//!
//! ```text
//! dfa 3 0
//! finals 1
//! t 0 0 1
//! t 1 1 2
//! t 2 2 2
//! ```
//!
//! The header may carry the alphabet tag `ab` (turn-order automata, `A ↦ 0`,
//! `B ↦ 1`). Lines starting with `#` are comments; `# port <name> <id>`
//! comments name gadget states. A missing transition, written `-` or left
//! out entirely, is completed with a fresh rejecting sink.
//!
//! NFAs use `nfa <state_count>`, `initials ...`, `finals ...` and
//! `t <state> <symbol> <id,id,...>` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{Alphabet, Dfa, Nfa, StateId, Symbol};
use crate::{Error, Result};

/// A DFA read from text, with the extra information the format carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDfa {
    pub dfa: Dfa,
    pub ports: BTreeMap<String, StateId>,
    /// The sink added to complete missing transitions, if any was needed.
    pub completion_sink: Option<StateId>,
}

fn err(line: usize, field: &'static str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        field,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize, field: &'static str, bound: usize) -> Result<StateId> {
    let id: StateId = tok
        .parse()
        .map_err(|_| err(line, field, format!("`{tok}` is not a state id")))?;
    if id as usize >= bound {
        return Err(err(
            line,
            field,
            format!("state {id} out of range 0..{bound}"),
        ));
    }
    Ok(id)
}

fn parse_alphabet(tag: Option<&str>, line: usize) -> Result<Alphabet> {
    match tag {
        None => Ok(Alphabet::Binary),
        Some("ab") => Ok(Alphabet::TurnOrder),
        Some(other) => Err(err(line, "alphabet", format!("unknown tag `{other}`"))),
    }
}

type Record<'a> = (usize, Vec<&'a str>);

/// Non-empty, non-comment lines with 1-based line numbers; port comments are
/// collected separately.
fn records(text: &str) -> (Vec<Record<'_>>, Vec<Record<'_>>) {
    let mut recs = Vec::new();
    let mut ports = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let toks: Vec<&str> = comment.split_whitespace().collect();
            if toks.first() == Some(&"port") {
                ports.push((i + 1, toks));
            }
            continue;
        }
        recs.push((i + 1, line.split_whitespace().collect()));
    }
    (recs, ports)
}

fn parse_header<'a>(
    recs: &[(usize, Vec<&'a str>)],
    keyword: &str,
) -> Result<(usize, Vec<&'a str>)> {
    let (line, toks) = recs
        .first()
        .ok_or_else(|| err(1, "header", format!("missing `{keyword}` header")))?;
    if toks[0] != keyword {
        return Err(err(
            *line,
            "header",
            format!("expected `{keyword}`, found `{}`", toks[0]),
        ));
    }
    Ok((*line, toks.clone()))
}

pub fn parse_dfa(text: &str) -> Result<ParsedDfa> {
    let (recs, port_lines) = records(text);
    let (hline, header) = parse_header(&recs, "dfa")?;
    if !(3..=4).contains(&header.len()) {
        return Err(err(
            hline,
            "header",
            "expected `dfa <state_count> <initial> [ab]`",
        ));
    }
    let n: usize = header[1].parse().map_err(|_| {
        err(
            hline,
            "state_count",
            format!("`{}` is not a count", header[1]),
        )
    })?;
    if n == 0 {
        return Err(err(hline, "state_count", "must be positive"));
    }
    let initial = parse_id(header[2], hline, "initial", n)?;
    let alphabet = parse_alphabet(header.get(3).copied(), hline)?;

    let mut finals: Option<Vec<StateId>> = None;
    let mut rows: Vec<Option<[Option<StateId>; 2]>> = vec![None; n];
    for (line, toks) in &recs[1..] {
        let line = *line;
        match toks[0] {
            "finals" => {
                if finals.is_some() {
                    return Err(err(line, "finals", "duplicate finals line"));
                }
                finals = Some(
                    toks[1..]
                        .iter()
                        .map(|t| parse_id(t, line, "finals", n))
                        .collect::<Result<_>>()?,
                );
            }
            "t" => {
                if toks.len() != 4 {
                    return Err(err(line, "t", "expected `t <state> <on0> <on1>`"));
                }
                let q = parse_id(toks[1], line, "state", n)?;
                if rows[q as usize].is_some() {
                    return Err(err(line, "state", format!("duplicate transitions for {q}")));
                }
                let target = |tok: &str, field| {
                    if tok == "-" {
                        Ok(None)
                    } else {
                        parse_id(tok, line, field, n).map(Some)
                    }
                };
                rows[q as usize] = Some([target(toks[2], "on0")?, target(toks[3], "on1")?]);
            }
            other => return Err(err(line, "record", format!("unknown record `{other}`"))),
        }
    }
    let finals = finals.ok_or_else(|| err(hline, "finals", "missing finals line"))?;

    let incomplete = rows
        .iter()
        .any(|r| r.is_none_or(|[a, b]| a.is_none() || b.is_none()));
    let sink = incomplete.then_some(n as StateId);
    let mut trans: Vec<[StateId; 2]> = rows
        .iter()
        .map(|r| {
            let [a, b] = r.unwrap_or([None, None]);
            [a.or(sink).unwrap(), b.or(sink).unwrap()]
        })
        .collect();
    if let Some(s) = sink {
        trans.push([s, s]);
    }

    let mut ports = BTreeMap::new();
    for (line, toks) in port_lines {
        if toks.len() != 3 {
            return Err(err(line, "port", "expected `# port <name> <id>`"));
        }
        let id = parse_id(toks[2], line, "port", n)?;
        if ports.insert(toks[1].to_string(), id).is_some() {
            return Err(err(line, "port", format!("duplicate port `{}`", toks[1])));
        }
    }

    let dfa = Dfa::new(initial, trans, finals)?.with_alphabet(alphabet);
    Ok(ParsedDfa {
        dfa,
        ports,
        completion_sink: sink,
    })
}

pub fn write_dfa(dfa: &Dfa) -> String {
    write_dfa_with_ports(dfa, &BTreeMap::new())
}

pub fn write_dfa_with_ports(dfa: &Dfa, ports: &BTreeMap<String, StateId>) -> String {
    let mut out = String::new();
    write!(out, "dfa {} {}", dfa.state_count(), dfa.initial()).unwrap();
    if let Some(tag) = dfa.alphabet().tag() {
        write!(out, " {tag}").unwrap();
    }
    out.push_str("\nfinals");
    for f in dfa.finals() {
        write!(out, " {f}").unwrap();
    }
    out.push('\n');
    for (q, [a, b]) in dfa.transitions().iter().enumerate() {
        writeln!(out, "t {q} {a} {b}").unwrap();
    }
    for (name, id) in ports {
        writeln!(out, "# port {name} {id}").unwrap();
    }
    out
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    let (recs, _) = records(text);
    let (hline, header) = parse_header(&recs, "nfa")?;
    if !(2..=3).contains(&header.len()) {
        return Err(err(hline, "header", "expected `nfa <state_count> [ab]`"));
    }
    let n: usize = header[1].parse().map_err(|_| {
        err(
            hline,
            "state_count",
            format!("`{}` is not a count", header[1]),
        )
    })?;
    let alphabet = parse_alphabet(header.get(2).copied(), hline)?;

    let mut initials: Option<Vec<StateId>> = None;
    let mut finals: Option<Vec<StateId>> = None;
    let mut edges: Vec<(StateId, Symbol, StateId)> = Vec::new();
    for (line, toks) in &recs[1..] {
        let line = *line;
        match toks[0] {
            key @ ("initials" | "finals") => {
                let field = if key == "initials" {
                    "initials"
                } else {
                    "finals"
                };
                let slot = if key == "initials" {
                    &mut initials
                } else {
                    &mut finals
                };
                if slot.is_some() {
                    return Err(err(line, field, format!("duplicate {key} line")));
                }
                *slot = Some(
                    toks[1..]
                        .iter()
                        .map(|t| parse_id(t, line, field, n))
                        .collect::<Result<_>>()?,
                );
            }
            "t" => {
                if toks.len() != 4 {
                    return Err(err(line, "t", "expected `t <state> <symbol> <id,id,...>`"));
                }
                let q = parse_id(toks[1], line, "state", n)?;
                let symbol: Symbol = match toks[2] {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(err(line, "symbol", format!("`{other}` is not 0 or 1"))),
                };
                if toks[3] != "-" {
                    for target in toks[3].split(',') {
                        edges.push((q, symbol, parse_id(target, line, "targets", n)?));
                    }
                }
            }
            other => return Err(err(line, "record", format!("unknown record `{other}`"))),
        }
    }
    let initials = initials.ok_or_else(|| err(hline, "initials", "missing initials line"))?;
    let finals = finals.ok_or_else(|| err(hline, "finals", "missing finals line"))?;
    Ok(Nfa::new(n, initials, finals, edges)?.with_alphabet(alphabet))
}

pub fn write_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    write!(out, "nfa {}", nfa.state_count()).unwrap();
    if let Some(tag) = nfa.alphabet().tag() {
        write!(out, " {tag}").unwrap();
    }
    out.push_str("\ninitials");
    for q in nfa.initials() {
        write!(out, " {q}").unwrap();
    }
    out.push_str("\nfinals");
    for q in nfa.finals() {
        write!(out, " {q}").unwrap();
    }
    out.push('\n');
    for q in 0..nfa.state_count() as StateId {
        for symbol in 0..2 {
            let targets = nfa.successors(q, symbol);
            if !targets.is_empty() {
                let list: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
                writeln!(out, "t {q} {symbol} {}", list.join(",")).unwrap();
            }
        }
    }
    out
}

/// Graphviz rendering: one node per state labelled by its id, final states
/// drawn as double circles, one labelled edge per transition.
pub fn to_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..dfa.state_count() as StateId {
        let shape = if dfa.is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {q} [label=\"{q}\", shape={shape}];").unwrap();
    }
    writeln!(out, "  __start -> {};", dfa.initial()).unwrap();
    for (q, row) in dfa.transitions().iter().enumerate() {
        for (symbol, t) in row.iter().enumerate() {
            let label = dfa.alphabet().letter(symbol as Symbol);
            writeln!(out, "  {q} -> {t} [label=\"{label}\"];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

impl std::fmt::Display for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_dfa(self))
    }
}

impl FromStr for Dfa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dfa(s).map(|p| p.dfa)
    }
}

impl std::fmt::Display for Nfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_nfa(self))
    }
}

impl FromStr for Nfa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_nfa(s)
    }
}
