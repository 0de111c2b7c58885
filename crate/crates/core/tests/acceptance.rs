//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`). Pass `--heavy` after `--` or
//! set `WINSET_HEAVY=1` to include the long-running pieces (5-state
//! enumeration, every chain automaton up to 12 states).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use winset::analysis::{
    verify_bounded_bound, verify_chain_bound, verify_chain_congruence, verify_core_properties,
    verify_dyck, verify_enumerate, verify_exact_k, verify_gadgets, verify_lower_bound,
    verify_periodicity, ChainCorpus, Corpus, Report, VerifyOptions,
};
use winset::cli::default_chain_corpus;

struct Line {
    pass: bool,
    detail: String,
}

fn check_pass(r: &Report, name: &str) -> bool {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("{} has no check {name}", r.claim))
        .pass
}

fn failures(reports: &[&Report]) -> String {
    let mut out = Vec::new();
    for r in reports {
        for c in r.checks.iter().filter(|c| !c.pass) {
            out.push(format!(
                "{}/{}: {} {:?}",
                r.claim, c.name, c.detail, c.counterexamples
            ));
        }
    }
    out.join("; ")
}

/// `n³/6 + n² + 11n/6 + 2`, in integers.
fn exact_k_formula(n: u64) -> u64 {
    (n * n * n + 6 * n * n + 11 * n + 12) / 6
}

fn main() -> ExitCode {
    let heavy = std::env::args().any(|a| a == "--heavy")
        || std::env::var("WINSET_HEAVY").is_ok_and(|v| v == "1");
    let opts = VerifyOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..VerifyOptions::default()
    };
    let mut lines: Vec<(&str, Line)> = Vec::new();

    // 1. state-complexity sequence
    {
        let start = Instant::now();
        let small: Vec<Report> = (1..=3)
            .map(|n| verify_enumerate(n, &opts).unwrap())
            .collect();
        let small_time = start.elapsed();
        let measured: Vec<String> = small.iter().map(|r| r.measured.to_string()).collect();
        let four = verify_enumerate(4, &opts).unwrap();
        let mut pass = measured == ["1", "4", "16"]
            && small_time < Duration::from_secs(120)
            && four.measured == 62;
        let mut detail = format!(
            "enumerate 1..3 = {} in {:.1?}; enumerate 4 = {} in {} ms",
            measured.join(","),
            small_time,
            four.measured,
            four.millis
        );
        if heavy {
            let five = verify_enumerate(5, &opts).unwrap();
            pass &= five.measured == 517;
            detail += &format!("; enumerate 5 = {} in {} ms", five.measured, five.millis);
        } else {
            detail += "; enumerate 5 skipped (needs --heavy)";
        }
        lines.push(("1 state-complexity sequence", Line { pass, detail }));
    }

    // 2-4. share the core corpora
    {
        let exhaustive =
            verify_core_properties(&Corpus::Exhaustive { max_states: 3 }, &opts).unwrap();
        let random = verify_core_properties(
            &Corpus::Random {
                seed: 42,
                count: 500,
                min_states: 4,
                max_states: 6,
            },
            &opts,
        )
        .unwrap();
        let both = [&exhaustive, &random];
        let automata = |r: &Report| r.measured["automata"].clone();
        let line = |names: &[&str], reports: &[&Report], what: String| {
            let pass = names
                .iter()
                .all(|n| reports.iter().all(|r| check_pass(r, n)));
            let detail = if pass { what } else { failures(reports) };
            Line { pass, detail }
        };
        lines.push((
            "2 dedekind bound",
            line(
                &["dedekind-bound"],
                &[&exhaustive],
                format!(
                    "{} DFAs with 1-3 states, no size above D(n)",
                    automata(&exhaustive)
                ),
            ),
        ));
        lines.push((
            "3 oracle equivalence",
            line(
                &["oracle-equivalence"],
                &both,
                format!(
                    "{} exhaustive + {} seeded DFAs agree on all turn words up to length 8",
                    automata(&exhaustive),
                    automata(&random)
                ),
            ),
        ));
        lines.push((
            "4 cardinality and downward closure",
            line(
                &["cardinality", "downward-closure"],
                &both,
                "counts equal and closure holds up to length 10 on both corpora".into(),
            ),
        ));
    }

    // 5-6. exact-k
    {
        let reports: Vec<Report> = (1..=8).map(|n| verify_exact_k(n, &opts).unwrap()).collect();
        let sizes: Vec<u64> = reports
            .iter()
            .map(|r| r.measured.as_u64().unwrap())
            .collect();
        let expected: Vec<u64> = (1..=8).map(exact_k_formula).collect();
        assert_eq!(expected, [5, 11, 21, 36, 57, 85, 121, 166]);
        let refs: Vec<&Report> = reports.iter().collect();
        let pass = sizes == expected
            && reports
                .iter()
                .all(|r| check_pass(r, "size") && check_pass(r, "suffix-characterization"));
        lines.push((
            "5 exact-k closed form",
            Line {
                pass,
                detail: if pass {
                    format!("sizes {sizes:?}, characterization exhaustive to min(3n+2, 14)")
                } else {
                    format!("sizes {sizes:?} vs {expected:?}; {}", failures(&refs))
                },
            },
        ));
        let pass = reports[..5]
            .iter()
            .all(|r| check_pass(r, "symbolic-equivalent"));
        lines.push((
            "6 symbolic/generic cross-check",
            Line {
                pass,
                detail: if pass {
                    "triple automaton equivalent to the generic pipeline for n <= 5".into()
                } else {
                    failures(&refs[..5])
                },
            },
        ));
    }

    // 7. gadget lemmas
    {
        let r = verify_gadgets(3, &opts).unwrap();
        let pass = ["subset-factory", "testing-acceptance", "testing-death"]
            .iter()
            .all(|n| check_pass(&r, n));
        let detail = if pass {
            "subset factory, testing acceptance and death for n <= 3".into()
        } else {
            failures(&[&r])
        };
        lines.push(("7 gadget lemmas", Line { pass, detail }));
    }

    // 8. lower bound
    {
        let reports: Vec<Report> = [1, 2]
            .iter()
            .map(|&n| verify_lower_bound(n, &opts).unwrap())
            .collect();
        let pass = reports.iter().all(|r| r.pass);
        let detail = if pass {
            reports
                .iter()
                .map(|r| {
                    format!(
                        "n={}: {} states, all pairs separated",
                        r.params["n"], r.measured
                    )
                })
                .collect::<Vec<_>>()
                .join("; ")
        } else {
            failures(&reports.iter().collect::<Vec<_>>())
        };
        lines.push(("8 lower bound", Line { pass, detail }));
    }

    // 9. chain automata
    {
        let corpus = if heavy {
            ChainCorpus::Exhaustive { max_states: 12 }
        } else {
            default_chain_corpus(42)
        };
        let congruence = verify_chain_congruence(&corpus, &opts).unwrap();
        let bound = verify_chain_bound(12, &opts).unwrap();
        let pass = congruence.pass && bound.pass;
        let detail = if pass {
            format!(
                "{} chain automata congruent ({}); 1-bounded largest sizes {}",
                congruence.measured["automata"],
                if heavy {
                    "all up to 12 states"
                } else {
                    "all up to 10 states, 100 seeded each of 11 and 12; all up to 12 with --heavy"
                },
                bound.measured["largest_by_states"]
            )
        } else {
            failures(&[&congruence, &bound])
        };
        lines.push(("9 chain automata", Line { pass, detail }));
    }

    // 10. bounded languages
    {
        let bound = verify_bounded_bound(200, 8, &opts).unwrap();
        let periodicity = verify_periodicity(200, 8, &opts).unwrap();
        let pass = bound.pass && periodicity.pass;
        let detail = if pass {
            "200 seeded DFAs within the size bound and periodicity caps".into()
        } else {
            failures(&[&bound, &periodicity])
        };
        lines.push((
            "10 bounded-language bound and periodicity",
            Line { pass, detail },
        ));
    }

    // 11. Dyck
    {
        let r = verify_dyck(14, &opts).unwrap();
        let pass = r.pass && r.millis < 300_000;
        let detail = if r.pass {
            format!("{} in {} ms", r.measured, r.millis)
        } else {
            failures(&[&r])
        };
        lines.push(("11 dyck characterization", Line { pass, detail }));
    }

    let mut all = true;
    for (name, line) in &lines {
        println!(
            "criterion {name}: {} ({})",
            if line.pass { "PASS" } else { "FAIL" },
            line.detail
        );
        all &= line.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
