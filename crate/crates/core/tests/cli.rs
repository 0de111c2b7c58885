use std::path::PathBuf;
use std::process::{Command, Output};

fn winset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_winset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("winset-cli-{}-{name}", std::process::id()))
}

#[test]
fn enumerate_two_states() {
    let o = winset(&["enumerate", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn verify_exact_one() {
    let o = winset(&["verify", "exactk", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS exactk"), "{out}");
    assert!(out.contains("measured=5"), "{out}");
}

#[test]
fn inline_oracle() {
    let o = winset(&["oracle", "--inline", "00 11"]);
    assert_eq!(stdout(&o), "AA\nBA\n");
}

#[test]
fn oracle_from_file_and_language() {
    let words = temp("words.txt");
    std::fs::write(&words, "# target\n00\n\n11\n").unwrap();
    let o = winset(&["oracle", words.to_str().unwrap()]);
    assert_eq!(stdout(&o), "AA\nBA\n");

    let dfa = temp("exact1.txt");
    std::fs::write(&dfa, stdout(&winset(&["exactk", "1"]))).unwrap();
    let o = winset(&["oracle", "--language", dfa.to_str().unwrap(), "--len", "2"]);
    // exactly one 1 in two letters: Alice needs the last move
    assert_eq!(stdout(&o), "AA\nBA\n");
    std::fs::remove_file(words).unwrap();
    std::fs::remove_file(dfa).unwrap();
}

#[test]
fn build_reports_stats_and_writes_dot() {
    let dfa = temp("exact2.txt");
    let dot = temp("exact2.dot");
    std::fs::write(&dfa, stdout(&winset(&["exactk", "2"]))).unwrap();
    let o = winset(&[
        "build",
        dfa.to_str().unwrap(),
        "--dot-out",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# winning-set states 11"), "{out}");
    assert!(out.contains("dfa 11 0 ab"), "{out}");
    assert!(std::fs::read_to_string(&dot)
        .unwrap()
        .starts_with("digraph"));
    std::fs::remove_file(dfa).unwrap();
    std::fs::remove_file(dot).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(winset(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(winset(&["dedekind", "9"]).status.code(), Some(2));
    assert_eq!(
        winset(&["build", "/nonexistent/dfa.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(winset(&["enumerate", "5"]).status.code(), Some(2));

    let dfa = temp("exact3.txt");
    std::fs::write(&dfa, stdout(&winset(&["exactk", "3"]))).unwrap();
    let o = winset(&["build", dfa.to_str().unwrap(), "--max-game-states", "3"]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::remove_file(dfa).unwrap();
}

#[test]
fn reports_are_reproducible() {
    let args = [
        "verify",
        "core",
        "2",
        "--format",
        "json",
        "--no-timing",
        "--jobs",
        "2",
    ];
    let a = winset(&args);
    let b = winset(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["config"]["command"]["claim"], "core");
    assert!(v["version"].is_string());
}

#[test]
fn csv_report() {
    let o = winset(&["verify", "dyck", "6", "--format", "csv", "--no-timing"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("# winset"));
    assert_eq!(
        lines.next(),
        Some("claim,params,measured,expected,pass,millis")
    );
    assert!(lines.next().unwrap().starts_with("dyck,"));
}

#[test]
fn gadget_ports() {
    let out = stdout(&winset(&["gadget", "testing", "1"]));
    assert!(out.starts_with("dfa 4 0\n"));
    assert!(out.contains("# port q1 0\n"));
}
