use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::Result;

/// Counterexamples kept per check.
const MAX_COUNTEREXAMPLES: usize = 5;

/// One named sub-check of a claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Offending inputs, verbatim.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

/// Outcome of verifying one claim. `pass` is true iff every check passed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub measured: Value,
    pub expected: Value,
    pub pass: bool,
    pub millis: u64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Accumulates checks for a claim and stamps the runtime on completion.
pub struct ReportBuilder {
    report: Report,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(claim: &str) -> Self {
        ReportBuilder {
            report: Report {
                claim: claim.to_string(),
                params: BTreeMap::new(),
                measured: Value::Null,
                expected: Value::Null,
                pass: true,
                millis: 0,
                checks: Vec::new(),
                notes: Vec::new(),
            },
            start: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.report.params.insert(key.to_string(), to_value(value));
        self
    }

    pub fn measured(&mut self, value: impl Serialize) -> &mut Self {
        self.report.measured = to_value(value);
        self
    }

    pub fn expected(&mut self, value: impl Serialize) -> &mut Self {
        self.report.expected = to_value(value);
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) -> &mut Self {
        self.check_with(name, pass, detail, Vec::new())
    }

    /// Records a check; only the first few counterexamples are kept.
    pub fn check_with(
        &mut self,
        name: &str,
        pass: bool,
        detail: impl Into<String>,
        mut counterexamples: Vec<String>,
    ) -> &mut Self {
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self.report.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
            counterexamples,
        });
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.report.notes.push(note.into());
        self
    }

    pub fn finish(&mut self) -> Report {
        let mut r = self.report.clone();
        r.pass = r.checks.iter().all(|c| c.pass);
        r.millis = self.start.elapsed().as_millis() as u64;
        r
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}

/// Output envelope: tool version, configuration echo and seed around the
/// reports.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub config: Value,
    pub reports: Vec<Report>,
}

impl Envelope {
    pub fn new(seed: u64, config: Value, reports: Vec<Report>) -> Self {
        Envelope {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            seed,
            config,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    /// Flat CSV: `claim,params,measured,expected,pass,millis`, preceded by
    /// `#` comment lines carrying the envelope fields.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!(
            "# {} {} seed={} config={}\n",
            self.tool, self.version, self.seed, self.config
        );
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["claim", "params", "measured", "expected", "pass", "millis"])
            .map_err(csv_error)?;
        for r in &self.reports {
            let params = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                r.claim.as_str(),
                &params,
                &plain(&r.measured),
                &plain(&r.expected),
                if r.pass { "true" } else { "false" },
                &r.millis.to_string(),
            ])
            .map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| csv_error(e.into_error()))?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
        Ok(out)
    }

    /// Human-readable summary, one block per report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let params = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(
                out,
                "{} {} [{}] measured={} expected={} ({} ms)",
                if r.pass { "PASS" } else { "FAIL" },
                r.claim,
                params,
                plain(&r.measured),
                plain(&r.expected),
                r.millis
            )
            .unwrap();
            for c in &r.checks {
                writeln!(
                    out,
                    "  {} {}: {}",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
                for ce in &c.counterexamples {
                    writeln!(out, "      counterexample: {}", ce.replace('\n', " | ")).unwrap();
                }
            }
            for n in &r.notes {
                writeln!(out, "  note: {n}").unwrap();
            }
        }
        out
    }
}

fn csv_error(e: impl std::fmt::Display) -> crate::Error {
    crate::Error::InvalidArgument(format!("csv output: {e}"))
}

/// Strings without JSON quotes, everything else as compact JSON.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut b = ReportBuilder::new("exactk");
        b.param("n", 1).measured(5).expected(5);
        b.check("size", true, "5 states");
        b.finish()
    }

    #[test]
    fn pass_follows_checks() {
        assert!(sample().pass);
        let mut b = ReportBuilder::new("x");
        b.check("a", true, "").check("b", false, "");
        assert!(!b.finish().pass);
    }

    #[test]
    fn csv_has_one_row_per_report() {
        let mut r = sample();
        r.millis = 0;
        let env = Envelope::new(7, serde_json::json!({"jobs": 1}), vec![r]);
        let csv = env.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# winset"));
        assert_eq!(lines[1], "claim,params,measured,expected,pass,millis");
        assert_eq!(lines[2], "exactk,n=1,5,5,true,0");
    }

    #[test]
    fn json_embeds_seed_and_version() {
        let env = Envelope::new(7, serde_json::json!({}), vec![sample()]);
        let v: Value = serde_json::from_str(&env.to_json()).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(v["reports"][0]["claim"], "exactk");
    }
}
