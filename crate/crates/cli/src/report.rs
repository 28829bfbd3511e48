use std::fmt::Write as _;
use std::time::Duration;

use qhankel_core::IntPoly;
use serde::Serialize;

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skip",
        }
    }
}

/// One checked instance: which identity, at which parameters, and the
/// residual when it failed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Case {
    pub check: String,
    pub params: Vec<(String, i64)>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn new(check: &str, params: &[(&str, i64)]) -> Self {
        Case {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }

    /// Pass iff `residual` is zero; otherwise fail with it as the witness.
    pub fn residual(mut self, residual: &IntPoly) -> Self {
        if !residual.is_zero() {
            self.status = Status::Fail;
            self.witness = Some(residual.to_string());
        }
        self
    }

    /// Pass iff `left == right`; the witness is `left - right`.
    pub fn equal(self, left: &IntPoly, right: &IntPoly) -> Self {
        self.residual(&(left - right))
    }

    pub fn holds(mut self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if !ok {
            self.status = Status::Fail;
            self.witness = Some(witness());
        }
        self
    }

    pub fn fail(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witness = Some(why.into());
        self
    }

    pub fn skip(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(why.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: Vec<Case>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    /// Cases are sorted so the rendering does not depend on evaluation order.
    pub fn new(suite: &str, mut cases: Vec<Case>, elapsed: Duration) -> Self {
        cases.sort();
        VerifyReport {
            suite: suite.to_string(),
            cases,
            elapsed,
        }
    }

    pub fn merge(suite: &str, reports: Vec<VerifyReport>) -> Self {
        let elapsed = reports.iter().map(|r| r.elapsed).sum();
        let cases = reports
            .into_iter()
            .flat_map(|r| {
                let prefix = r.suite;
                r.cases.into_iter().map(move |mut c| {
                    c.check = format!("{prefix}/{}", c.check);
                    c
                })
            })
            .collect();
        Self::new(suite, cases, elapsed)
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => {
                #[derive(Serialize)]
                struct Out<'a> {
                    suite: &'a str,
                    passed: bool,
                    pass: usize,
                    fail: usize,
                    skipped: usize,
                    cases: &'a [Case],
                }
                let out = Out {
                    suite: &self.suite,
                    passed: self.passed(),
                    pass: self.count(Status::Pass),
                    fail: self.count(Status::Fail),
                    skipped: self.count(Status::Skipped),
                    cases: &self.cases,
                };
                let mut s = serde_json::to_string_pretty(&out).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["suite", "check", "params", "status", "witness"])
                    .expect("in-memory csv");
                for c in &self.cases {
                    w.write_record([
                        self.suite.as_str(),
                        &c.check,
                        &c.params_text(),
                        c.status.label(),
                        c.witness.as_deref().unwrap_or(""),
                    ])
                    .expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}: {} ({} passed, {} failed, {} skipped)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
        );
        for c in &self.cases {
            let _ = write!(out, "  [{}] {}", c.status.label(), c.check);
            if !c.params.is_empty() {
                let _ = write!(out, " {}", c.params_text());
            }
            if let Some(w) = &c.witness {
                let _ = write!(out, "  residual: {w}");
            }
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        out
    }
}
