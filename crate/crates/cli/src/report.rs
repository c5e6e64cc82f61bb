use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::SuiteConfig;

pub const SCHEMA: &str = "ncsphere-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        }
    }
}

/// Result of one case, before timing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Value,
}

impl Outcome {
    pub fn check(pass: bool, witness: Value) -> Outcome {
        Outcome {
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            witness,
        }
    }

    pub fn skip(reason: impl Into<String>) -> Outcome {
        Outcome {
            verdict: Verdict::Skip,
            witness: Value::from(reason.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub claim: String,
    pub verdict: Verdict,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: String,
    pub config: SuiteConfig,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    pub version: &'static str,
}

impl Report {
    pub fn new(suite: &str, config: SuiteConfig, mut cases: Vec<CaseRecord>) -> Report {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &cases {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Skip => summary.skip += 1,
            }
        }
        Report {
            schema: SCHEMA,
            suite: suite.to_string(),
            config,
            cases,
            summary,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mut witness = match &c.witness {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            if witness.chars().count() > 96 {
                witness = witness.chars().take(93).collect::<String>() + "...";
            }
            let _ = writeln!(
                out,
                "[{}] {}  {}  ({} ms)",
                c.verdict.tag(),
                c.id,
                witness,
                c.ms
            );
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed, {} skipped (seed {})",
            self.suite, s.pass, s.fail, s.skip, self.config.seed
        );
        out
    }
}

/// The report JSON with every `ms` field set to zero.
pub fn strip_timings(json: &str) -> serde_json::Result<String> {
    let mut v: Value = serde_json::from_str(json)?;
    if let Some(cases) = v.get_mut("cases").and_then(Value::as_array_mut) {
        for c in cases {
            c["ms"] = Value::from(0);
        }
    }
    serde_json::to_string_pretty(&v)
}
