use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use stresslab::report::Verdict;

use crate::checks::CheckResult;
use crate::input::Digest;

pub const SCHEMA: &str = "stresslab/1";

/// Everything needed to replay a run: the command line, seed and field, the
/// digests of all inputs, and the per-check results in input order.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: Vec<String>,
    pub seed: u64,
    pub field: String,
    pub inputs: Vec<Digest>,
    pub results: Vec<CheckResult>,
    pub verdict: Verdict,
}

impl RunManifest {
    pub fn new(command: Vec<String>, seed: u64, field: String, inputs: Vec<Digest>, results: Vec<CheckResult>) -> Self {
        let verdict = overall(&results);
        RunManifest { schema: SCHEMA, tool_version: env!("CARGO_PKG_VERSION"), command, seed, field, inputs, results, verdict }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            instance: &'a str,
            check: &'a str,
            parameter: &'a str,
            lhs: &'a str,
            rhs: &'a str,
            verdict: Verdict,
        }
        let mut wr = csv::Writer::from_writer(w);
        for r in &self.results {
            wr.serialize(Row { instance: &r.instance, check: &r.check, parameter: &r.parameter, lhs: &r.lhs, rhs: &r.rhs, verdict: r.verdict })?;
        }
        wr.flush()?;
        Ok(())
    }
}

/// Fail if anything failed, pass if anything passed, otherwise skipped.
pub fn overall(results: &[CheckResult]) -> Verdict {
    if results.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if results.iter().any(|r| r.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Skipped
    }
}
