//! Report documents written to standard output.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use tgrs_core::tgrs::{MdsReport, TwistMatrix};

/// Failing subsets are 1-based positions here, matching how codes are
/// written down; the library uses 0-based indices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub mds: bool,
    pub method: String,
    pub failing_subsets: Vec<Vec<usize>>,
    pub novelty: String,
}

impl From<&MdsReport> for ReportDoc {
    fn from(r: &MdsReport) -> ReportDoc {
        ReportDoc {
            mds: r.is_mds,
            method: r.method.as_str().into(),
            failing_subsets: r.failing_subsets.iter().map(|s| s.iter().map(|i| i + 1).collect()).collect(),
            novelty: r.novelty.as_str().into(),
        }
    }
}

impl ReportDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "mds: {}", self.mds).unwrap();
        writeln!(out, "method: {}", self.method).unwrap();
        writeln!(out, "novelty: {}", self.novelty).unwrap();
        if self.failing_subsets.is_empty() {
            writeln!(out, "failing subsets: none").unwrap();
        } else {
            writeln!(out, "failing subsets: {}", self.failing_subsets.len()).unwrap();
            for s in &self.failing_subsets {
                let s: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                writeln!(out, "  {{{}}}", s.join(",")).unwrap();
            }
        }
        out
    }
}

pub fn twist_rows(t: &TwistMatrix) -> Vec<Vec<u32>> {
    (0..t.rows()).map(|m| t.row(m).iter().map(|e| e.value()).collect()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Candidate {
    pub eta: Vec<Vec<u32>>,
    pub report: ReportDoc,
}

/// Outcome of a search run. `duration_ms` is only filled in on request so
/// that replays with the same seed print identical documents.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
    pub evaluated: u64,
    pub results: Vec<Candidate>,
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed: {seed}").unwrap();
        }
        if let Some(ms) = self.duration_ms {
            writeln!(out, "duration: {ms} ms").unwrap();
        }
        writeln!(out, "evaluated: {}", self.evaluated).unwrap();
        writeln!(out, "kept: {}", self.results.len()).unwrap();
        for c in &self.results {
            let rows: Vec<String> = c
                .eta
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            writeln!(out, "[{}] {}", rows.join("; "), c.report.novelty).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tgrs_core::tgrs::{Method, Novelty};

    #[test]
    fn one_based_subsets() {
        let r = MdsReport {
            is_mds: false,
            failing_subsets: vec![vec![0, 2, 5]],
            method: Method::Criterion,
            novelty: Novelty::ConditionI,
        };
        let doc = ReportDoc::from(&r);
        assert_eq!(doc.failing_subsets, [[1, 3, 6]]);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(json, r#"{"mds":false,"method":"criterion","failing_subsets":[[1,3,6]],"novelty":"condition-i"}"#);
        assert!(doc.to_text().contains("{1,3,6}"));
    }
}
