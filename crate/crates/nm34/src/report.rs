//! Verification reports: one entry per claim, rendered as text or as
//! versioned JSON.

use std::collections::BTreeMap;
use std::fmt;

use nm34_core::veronese::{OrbitLabel, OrbitPartition};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub claim_id: String,
    pub title: String,
    pub status: Status,
    pub measured: String,
    pub expected: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub scope: String,
    pub q: Option<u8>,
    pub verified: usize,
    pub failed: usize,
    pub skipped: usize,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    /// Sorts the entries by claim id and fills in the tallies.
    pub fn new(scope: &str, q: Option<u8>, mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let count = |s| entries.iter().filter(|e| e.status == s).count();
        Report {
            schema: SCHEMA_VERSION,
            scope: scope.to_string(),
            q,
            verified: count(Status::Verified),
            failed: count(Status::Failed),
            skipped: count(Status::Skipped),
            entries,
        }
    }

    pub fn all_verified(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// The same report with timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        r.entries.iter_mut().for_each(|e| e.elapsed_ms = 0.0);
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "[{:>8}] {}  {}", e.status, e.claim_id, e.title)?;
            writeln!(f, "           measured: {}", e.measured)?;
            writeln!(f, "           expected: {}", e.expected)?;
            writeln!(f, "           {:.1} ms", e.elapsed_ms)?;
        }
        write!(
            f,
            "{} verified, {} failed, {} skipped",
            self.verified, self.failed, self.skipped
        )
    }
}

/// The orbit partition of PG(5, q) as `{q, sizes, members}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub q: u8,
    pub sizes: [usize; 4],
    pub members: BTreeMap<String, Vec<String>>,
}

impl OrbitReport {
    pub fn from_partition(p: &OrbitPartition) -> Self {
        let members = OrbitLabel::ALL
            .iter()
            .map(|&l| {
                (
                    l.to_string(),
                    p.members(l).iter().map(|pt| pt.to_string()).collect(),
                )
            })
            .collect();
        OrbitReport {
            q: p.field().q(),
            sizes: p.sizes(),
            members,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nm34_core::field::Field;
    use nm34_core::veronese::compute_orbits;

    fn entry(id: &str, status: Status) -> ReportEntry {
        ReportEntry {
            claim_id: id.into(),
            title: String::new(),
            status,
            measured: String::new(),
            expected: String::new(),
            elapsed_ms: 1.5,
        }
    }

    #[test]
    fn entries_sorted_and_tallied() {
        let r = Report::new(
            "x",
            None,
            vec![
                entry("C02", Status::Failed),
                entry("C01", Status::Verified),
                entry("C03", Status::Skipped),
            ],
        );
        let ids: Vec<_> = r.entries.iter().map(|e| e.claim_id.as_str()).collect();
        assert_eq!(ids, ["C01", "C02", "C03"]);
        assert_eq!((r.verified, r.failed, r.skipped), (1, 1, 1));
        assert!(!r.all_verified());
        let json = r.to_json();
        assert!(json.contains("\"schema\": 1") && json.contains("\"status\": \"failed\""));
    }

    #[test]
    fn orbit_report_q2() {
        let r = OrbitReport::from_partition(&compute_orbits(Field::GF2));
        assert_eq!(r.sizes, [7, 7, 21, 28]);
        assert_eq!(r.members["O2"].len(), 7);
        assert!(r.members["O2"].contains(&"000100".to_string()));
    }
}
