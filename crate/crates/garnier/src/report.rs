//! Claim results and the machine-readable report format.
//!
//! Every suite produces a list of [`Claim`]s. A claim records what was
//! checked, the verdict, and a human-readable detail line carrying the
//! witness (the residual, the corrected value, the failing slot). Claims
//! for displays suspected of being misprints carry `expected_failure`, so
//! a refutation of the verbatim form counts as the anticipated outcome
//! while a proof of it would be flagged.

use serde::{Deserialize, Serialize};

/// Identifier of the report layout emitted by [`Report::to_json`].
pub const SCHEMA: &str = "garnier-report/1";

/// Verdict of a single claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The identity holds exactly (under the declared parameter policy).
    Proved,
    /// The identity fails; the detail line carries a witness.
    Refuted,
    /// The check could not run (missing frozen data, budget exhausted).
    Skipped,
}

/// One verified statement.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Claim {
    /// Stable identifier, `suite/subject[/facet]`.
    pub id: String,
    /// Suite that produced the claim.
    pub suite: String,
    /// What the claim asserts, in plain language.
    pub statement: String,
    pub status: Status,
    /// Witness or context for the verdict.
    pub detail: String,
    /// True when the checked display is a suspected misprint stored
    /// verbatim, so refutation is the anticipated outcome.
    #[serde(default)]
    pub expected_failure: bool,
    /// Wall-clock time spent on the claim.
    pub elapsed_ms: u64,
}

impl Claim {
    /// Whether the verdict matches the anticipated outcome.
    pub fn as_anticipated(&self) -> bool {
        match self.status {
            Status::Proved => !self.expected_failure,
            Status::Refuted => self.expected_failure,
            Status::Skipped => false,
        }
    }
}

/// Aggregated counts over a claim list.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub proved: usize,
    pub refuted: usize,
    pub skipped: usize,
    /// Claims whose verdict differs from the anticipated outcome.
    pub unexpected: usize,
}

impl Counts {
    pub fn tally(claims: &[Claim]) -> Counts {
        let mut c = Counts {
            total: claims.len(),
            ..Counts::default()
        };
        for claim in claims {
            match claim.status {
                Status::Proved => c.proved += 1,
                Status::Refuted => c.refuted += 1,
                Status::Skipped => c.skipped += 1,
            }
            if !claim.as_anticipated() {
                c.unexpected += 1;
            }
        }
        c
    }
}

/// A full run: configuration, claims, and tallies.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    /// Suite selector the run was invoked with.
    pub suite: String,
    /// Composition order used for words: `apply-right-first` or
    /// `apply-left-first`.
    pub convention: String,
    /// Parameter normalization: `off`, or the eliminated parameter.
    pub fuchs: String,
    pub counts: Counts,
    pub claims: Vec<Claim>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, convention: &str, fuchs: &str, claims: Vec<Claim>) -> Report {
        Report {
            schema: SCHEMA.to_string(),
            suite: suite.to_string(),
            convention: convention.to_string(),
            fuchs: fuchs.to_string(),
            counts: Counts::tally(&claims),
            claims,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// True when every claim came out as anticipated.
    pub fn clean(&self) -> bool {
        self.counts.unexpected == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claim(status: Status, expected_failure: bool) -> Claim {
        Claim {
            id: "demo/x".into(),
            suite: "demo".into(),
            statement: "x".into(),
            status,
            detail: String::new(),
            expected_failure,
            elapsed_ms: 0,
        }
    }

    #[test]
    fn anticipated_verdicts() {
        assert!(claim(Status::Proved, false).as_anticipated());
        assert!(claim(Status::Refuted, true).as_anticipated());
        assert!(!claim(Status::Refuted, false).as_anticipated());
        assert!(!claim(Status::Proved, true).as_anticipated());
        assert!(!claim(Status::Skipped, false).as_anticipated());
    }

    #[test]
    fn counts_and_json_roundtrip() {
        let claims = vec![
            claim(Status::Proved, false),
            claim(Status::Refuted, true),
            claim(Status::Refuted, false),
        ];
        let report = Report::new("all", "apply-right-first", "a6", claims);
        assert_eq!(report.counts.total, 3);
        assert_eq!(report.counts.unexpected, 1);
        assert!(!report.clean());
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back.schema, SCHEMA);
        assert_eq!(back.counts.refuted, 2);
    }
}
