//! Pass/fail reporting with explicit witnesses.
//!
//! Every verifier in the crate returns a [`VerificationReport`]. A failing
//! report carries the lexicographically first witness: the basis tensor where
//! the identity broke, plus the two sides' values in exact text form.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

/// Location and the two differing values of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis tensor (labels joined by `⊗`) or other location description.
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(location: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            location: location.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one named check. `witness` is present iff the check failed.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Wall-clock duration. Excluded from JSON so reports are byte-stable.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>) -> Self {
        VerificationReport {
            check_name: name.into(),
            passed: true,
            witness: None,
            timing_ms: 0,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        VerificationReport {
            check_name: name.into(),
            passed: false,
            witness: Some(witness),
            timing_ms: 0,
        }
    }

    pub fn from_outcome(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => VerificationReport::pass(name),
            Some(w) => VerificationReport::fail(name, w),
        }
    }

    /// Runs `f`, recording its duration in the returned report.
    pub fn timed(f: impl FnOnce() -> VerificationReport) -> VerificationReport {
        let start = Instant::now();
        let mut rep = f();
        rep.timing_ms = start.elapsed().as_millis();
        rep
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.check_name = name.into();
        self
    }

    /// Prefixes the witness location with a sub-check label.
    pub fn nested(mut self, outer: impl Into<String>) -> Self {
        let inner = self.check_name.clone();
        if let Some(w) = self.witness.as_mut() {
            w.location = format!("[{}] {}", inner, w.location);
        }
        self.check_name = outer.into();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "\u{2713} {}", self.check_name)
        } else {
            let w = self.witness.as_ref().expect("failed report has witness");
            write!(
                f,
                "\u{2717} {} @ {}: {} != {}",
                self.check_name, w.location, w.lhs, w.rhs
            )
        }
    }
}

/// Collects reports and tracks the overall verdict.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportSet {
    pub reports: Vec<VerificationReport>,
}

impl ReportSet {
    pub fn new() -> Self {
        ReportSet::default()
    }

    pub fn push(&mut self, r: VerificationReport) {
        self.reports.push(r);
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| !r.passed)
    }

    /// Collapses the set into one report named `name`.
    pub fn merged(self, name: impl Into<String>) -> VerificationReport {
        match self.reports.into_iter().find(|r| !r.passed) {
            None => VerificationReport::pass(name),
            Some(f) => f.nested(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_present_iff_failed() {
        let p = VerificationReport::pass("x");
        assert!(p.passed && p.witness.is_none());
        let f = VerificationReport::fail("x", Witness::new("1⊗1", "0", "1"));
        assert!(!f.passed && f.witness.is_some());
    }

    #[test]
    fn merged_keeps_first_failure() {
        let mut set = ReportSet::new();
        set.push(VerificationReport::pass("a"));
        set.push(VerificationReport::fail("b", Witness::new("loc", "x", "y")));
        set.push(VerificationReport::fail("c", Witness::new("loc2", "u", "v")));
        let merged = set.merged("outer");
        assert!(!merged.passed);
        let w = merged.witness.unwrap();
        assert!(w.location.contains("[b]"));
        assert!(w.location.contains("loc"));
    }

    #[test]
    fn json_omits_timing() {
        let r = VerificationReport::pass("t");
        let s = serde_json::to_string(&r).unwrap();
        assert!(!s.contains("timing"));
    }
}
