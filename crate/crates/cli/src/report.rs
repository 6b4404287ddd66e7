//! Verification reports and the per-check tallies they are built from.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Failures kept verbatim per report; the counts are always complete.
pub const MAX_RECORDED_FAILURES: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    /// The input that failed, in the CLI's textual forms.
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub instances: usize,
    pub failures: usize,
}

/// Accumulates check outcomes. Merging is associative, and merging in
/// input order keeps the recorded failures deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    /// Records one instance of `check`; `detail` is computed only on failure.
    pub fn check(&mut self, check: &str, ok: bool, input: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        let entry = self.checks.entry(check.to_string()).or_default();
        entry.instances += 1;
        if !ok {
            entry.failures += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(Failure { check: check.to_string(), input: input(), detail: detail() });
            }
        }
    }

    /// Records a plain pass/fail with a fixed input description.
    pub fn assert(&mut self, check: &str, ok: bool, input: &str) {
        self.check(check, ok, || input.to_string(), String::new);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.instances += v.instances;
            e.failures += v.failures;
        }
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: usize,
    pub failure_count: usize,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn from_tally(suite: &str, tally: Tally, wall: Duration) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            instances: tally.checks.values().map(|c| c.instances).sum(),
            failure_count: tally.checks.values().map(|c| c.failures).sum(),
            checks: tally.checks,
            failures: tally.failures,
            wall_time_ms: wall.as_millis(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Failures of the named check, `None` if it never ran.
    pub fn check_failures(&self, name: &str) -> Option<usize> {
        self.checks.get(name).map(|c| c.failures)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} instances, {} failures, {} ms",
            self.suite, self.instances, self.failure_count, self.wall_time_ms
        )?;
        for (name, c) in &self.checks {
            writeln!(f, "  {name}: {} instances, {} failures", c.instances, c.failures)?;
        }
        for fl in &self.failures {
            writeln!(f, "  FAIL {} on {}: {}", fl.check, fl.input, fl.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_ordered_and_counts() {
        let mut a = Tally::new();
        a.assert("x", true, "a1");
        a.assert("x", false, "a2");
        let mut b = Tally::new();
        b.assert("x", false, "b1");
        b.assert("y", true, "b2");
        let m = a.merge(b);
        assert_eq!(m.checks["x"], CheckTally { instances: 3, failures: 2 });
        assert_eq!(m.checks["y"], CheckTally { instances: 1, failures: 0 });
        let inputs: Vec<&str> = m.failures.iter().map(|f| f.input.as_str()).collect();
        assert_eq!(inputs, vec!["a2", "b1"]);
        let r = VerifyReport::from_tally("s", m, Duration::ZERO);
        assert_eq!((r.instances, r.failure_count, r.passed()), (4, 2, false));
    }
}
