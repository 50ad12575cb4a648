//! Pass/fail bookkeeping shared by the axiom, relation and formula checks.

use std::fmt;

/// Outcome of one named check, with the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<Vec<usize>>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            checked: 0,
            failures: 0,
            witness: None,
        }
    }

    /// Records one evaluated case; `witness` is kept only for the first failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<usize>) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, outcome: CheckOutcome) {
        self.checks.push(outcome);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "PASS {} ({} cases)", c.name, c.checked)?;
            } else {
                writeln!(
                    f,
                    "FAIL {} ({} of {} cases, witness {:?})",
                    c.name,
                    c.failures,
                    c.checked,
                    c.witness.as_deref().unwrap_or(&[])
                )?;
            }
        }
        Ok(())
    }
}
