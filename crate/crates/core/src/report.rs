use std::fmt;

use serde::Serialize;

/// First failing instance of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification sweep: how many instances were checked and
/// the first one that failed, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<Counterexample>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: 0,
            failures: 0,
            counterexample: None,
        }
    }

    /// Records one check. `describe` returns `(input, expected, actual)` and
    /// is only called for the first failure.
    pub fn check<F>(&mut self, ok: bool, describe: F)
    where
        F: FnOnce() -> (String, String, String),
    {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                let (input, expected, actual) = describe();
                self.counterexample = Some(Counterexample {
                    input,
                    expected,
                    actual,
                });
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Folds another report's counts into this one, keeping the earliest
    /// counterexample.
    pub fn merge(mut self, other: Report) -> Report {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks", self.name, self.checks)?;
        if self.failures > 0 {
            write!(f, ", {} failures", self.failures)?;
        }
        write!(f, ")")?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {} expected {} got {}", c.input, c.expected, c.actual)?;
        }
        Ok(())
    }
}
