//! Pass/fail records shared by every verifier.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// An ordered list of checks. Order is insertion order, so reports are
/// deterministic whenever the verifiers are.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Record a check; `witness` is only evaluated on failure.
    pub fn check<W: FnOnce() -> String>(&mut self, name: impl Into<String>, pass: bool, witness: W) -> bool {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness: (!pass).then(witness),
            note: None,
        });
        pass
    }

    /// Record a check from the first counterexample found, if any.
    pub fn expect_none<T: fmt::Debug>(&mut self, name: impl Into<String>, counterexample: Option<T>) -> bool {
        let pass = counterexample.is_none();
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness: counterexample.map(|c| format!("{c:?}")),
            note: None,
        });
        pass
    }

    pub fn note(&mut self, note: impl Into<String>) {
        if let Some(last) = self.checks.last_mut() {
            last.note = Some(note.into());
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Append another report, prefixing its check names unless they already
    /// carry the prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() && !c.name.starts_with(&format!("{prefix}/")) {
                c.name = format!("{prefix}/{}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " -- witness: {w}")?;
            }
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
