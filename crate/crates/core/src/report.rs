//! Pass/fail reports shared by all verifiers: each named check either
//! passes or carries a witness describing the first counterexample found.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    /// Free-form note describing the scope of what is (and is not) checked.
    pub note: Option<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn with_note(note: impl Into<String>) -> Self {
        Report {
            note: Some(note.into()),
            checks: Vec::new(),
        }
    }

    /// Record one check; `witness` is `None` on success, or the first
    /// counterexample found.
    pub fn push(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(note) = &self.note {
            writeln!(f, "# {note}")?;
        }
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS  {}", c.name)?;
            } else {
                writeln!(
                    f,
                    "FAIL  {}  [{}]",
                    c.name,
                    c.witness.as_deref().unwrap_or("no witness")
                )?;
            }
        }
        Ok(())
    }
}
