//! Pass/fail results shared by every checker.

use serde::Serialize;

/// The identity that failed, with both sides rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl Witness {
    pub fn new(identity: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Witness { identity: identity.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), labels: Vec::new() }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = labels;
        self
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} != {}", self.identity, self.lhs, self.rhs)?;
        if !self.labels.is_empty() {
            write!(f, " [{}]", self.labels.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, instances: 0, witness: None, note: None }
    }

    /// Records one instance; the first failure's witness is kept.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: Witness) {
        self.record(false, || witness);
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Prefixes every check name, for reports assembled from parts.
    pub fn scoped(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = format!("{prefix}/{}", c.name);
        }
        self
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            write!(f, "{} {} ({} instances)", if c.pass { "PASS" } else { "FAIL" }, c.name, c.instances)?;
            if let Some(w) = &c.witness {
                write!(f, "\n     witness: {w}")?;
            }
            if let Some(n) = &c.note {
                write!(f, "\n     note: {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
