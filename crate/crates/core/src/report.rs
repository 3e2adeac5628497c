//! Verdict-plus-witness reports shared by the topology and mapping checkers.
//!
//! A failed check always carries at least one witness naming the objects that
//! break the property, so every `false` verdict is reproducible from the
//! report alone.

use serde::Serialize;

/// One named object inside a witness, rendered in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WitnessItem {
    pub name: String,
    pub value: String,
}

/// A single counterexample: which clause failed and the objects showing it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub label: String,
    pub items: Vec<WitnessItem>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness { label: label.into(), items: Vec::new() }
    }

    pub fn with(mut self, name: impl Into<String>, value: impl ToString) -> Self {
        self.items.push(WitnessItem { name: name.into(), value: value.to_string() });
        self
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label)?;
        for item in &self.items {
            write!(f, "; {} = {}", item.name, item.value)?;
        }
        Ok(())
    }
}

/// Boolean verdict plus the witnesses explaining a failure.
///
/// Invariant: `verdict == false` implies `witnesses` is nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { verdict: true, witnesses: Vec::new() }
    }

    pub fn fail(witnesses: Vec<Witness>) -> Self {
        assert!(!witnesses.is_empty(), "a failing report needs at least one witness");
        CheckReport { verdict: false, witnesses }
    }

    pub fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        if witnesses.is_empty() {
            Self::pass()
        } else {
            Self::fail(witnesses)
        }
    }

    /// Short human-readable account of the first failure, or `"ok"`.
    pub fn summary(&self) -> String {
        match self.witnesses.first() {
            None => "ok".to_owned(),
            Some(w) => w.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_report_requires_witnesses() {
        let w = Witness::new("union-escapes").with("a", "{e1: {x}}");
        let report = CheckReport::fail(vec![w]);
        assert!(!report.verdict);
        assert!(report.summary().contains("union-escapes"));
    }

    #[test]
    #[should_panic]
    fn empty_failure_panics() {
        let _ = CheckReport::fail(Vec::new());
    }
}
