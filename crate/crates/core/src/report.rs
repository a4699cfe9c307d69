//! Diagnostic reports shared by every validator.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One violated law, located by level tuple and basis (or index) tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub law: String,
    pub levels: Vec<usize>,
    pub witness: Vec<usize>,
    /// Residual or offending difference, rendered exactly.
    pub detail: String,
}

/// An ordered collection of violations; empty means every check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        law: impl Into<String>,
        levels: Vec<usize>,
        witness: Vec<usize>,
        detail: impl Into<String>,
    ) {
        self.violations.push(Violation {
            law: law.into(),
            levels,
            witness,
            detail: detail.into(),
        });
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    /// Sorts by levels, then law name, then witness tuple.
    pub fn sorted(mut self) -> Self {
        self.violations.sort_by(|a, b| {
            (&a.levels, &a.law, &a.witness, &a.detail).cmp(&(&b.levels, &b.law, &b.witness, &b.detail))
        });
        self
    }

    pub fn mentions(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law.contains(law))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{} levels={:?} witness={:?}: {}", v.law, v.levels, v.witness, v.detail)?;
        }
        Ok(())
    }
}
