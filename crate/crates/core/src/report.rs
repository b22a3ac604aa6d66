//! Outcome of an identity check.
//!
//! Every checker quantifies over basis tuples and records, per named identity,
//! the first tuple where the two sides disagree together with both evaluated
//! sides. Compound checks nest sub-reports in `parts`.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Name of the violated identity.
    pub identity: String,
    /// Offending basis index tuple (0-based).
    pub indices: Vec<usize>,
    /// Left-hand side, as `p/q` literals.
    pub lhs: Vec<String>,
    /// Right-hand side, as `p/q` literals.
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// At most one witness per violated identity, in the order they were found.
    pub failures: Vec<Witness>,
    pub parts: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            failures: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// A failure carrying only a message; used for structural conditions
    /// (nondegeneracy, partition shape) that have no two-sided witness.
    pub fn fail(name: impl Into<String>, identity: impl Into<String>, indices: Vec<usize>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            failures: vec![Witness {
                identity: identity.into(),
                indices,
                lhs: Vec::new(),
                rhs: Vec::new(),
            }],
            parts: Vec::new(),
        }
    }

    /// Wraps sub-reports; passes iff every part passes.
    pub fn all_of(name: impl Into<String>, parts: Vec<CheckReport>) -> Self {
        CheckReport {
            name: name.into(),
            passed: parts.iter().all(|p| p.passed),
            failures: Vec::new(),
            parts,
        }
    }

    /// `hypothesis ⇒ conclusion`. Both sides are kept as parts; only the
    /// implication decides `passed`.
    pub fn implication(
        name: impl Into<String>,
        hypothesis: CheckReport,
        conclusion: CheckReport,
    ) -> Self {
        let passed = !hypothesis.passed || conclusion.passed;
        CheckReport {
            name: name.into(),
            passed,
            failures: if passed {
                Vec::new()
            } else {
                vec![relation_witness("implication", &[&hypothesis, &conclusion])]
            },
            parts: vec![hypothesis, conclusion],
        }
    }

    /// Passes iff every side has the same outcome.
    pub fn equivalence(name: impl Into<String>, sides: Vec<CheckReport>) -> Self {
        let passed = sides.windows(2).all(|w| w[0].passed == w[1].passed);
        CheckReport {
            name: name.into(),
            passed,
            failures: if passed {
                Vec::new()
            } else {
                vec![relation_witness(
                    "equivalence",
                    &sides.iter().collect::<Vec<_>>(),
                )]
            },
            parts: sides,
        }
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        if let Some(w) = self.failures.first() {
            return Some(w);
        }
        self.parts.iter().find_map(|p| p.first_failure())
    }

    /// Finds a sub-report by name, searching depth-first.
    pub fn part(&self, name: &str) -> Option<&CheckReport> {
        for p in &self.parts {
            if p.name == name {
                return Some(p);
            }
            if let Some(found) = p.part(name) {
                return Some(found);
            }
        }
        None
    }

    /// True when the named identity has a recorded failure anywhere in the tree.
    pub fn violates(&self, identity: &str) -> bool {
        self.failures.iter().any(|w| w.identity == identity)
            || self.parts.iter().any(|p| p.violates(identity))
    }

    pub fn with_part(mut self, part: CheckReport) -> Self {
        self.passed &= part.passed;
        self.parts.push(part);
        self
    }
}

/// Records the outcome of each side as `name=true|false`.
fn relation_witness(identity: &str, sides: &[&CheckReport]) -> Witness {
    Witness {
        identity: identity.to_string(),
        indices: Vec::new(),
        lhs: sides
            .iter()
            .map(|s| format!("{}={}", s.name, s.passed))
            .collect(),
        rhs: Vec::new(),
    }
}

/// Accumulates comparisons for one report.
pub(crate) struct Checker {
    name: String,
    failures: Vec<Witness>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker {
            name: name.into(),
            failures: Vec::new(),
        }
    }

    fn already_failed(&self, identity: &str) -> bool {
        self.failures.iter().any(|w| w.identity == identity)
    }

    /// Compares two coordinate vectors (or flattened tensors).
    pub fn eq<T: Scalar>(
        &mut self,
        identity: &str,
        indices: &[usize],
        lhs: &[T],
        rhs: &[T],
    ) -> bool {
        if lhs == rhs {
            return true;
        }
        if !self.already_failed(identity) {
            self.failures.push(Witness {
                identity: identity.to_string(),
                indices: indices.to_vec(),
                lhs: lhs.iter().map(Scalar::to_literal).collect(),
                rhs: rhs.iter().map(Scalar::to_literal).collect(),
            });
        }
        false
    }

    /// Records a failure of a condition with no natural two-sided form.
    pub fn flag(&mut self, identity: &str, indices: &[usize]) {
        if !self.already_failed(identity) {
            self.failures.push(Witness {
                identity: identity.to_string(),
                indices: indices.to_vec(),
                lhs: Vec::new(),
                rhs: Vec::new(),
            });
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            passed: self.failures.is_empty(),
            failures: self.failures,
            parts: Vec::new(),
        }
    }
}
