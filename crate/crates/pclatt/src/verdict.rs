//! Pass/fail results with replayable counterexamples.
//!
//! Every check in this crate reports either "holds" or a concrete witness:
//! an assignment of lattice elements (or element sets) to the variables of
//! the violated statement, plus the two evaluated sides of the failing
//! equation or inequality. Re-evaluating the sides under the recorded
//! assignment reproduces the failure.

use crate::lattice::{Elem, ElementSet, FiniteLattice};

/// Result of checking one quantified statement on one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: Counterexample) -> Self {
        Verdict {
            holds: false,
            counterexample: Some(counterexample),
        }
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    /// Render the counterexample with the lattice's labels, if any.
    pub fn render(&self, l: &FiniteLattice) -> String {
        match &self.counterexample {
            None => "holds".to_string(),
            Some(cex) => format!("fails: {}", cex.render(l)),
        }
    }
}

/// A value bound to a variable in a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Element(Elem),
    Set(ElementSet),
}

/// A concrete witness that a quantified statement fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Variable name to value, in the statement's variable order.
    pub assignment: Vec<(String, Binding)>,
    /// Which clause of a multi-clause statement failed, when applicable.
    pub clause: Option<&'static str>,
    pub violation: Violation,
}

impl Counterexample {
    /// Witness over element variables only.
    pub fn elements(vars: &[&str], values: &[Elem], violation: Violation) -> Self {
        Counterexample {
            assignment: vars
                .iter()
                .zip(values)
                .map(|(v, &e)| (v.to_string(), Binding::Element(e)))
                .collect(),
            clause: None,
            violation,
        }
    }

    pub fn with_clause(mut self, clause: &'static str) -> Self {
        self.clause = Some(clause);
        self
    }

    pub fn render(&self, l: &FiniteLattice) -> String {
        let mut parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, b)| match b {
                Binding::Element(e) => format!("{v}:={}", l.label(*e)),
                Binding::Set(s) => format!("{v}:={}", s.render(l)),
            })
            .collect();
        if let Some(clause) = self.clause {
            parts.push(format!("in \"{clause}\""));
        }
        format!("{} — {}", parts.join(", "), self.violation.render(l))
    }
}

/// The failing condition itself, with the evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An equation `lhs = rhs` failed.
    NotEqual { lhs: Elem, rhs: Elem },
    /// An inequality `lhs <= rhs` failed.
    NotLeq { lhs: Elem, rhs: Elem },
    /// A required member is missing from the set under test.
    NotIn { element: Elem },
    /// The set under test should be empty at this witness but is not.
    Unexpected { element: Elem },
    /// No greatest element of `{x : x /\ element = 0}`: the element has no
    /// pseudocomplement; `maximal` lists the maximal candidates.
    NoPseudocomplement { element: Elem, maximal: Vec<Elem> },
    /// Two sets expected to be equal differ.
    SetsDiffer { left: ElementSet, right: ElementSet },
    /// A pair expected to be in a relation is missing from it.
    PairNotRelated { x: Elem, y: Elem },
}

impl Violation {
    pub fn render(&self, l: &FiniteLattice) -> String {
        match self {
            Violation::NotEqual { lhs, rhs } => {
                format!("{} != {}", l.label(*lhs), l.label(*rhs))
            }
            Violation::NotLeq { lhs, rhs } => {
                format!("{} is not <= {}", l.label(*lhs), l.label(*rhs))
            }
            Violation::NotIn { element } => {
                format!("{} is not in the set", l.label(*element))
            }
            Violation::Unexpected { element } => {
                format!("{} should not be in the set", l.label(*element))
            }
            Violation::NoPseudocomplement { element, maximal } => {
                let m: Vec<&str> = maximal.iter().map(|&e| l.label(e)).collect();
                format!(
                    "{} has no pseudocomplement; maximal disjoint elements: {}",
                    l.label(*element),
                    m.join(",")
                )
            }
            Violation::SetsDiffer { left, right } => {
                format!("{} != {}", left.render(l), right.render(l))
            }
            Violation::PairNotRelated { x, y } => {
                format!("({},{}) is not related", l.label(*x), l.label(*y))
            }
        }
    }
}
