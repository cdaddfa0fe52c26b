//! Pseudocomplements, double pseudocomplements, and dense elements.
//!
//! The pseudocomplement of `a` is the greatest element `x` with
//! `a /\ x = 0`, when such a greatest element exists. A lattice where it
//! exists for every element is pseudocomplemented; the derived table is
//! the starting point for everything else in this crate.

use thiserror::Error;

use crate::lattice::{Elem, ElementSet, FiniteLattice};

/// Which unary operation a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryKind {
    /// `x*`, the pseudocomplement.
    Star,
    /// `x**`, the pseudocomplement of the pseudocomplement.
    DoubleStar,
}

/// A total unary operation on a lattice's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryTable {
    kind: UnaryKind,
    map: Vec<Elem>,
}

impl UnaryTable {
    pub fn kind(&self) -> UnaryKind {
        self.kind
    }

    pub fn of(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `x**` read off a star table.
    pub fn twice(&self, x: Elem) -> Elem {
        self.map[self.map[x]]
    }

    /// The composed table; for a star table this is the doublestar table.
    pub fn composed(&self) -> UnaryTable {
        UnaryTable {
            kind: UnaryKind::DoubleStar,
            map: self.map.iter().map(|&x| self.map[x]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudoError {
    #[error("element {element:?} has no pseudocomplement; maximal disjoint elements: {}",
            maximal.join(","))]
    NotPseudocomplemented {
        element: String,
        maximal: Vec<String>,
    },
}

/// Derive the pseudocomplement table, or report the first element whose
/// set of disjoint elements has no greatest member. The failure lists all
/// maximal disjoint elements, which is what generator filters need.
pub fn pseudocomplement_table(l: &FiniteLattice) -> Result<UnaryTable, PseudoError> {
    let n = l.size();
    let mut map = Vec::with_capacity(n);
    for a in l.elements() {
        let disjoint: Vec<Elem> = l
            .elements()
            .filter(|&x| l.meet(a, x) == l.bottom())
            .collect();
        // indices extend the order, so a greatest element is the last one
        let candidate = *disjoint.last().expect("bottom is always disjoint");
        if disjoint.iter().all(|&z| l.leq(z, candidate)) {
            map.push(candidate);
        } else {
            let maximal = disjoint
                .iter()
                .filter(|&&z| disjoint.iter().all(|&w| w == z || !l.leq(z, w)))
                .map(|&z| l.label(z).to_string())
                .collect();
            return Err(PseudoError::NotPseudocomplemented {
                element: l.label(a).to_string(),
                maximal,
            });
        }
    }
    Ok(UnaryTable {
        kind: UnaryKind::Star,
        map,
    })
}

/// The dense elements `{a : a* = 0}`.
pub fn dense_elements(l: &FiniteLattice, star: &UnaryTable) -> ElementSet {
    l.elements().filter(|&a| star.of(a) == l.bottom()).collect()
}
