//! Structural classification: distributive, Stone identity, Stone,
//! Brouwerian.
//!
//! All checks are exhaustive over element tuples (lattices here are tiny)
//! and report the first violating tuple in index order, so counterexamples
//! are deterministic.

use crate::lattice::FiniteLattice;
use crate::pseudo::{pseudocomplement_table, UnaryTable};
use crate::verdict::{Counterexample, Verdict, Violation};

/// Distributivity: `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)` for all triples.
pub fn is_distributive(l: &FiniteLattice) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let lhs = l.meet(x, l.join(y, z));
                let rhs = l.join(l.meet(x, y), l.meet(x, z));
                if lhs != rhs {
                    return Verdict::fail(Counterexample::elements(
                        &["x", "y", "z"],
                        &[x, y, z],
                        Violation::NotEqual { lhs, rhs },
                    ));
                }
            }
        }
    }
    Verdict::pass()
}

/// The Stone identity: `x* \/ x** = 1` for all `x`.
pub fn satisfies_stone_identity(l: &FiniteLattice, star: &UnaryTable) -> Verdict {
    for x in l.elements() {
        let lhs = l.join(star.of(x), star.twice(x));
        if lhs != l.top() {
            return Verdict::fail(Counterexample::elements(
                &["x"],
                &[x],
                Violation::NotEqual { lhs, rhs: l.top() },
            ));
        }
    }
    Verdict::pass()
}

/// Stone lattice: distributive and satisfies the Stone identity.
pub fn is_stone(l: &FiniteLattice, star: &UnaryTable) -> Verdict {
    let d = is_distributive(l);
    if !d.holds {
        return d;
    }
    satisfies_stone_identity(l, star)
}

/// Brouwerian lattice: distributive and pseudocomplemented.
pub fn is_brouwerian(l: &FiniteLattice) -> Verdict {
    match pseudocomplement_table(l) {
        Err(e) => Verdict::fail(no_pseudocomplement_witness(l, e)),
        Ok(_) => is_distributive(l),
    }
}

fn no_pseudocomplement_witness(l: &FiniteLattice, e: crate::pseudo::PseudoError) -> Counterexample {
    let crate::pseudo::PseudoError::NotPseudocomplemented { element, maximal } = e;
    let element = l.element(&element).expect("witness label exists");
    let maximal = maximal
        .iter()
        .map(|s| l.element(s).expect("witness label exists"))
        .collect();
    Counterexample::elements(
        &["a"],
        &[element],
        Violation::NoPseudocomplement { element, maximal },
    )
}

/// Hypothesis classes for laws and family filters. On finite lattices
/// `Distributive` implies `Pseudocomplemented`, so every class except
/// `Any` guarantees a star table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeClass {
    Any,
    /// Every element has a pseudocomplement.
    Pseudocomplemented,
    /// Pseudocomplemented and satisfies the Stone identity (distributivity
    /// not required).
    StoneIdentity,
    /// Distributive (hence pseudocomplemented here: finite).
    Distributive,
    /// Distributive, pseudocomplemented, and satisfies the Stone identity.
    Stone,
}

impl LatticeClass {
    pub const ALL: [LatticeClass; 5] = [
        LatticeClass::Any,
        LatticeClass::Pseudocomplemented,
        LatticeClass::StoneIdentity,
        LatticeClass::Distributive,
        LatticeClass::Stone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeClass::Any => "any",
            LatticeClass::Pseudocomplemented => "pseudocomplemented",
            LatticeClass::StoneIdentity => "stone-identity",
            LatticeClass::Distributive => "distributive",
            LatticeClass::Stone => "stone",
        }
    }

    pub fn from_name(name: &str) -> Option<LatticeClass> {
        LatticeClass::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// A full classification of one lattice, computed once and queried by the
/// law suite to route hypotheses.
#[derive(Debug, Clone)]
pub struct Classification {
    /// The star table, when the lattice is pseudocomplemented.
    pub star: Option<UnaryTable>,
    /// Witness when it is not.
    pub not_pseudocomplemented: Option<Counterexample>,
    pub distributive: Verdict,
    /// `None` when there is no star table to evaluate it on.
    pub stone_identity: Option<Verdict>,
}

impl Classification {
    pub fn of(l: &FiniteLattice) -> Classification {
        let (star, not_pseudocomplemented) = match pseudocomplement_table(l) {
            Ok(t) => (Some(t), None),
            Err(e) => (None, Some(no_pseudocomplement_witness(l, e))),
        };
        let distributive = is_distributive(l);
        let stone_identity = star.as_ref().map(|star| satisfies_stone_identity(l, star));
        Classification {
            star,
            not_pseudocomplemented,
            distributive,
            stone_identity,
        }
    }

    pub fn pseudocomplemented(&self) -> bool {
        self.star.is_some()
    }

    pub fn stone(&self) -> bool {
        self.distributive.holds && self.stone_identity.as_ref().is_some_and(|v| v.holds)
    }

    pub fn brouwerian(&self) -> bool {
        self.pseudocomplemented() && self.distributive.holds
    }

    pub fn satisfies(&self, class: LatticeClass) -> bool {
        match class {
            LatticeClass::Any => true,
            LatticeClass::Pseudocomplemented => self.pseudocomplemented(),
            LatticeClass::StoneIdentity => self.stone_identity.as_ref().is_some_and(|v| v.holds),
            LatticeClass::Distributive => self.pseudocomplemented() && self.distributive.holds,
            LatticeClass::Stone => self.stone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_lattice, Fixture};
    use crate::verdict::Binding;

    #[test]
    fn fig1a_not_distributive_but_stone_identity() {
        let l = Fixture::Fig1a.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        assert!(!is_distributive(&l).holds);
        assert!(satisfies_stone_identity(&l, &star).holds);
        assert!(!is_stone(&l, &star).holds);
        assert!(!is_brouwerian(&l).holds);
    }

    #[test]
    fn fig1b_is_stone() {
        let l = Fixture::Fig1b.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        assert!(is_distributive(&l).holds);
        assert!(satisfies_stone_identity(&l, &star).holds);
        assert!(is_stone(&l, &star).holds);
        assert!(is_brouwerian(&l).holds);
    }

    #[test]
    fn fig1c_fails_stone_identity_at_a() {
        let l = Fixture::Fig1c.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        assert!(is_distributive(&l).holds);
        assert!(is_brouwerian(&l).holds);
        let v = satisfies_stone_identity(&l, &star);
        assert!(!v.holds);
        let cex = v.counterexample.unwrap();
        let a = l.element("a").unwrap();
        assert_eq!(cex.assignment, vec![("x".to_string(), Binding::Element(a))]);
        // a* \/ a** = b \/ a = c
        assert_eq!(
            cex.violation,
            Violation::NotEqual {
                lhs: l.element("c").unwrap(),
                rhs: l.top()
            }
        );
        assert!(!is_stone(&l, &star).holds);
    }

    #[test]
    fn trivial_lattices_are_stone() {
        for text in ["elements: 0 1\ncover: 0 1\n", "elements: e\n"] {
            let l = parse_lattice(text).unwrap();
            let star = pseudocomplement_table(&l).unwrap();
            assert!(is_stone(&l, &star).holds);
            assert!(is_brouwerian(&l).holds);
        }
    }

    #[test]
    fn boolean_four_satisfies_stone_identity() {
        let l =
            parse_lattice("elements: 0 a b 1\ncover: 0 a\ncover: 0 b\ncover: a 1\ncover: b 1\n")
                .unwrap();
        let star = pseudocomplement_table(&l).unwrap();
        assert!(satisfies_stone_identity(&l, &star).holds);
        assert!(is_stone(&l, &star).holds);
    }

    #[test]
    fn m3_is_not_brouwerian() {
        let l = parse_lattice(
            "elements: 0 a b c 1\ncover: 0 a\ncover: 0 b\ncover: 0 c\ncover: a 1\ncover: b 1\ncover: c 1\n",
        )
        .unwrap();
        let v = is_brouwerian(&l);
        assert!(!v.holds);
        assert!(matches!(
            v.counterexample.unwrap().violation,
            Violation::NoPseudocomplement { .. }
        ));
    }

    #[test]
    fn classification_routing() {
        let cls_a = Classification::of(&Fixture::Fig1a.lattice());
        assert!(cls_a.satisfies(LatticeClass::Pseudocomplemented));
        assert!(cls_a.satisfies(LatticeClass::StoneIdentity));
        assert!(!cls_a.satisfies(LatticeClass::Distributive));
        assert!(!cls_a.satisfies(LatticeClass::Stone));

        let cls_b = Classification::of(&Fixture::Fig1b.lattice());
        assert!(LatticeClass::ALL.into_iter().all(|c| cls_b.satisfies(c)));

        let cls_c = Classification::of(&Fixture::Fig1c.lattice());
        assert!(cls_c.satisfies(LatticeClass::Distributive));
        assert!(!cls_c.satisfies(LatticeClass::StoneIdentity));
        assert!(!cls_c.satisfies(LatticeClass::Stone));
    }
}
