//! Deductive systems of the first and second kind, and lattice filters.
//!
//! A deductive system is a subset containing 1 that is closed under
//! detachment: from `x` and `x -> y` (first kind) or `x` and `x => y`
//! (second kind) conclude `y`. Enumeration tests all subsets containing
//! the top element, which is fine at this crate's scale; closure is a
//! fixpoint of the detachment rule.
//!
//! Note that the least deductive system of the second kind is not `{1}`
//! in general: `1 => y = y**`, so every dense element (where `y** = 1`)
//! is forced into every second-kind system.

use crate::implication::{arrow_table, darrow_table, ImplTable};
use crate::lattice::{ElementSet, FiniteLattice};
use crate::pseudo::UnaryTable;
use crate::verdict::{Counterexample, Verdict, Violation};

/// Which implication closes the deductive system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsKind {
    First,
    Second,
}

impl DsKind {
    pub fn name(self) -> &'static str {
        match self {
            DsKind::First => "first",
            DsKind::Second => "second",
        }
    }

    pub fn from_name(name: &str) -> Option<DsKind> {
        match name {
            "first" => Some(DsKind::First),
            "second" => Some(DsKind::Second),
            _ => None,
        }
    }

    /// The implication table this kind detaches over.
    pub fn table(self, l: &FiniteLattice, star: &UnaryTable) -> ImplTable {
        match self {
            DsKind::First => arrow_table(l, star),
            DsKind::Second => darrow_table(l, star),
        }
    }
}

/// Check the two deductive-system conditions against an explicit table.
pub fn is_ds_with(l: &FiniteLattice, imp: &ImplTable, a: &ElementSet) -> Verdict {
    if !a.contains(l.top()) {
        return Verdict::fail(
            Counterexample::elements(&[], &[], Violation::NotIn { element: l.top() })
                .with_clause("1 in A"),
        );
    }
    let clause = match imp.kind() {
        crate::implication::ImplKind::Arrow => "x in A and x -> y in A imply y in A",
        crate::implication::ImplKind::DArrow => "x in A and x => y in A imply y in A",
    };
    for x in a.iter() {
        for y in l.elements() {
            if a.contains(imp.of(x, y)) && !a.contains(y) {
                return Verdict::fail(
                    Counterexample::elements(&["x", "y"], &[x, y], Violation::NotIn { element: y })
                        .with_clause(clause),
                );
            }
        }
    }
    Verdict::pass()
}

/// Is `a` a deductive system of the given kind?
pub fn is_deductive_system(
    l: &FiniteLattice,
    star: &UnaryTable,
    a: &ElementSet,
    kind: DsKind,
) -> Verdict {
    is_ds_with(l, &kind.table(l, star), a)
}

fn mask_is_ds(n: usize, imp: &ImplTable, mask: u64) -> bool {
    for x in 0..n {
        if mask & (1 << x) == 0 {
            continue;
        }
        for y in 0..n {
            if mask & (1 << imp.of(x, y)) != 0 && mask & (1 << y) == 0 {
                return false;
            }
        }
    }
    true
}

/// All deductive systems of the given kind, in canonical order (by size,
/// then lexicographically on sorted member indices).
pub fn enumerate_deductive_systems(
    l: &FiniteLattice,
    star: &UnaryTable,
    kind: DsKind,
) -> Vec<ElementSet> {
    let imp = kind.table(l, star);
    let n = l.size();
    let top_bit = 1u64 << l.top();
    let mut out: Vec<ElementSet> = (0..1u64 << n)
        .filter(|mask| mask & top_bit != 0 && mask_is_ds(n, &imp, *mask))
        .map(ElementSet::from_mask)
        .collect();
    out.sort();
    out
}

/// The least deductive system of the given kind containing `seed`:
/// add the top element, then saturate under detachment.
pub fn ds_closure(
    l: &FiniteLattice,
    star: &UnaryTable,
    seed: &ElementSet,
    kind: DsKind,
) -> ElementSet {
    let imp = kind.table(l, star);
    let n = l.size();
    let mut mask = seed.to_mask() | (1 << l.top());
    loop {
        let before = mask;
        for x in 0..n {
            if mask & (1 << x) == 0 {
                continue;
            }
            for y in 0..n {
                if mask & (1 << imp.of(x, y)) != 0 {
                    mask |= 1 << y;
                }
            }
        }
        if mask == before {
            return ElementSet::from_mask(mask);
        }
    }
}

/// Filter check: nonempty, upward closed, closed under meet.
pub fn is_filter(l: &FiniteLattice, a: &ElementSet) -> Verdict {
    if a.is_empty() {
        return Verdict::fail(
            Counterexample::elements(&[], &[], Violation::NotIn { element: l.top() })
                .with_clause("a filter is nonempty"),
        );
    }
    for x in a.iter() {
        for y in l.elements() {
            if l.leq(x, y) && !a.contains(y) {
                return Verdict::fail(
                    Counterexample::elements(&["x", "y"], &[x, y], Violation::NotIn { element: y })
                        .with_clause("upward closed"),
                );
            }
        }
    }
    for x in a.iter() {
        for y in a.iter() {
            let m = l.meet(x, y);
            if !a.contains(m) {
                return Verdict::fail(
                    Counterexample::elements(&["x", "y"], &[x, y], Violation::NotIn { element: m })
                        .with_clause("closed under meet"),
                );
            }
        }
    }
    Verdict::pass()
}

/// All filters, in canonical order.
pub fn enumerate_filters(l: &FiniteLattice) -> Vec<ElementSet> {
    let n = l.size();
    let top_bit = 1u64 << l.top();
    let mut out: Vec<ElementSet> = (0..1u64 << n)
        .filter(|&mask| {
            if mask & top_bit == 0 {
                return false;
            }
            for x in 0..n {
                if mask & (1 << x) == 0 {
                    continue;
                }
                for y in 0..n {
                    if l.leq(x, y) && mask & (1 << y) == 0 {
                        return false;
                    }
                }
                for y in 0..n {
                    if mask & (1 << y) != 0 && mask & (1 << l.meet(x, y)) == 0 {
                        return false;
                    }
                }
            }
            true
        })
        .map(ElementSet::from_mask)
        .collect();
    out.sort();
    out
}
