//! Congruences of the algebra `(L, \/, /\, *)` and the relation `Theta(A)`
//! induced by a second-kind deductive system.
//!
//! `(x,y)` is in `Theta(A)` iff `x => y` and `y => x` both lie in `A`.
//! `Theta(A)` is kept as a raw binary relation rather than forced into a
//! partition: transitivity is only guaranteed when `A` is closed under
//! meet, and a sweep must be able to represent a non-transitive result.

use thiserror::Error;

use crate::classify::Classification;
use crate::deduction::{is_deductive_system, DsKind};
use crate::implication::darrow_table;
use crate::lattice::{Elem, ElementSet, FiniteLattice};
use crate::pseudo::UnaryTable;
use crate::verdict::{Counterexample, Verdict, Violation};

/// A binary relation on the elements of one lattice. No structure is
/// assumed; reflexivity, symmetry, transitivity, and compatibility are
/// checked, not presupposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinRel {
    n: usize,
    bits: Vec<bool>,
}

impl BinRel {
    pub fn new(n: usize) -> BinRel {
        BinRel {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn contains(&self, x: Elem, y: Elem) -> bool {
        self.bits[x * self.n + y]
    }

    pub fn set(&mut self, x: Elem, y: Elem) {
        self.bits[x * self.n + y] = true;
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.contains(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The set of elements related to `x` (the row of `x`).
    pub fn related_to(&self, x: Elem) -> ElementSet {
        (0..self.n).filter(|&y| self.contains(x, y)).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.contains(x, y) == self.contains(y, x)))
    }

    pub fn is_transitive(&self) -> bool {
        self.first_transitivity_gap().is_none()
    }

    fn first_transitivity_gap(&self) -> Option<(Elem, Elem, Elem)> {
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.contains(x, y) {
                    continue;
                }
                for z in 0..self.n {
                    if self.contains(y, z) && !self.contains(x, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The partition of equivalence classes, when the relation is one.
    pub fn classes(&self) -> Option<Partition> {
        if !(self.is_reflexive() && self.is_symmetric() && self.is_transitive()) {
            return None;
        }
        let mut ids = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in 0..self.n {
            if ids[x] != usize::MAX {
                continue;
            }
            for (y, id) in ids.iter_mut().enumerate().skip(x) {
                if self.contains(x, y) {
                    *id = next;
                }
            }
            next += 1;
        }
        Some(Partition::from_class_ids(ids))
    }
}

/// A partition of the element universe into disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Class id per element, in restricted-growth form: `ids[0] == 0` and
    /// each id is at most one more than the maximum before it.
    ids: Vec<usize>,
    blocks: Vec<ElementSet>,
}

impl Partition {
    /// Normalize arbitrary class ids into canonical form.
    pub fn from_class_ids(raw: Vec<usize>) -> Partition {
        let mut remap: Vec<usize> = Vec::new();
        let mut ids = Vec::with_capacity(raw.len());
        for r in raw {
            let id = match remap.iter().position(|&m| m == r) {
                Some(i) => i,
                None => {
                    remap.push(r);
                    remap.len() - 1
                }
            };
            ids.push(id);
        }
        let count = remap.len();
        let blocks = (0..count)
            .map(|c| {
                ids.iter()
                    .enumerate()
                    .filter(|(_, &id)| id == c)
                    .map(|(e, _)| e)
                    .collect()
            })
            .collect();
        Partition { ids, blocks }
    }

    /// The identity partition (all singletons).
    pub fn finest(n: usize) -> Partition {
        Partition::from_class_ids((0..n).collect())
    }

    /// The one-block partition.
    pub fn coarsest(n: usize) -> Partition {
        Partition::from_class_ids(vec![0; n])
    }

    pub fn size(&self) -> usize {
        self.ids.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn same_block(&self, x: Elem, y: Elem) -> bool {
        self.ids[x] == self.ids[y]
    }

    pub fn block_of(&self, x: Elem) -> &ElementSet {
        &self.blocks[self.ids[x]]
    }

    /// Render as space-separated blocks, e.g. `{0} {a} {b,d} {c,1}`.
    pub fn render(&self, l: &FiniteLattice) -> String {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.render(l)).collect();
        parts.join(" ")
    }
}

/// The block of the top element.
pub fn class_of_top(l: &FiniteLattice, p: &Partition) -> ElementSet {
    p.block_of(l.top()).clone()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("the given set is not a deductive system of the second kind")]
    NotADeductiveSystem { verdict: Verdict },
    #[error("hypothesis violated: {reason}")]
    HypothesisViolated { reason: String },
}

/// `Theta(A)` for an arbitrary subset `A`, no preconditions checked.
pub fn theta_relation(l: &FiniteLattice, star: &UnaryTable, a: &ElementSet) -> BinRel {
    let darrow = darrow_table(l, star);
    let mut rel = BinRel::new(l.size());
    for x in l.elements() {
        for y in l.elements() {
            if a.contains(darrow.of(x, y)) && a.contains(darrow.of(y, x)) {
                rel.set(x, y);
            }
        }
    }
    rel
}

/// `Theta(A)` for a second-kind deductive system `A`.
pub fn theta_of(
    l: &FiniteLattice,
    star: &UnaryTable,
    a: &ElementSet,
) -> Result<BinRel, CongruenceError> {
    let verdict = is_deductive_system(l, star, a, DsKind::Second);
    if !verdict.holds {
        return Err(CongruenceError::NotADeductiveSystem { verdict });
    }
    Ok(theta_relation(l, star, a))
}

/// The per-part results of checking `Theta(A)` against the congruence
/// theorem on one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    pub relation: BinRel,
    pub reflexive: Verdict,
    pub symmetric: Verdict,
    pub compat_join: Verdict,
    pub compat_meet: Verdict,
    pub compat_star: Verdict,
    /// `[1]Theta(A)`.
    pub top_class: ElementSet,
    /// `[1]Theta(A) = {x : x** in A}`.
    pub top_class_matches: Verdict,
    /// Whether `A` is closed under meet.
    pub meet_closed: bool,
    pub transitive: Verdict,
}

impl ThetaReport {
    /// Everything the theorem asserts: reflexive, symmetric, compatible
    /// with the three operations, the top-class formula, and transitivity
    /// whenever `A` is meet-closed.
    pub fn theorem_holds(&self) -> bool {
        self.reflexive.holds
            && self.symmetric.holds
            && self.compat_join.holds
            && self.compat_meet.holds
            && self.compat_star.holds
            && self.top_class_matches.holds
            && (!self.meet_closed || self.transitive.holds)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        [
            &self.reflexive,
            &self.symmetric,
            &self.compat_join,
            &self.compat_meet,
            &self.compat_star,
            &self.top_class_matches,
        ]
        .into_iter()
        .find(|v| !v.holds)
        .or_else(|| (self.meet_closed && !self.transitive.holds).then_some(&self.transitive))
    }
}

/// Evaluate the theorem's assertions for any subset `A`, without checking
/// the Stone/deductive-system hypotheses. Used by sweeps that explore
/// hypothesis necessity.
pub fn theta_report(l: &FiniteLattice, star: &UnaryTable, a: &ElementSet) -> ThetaReport {
    let rel = theta_relation(l, star, a);
    let n = l.size();

    let reflexive = match (0..n).find(|&x| !rel.contains(x, x)) {
        Some(x) => Verdict::fail(
            Counterexample::elements(&["a"], &[x], Violation::PairNotRelated { x, y: x })
                .with_clause("reflexive"),
        ),
        None => Verdict::pass(),
    };

    let mut symmetric = Verdict::pass();
    'sym: for x in 0..n {
        for y in 0..n {
            if rel.contains(x, y) && !rel.contains(y, x) {
                symmetric = Verdict::fail(
                    Counterexample::elements(
                        &["a", "b"],
                        &[x, y],
                        Violation::PairNotRelated { x: y, y: x },
                    )
                    .with_clause("symmetric"),
                );
                break 'sym;
            }
        }
    }

    // pairwise compatibility: (a,b) related and c arbitrary must give
    // (a op c, b op c) related
    let compat = |op: &dyn Fn(Elem, Elem) -> Elem, clause: &'static str| -> Verdict {
        for a0 in 0..n {
            for b0 in 0..n {
                if !rel.contains(a0, b0) {
                    continue;
                }
                for c0 in 0..n {
                    let (x, y) = (op(a0, c0), op(b0, c0));
                    if !rel.contains(x, y) {
                        return Verdict::fail(
                            Counterexample::elements(
                                &["a", "b", "c"],
                                &[a0, b0, c0],
                                Violation::PairNotRelated { x, y },
                            )
                            .with_clause(clause),
                        );
                    }
                }
            }
        }
        Verdict::pass()
    };
    let compat_join = compat(&|a0, c0| l.join(a0, c0), "compatible with \\/");
    let compat_meet = compat(&|a0, c0| l.meet(a0, c0), "compatible with /\\");

    let mut compat_star = Verdict::pass();
    'star: for a0 in 0..n {
        for b0 in 0..n {
            if rel.contains(a0, b0) && !rel.contains(star.of(a0), star.of(b0)) {
                compat_star = Verdict::fail(
                    Counterexample::elements(
                        &["a", "b"],
                        &[a0, b0],
                        Violation::PairNotRelated {
                            x: star.of(a0),
                            y: star.of(b0),
                        },
                    )
                    .with_clause("compatible with *"),
                );
                break 'star;
            }
        }
    }

    let top_class = rel.related_to(l.top());
    let formula: ElementSet = l
        .elements()
        .filter(|&x| a.contains(star.twice(x)))
        .collect();
    let top_class_matches = if top_class == formula {
        Verdict::pass()
    } else {
        Verdict::fail(
            Counterexample::elements(
                &[],
                &[],
                Violation::SetsDiffer {
                    left: top_class.clone(),
                    right: formula,
                },
            )
            .with_clause("[1]Theta(A) = {x : x** in A}"),
        )
    };

    let meet_closed = a.iter().all(|x| a.iter().all(|y| a.contains(l.meet(x, y))));
    let transitive = match rel.first_transitivity_gap() {
        None => Verdict::pass(),
        Some((x, y, z)) => Verdict::fail(
            Counterexample::elements(
                &["a", "b", "c"],
                &[x, y, z],
                Violation::PairNotRelated { x, y: z },
            )
            .with_clause("transitive"),
        ),
    };

    ThetaReport {
        relation: rel,
        reflexive,
        symmetric,
        compat_join,
        compat_meet,
        compat_star,
        top_class,
        top_class_matches,
        meet_closed,
        transitive,
    }
}

/// Check the congruence theorem for `Theta(A)` on a Stone lattice with a
/// second-kind deductive system `A`.
pub fn check_theta_theorem(
    l: &FiniteLattice,
    star: &UnaryTable,
    a: &ElementSet,
) -> Result<ThetaReport, CongruenceError> {
    let cls = Classification::of(l);
    if !cls.stone() {
        return Err(CongruenceError::HypothesisViolated {
            reason: "the lattice is not a Stone lattice".to_string(),
        });
    }
    let verdict = is_deductive_system(l, star, a, DsKind::Second);
    if !verdict.holds {
        return Err(CongruenceError::NotADeductiveSystem { verdict });
    }
    Ok(theta_report(l, star, a))
}

fn rgs_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(cur: &mut Vec<usize>, pos: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for id in 0..=max + 1 {
            cur[pos] = id;
            rec(cur, pos + 1, max.max(id), out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(&mut cur, 1, 0, &mut out);
    out
}

fn is_congruence_ids(l: &FiniteLattice, star: &UnaryTable, ids: &[usize]) -> bool {
    let n = l.size();
    for x in 0..n {
        for y in x + 1..n {
            if ids[x] != ids[y] {
                continue;
            }
            if ids[star.of(x)] != ids[star.of(y)] {
                return false;
            }
            for c in 0..n {
                if ids[l.join(x, c)] != ids[l.join(y, c)] || ids[l.meet(x, c)] != ids[l.meet(y, c)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// All congruences of `(L, \/, /\, *)`, finest first.
pub fn enumerate_congruences(l: &FiniteLattice, star: &UnaryTable) -> Vec<Partition> {
    let mut out: Vec<Partition> = rgs_partitions(l.size())
        .into_iter()
        .filter(|ids| is_congruence_ids(l, star, ids))
        .map(Partition::from_class_ids)
        .collect();
    out.sort_by(|p, q| {
        q.block_count()
            .cmp(&p.block_count())
            .then_with(|| p.class_ids().cmp(q.class_ids()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_lattice, Fixture};
    use crate::pseudo::{dense_elements, pseudocomplement_table};

    fn setup(f: Fixture) -> (FiniteLattice, UnaryTable) {
        let l = f.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        (l, star)
    }

    #[test]
    fn theta_blocks_for_c1() {
        let (l, star) = setup(Fixture::Fig1b);
        let a = ElementSet::from_labels(&l, &["c", "1"]).unwrap();
        let rel = theta_of(&l, &star, &a).unwrap();
        let p = rel.classes().expect("transitive here");
        assert_eq!(p.render(&l), "{0} {a} {b,d} {c,1}");
    }

    #[test]
    fn theta_of_full_set_is_full_relation() {
        let (l, star) = setup(Fixture::Fig1b);
        let a = ElementSet::full(l.size());
        let rel = theta_of(&l, &star, &a).unwrap();
        assert_eq!(rel.pairs().len(), l.size() * l.size());
    }

    #[test]
    fn theta_of_rejects_non_systems() {
        let (l, star) = setup(Fixture::Fig1b);
        // {1} is not second-kind here (c is dense), so theta_of refuses it
        let one = ElementSet::singleton(l.top());
        assert!(matches!(
            theta_of(&l, &star, &one),
            Err(CongruenceError::NotADeductiveSystem { .. })
        ));
        // but the raw relation is still well-defined: x related to y iff
        // x** = y**
        let rel = theta_relation(&l, &star, &one);
        let p = rel.classes().unwrap();
        assert_eq!(p.render(&l), "{0} {a} {b,d} {c,1}");
    }

    #[test]
    fn theta_theorem_on_fig1b() {
        let (l, star) = setup(Fixture::Fig1b);
        for (labels, top_class) in [
            (vec!["c", "1"], "{c,1}"),
            (vec!["a", "c", "1"], "{a,c,1}"),
            (vec!["b", "c", "d", "1"], "{b,c,d,1}"),
        ] {
            let a = ElementSet::from_labels(&l, &labels).unwrap();
            let report = check_theta_theorem(&l, &star, &a).unwrap();
            assert!(report.theorem_holds(), "{labels:?}");
            assert_eq!(report.top_class.render(&l), top_class);
            assert!(report.meet_closed);
            assert!(report.transitive.holds);
        }
    }

    #[test]
    fn theta_theorem_needs_stone() {
        let (l, star) = setup(Fixture::Fig1c);
        let a = ElementSet::from_labels(&l, &["c", "1"]).unwrap();
        assert!(matches!(
            check_theta_theorem(&l, &star, &a),
            Err(CongruenceError::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn theta_of_top_singleton_relates_equal_double_stars() {
        // on a Stone lattice, Theta({1}) relates x,y iff x** = y**, and the
        // class of the top element is exactly the dense set
        let (l, star) = setup(Fixture::Fig1b);
        let one = ElementSet::singleton(l.top());
        let report = theta_report(&l, &star, &one);
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(
                    report.relation.contains(x, y),
                    star.twice(x) == star.twice(y)
                );
            }
        }
        assert_eq!(report.top_class, dense_elements(&l, &star));
    }

    #[test]
    fn two_chain_congruences() {
        let l = parse_lattice("elements: 0 1\ncover: 0 1\n").unwrap();
        let star = pseudocomplement_table(&l).unwrap();
        let cs = enumerate_congruences(&l, &star);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], Partition::finest(2));
        assert_eq!(cs[1], Partition::coarsest(2));
    }

    #[test]
    fn congruence_enumeration_is_sound_and_complete() {
        let (l, star) = setup(Fixture::Fig1a);
        let cs = enumerate_congruences(&l, &star);
        assert!(cs.contains(&Partition::finest(l.size())));
        assert!(cs.contains(&Partition::coarsest(l.size())));
        // recount: every partition is in the list iff it is compatible
        let mut count = 0;
        for ids in rgs_partitions(l.size()) {
            let p = Partition::from_class_ids(ids.clone());
            let compatible = is_congruence_ids(&l, &star, &ids);
            assert_eq!(cs.contains(&p), compatible);
            if compatible {
                count += 1;
            }
        }
        assert_eq!(cs.len(), count);
    }

    #[test]
    fn congruences_closed_under_intersection() {
        let (l, star) = setup(Fixture::Fig1b);
        let cs = enumerate_congruences(&l, &star);
        for p in &cs {
            for q in &cs {
                // intersection of equivalences: same block in both
                let ids: Vec<usize> = (0..l.size())
                    .map(|x| p.class_ids()[x] * l.size() + q.class_ids()[x])
                    .collect();
                let meet = Partition::from_class_ids(ids);
                assert!(cs.contains(&meet));
            }
        }
    }

    #[test]
    fn class_of_top_examples() {
        let l = parse_lattice("elements: 0 1\ncover: 0 1\n").unwrap();
        assert_eq!(
            class_of_top(&l, &Partition::coarsest(2)).render(&l),
            "{0,1}"
        );
        assert_eq!(class_of_top(&l, &Partition::finest(2)).render(&l), "{1}");
        let (lb, star) = setup(Fixture::Fig1b);
        let a = ElementSet::from_labels(&lb, &["c", "1"]).unwrap();
        let p = theta_of(&lb, &star, &a).unwrap().classes().unwrap();
        assert_eq!(class_of_top(&lb, &p).render(&lb), "{c,1}");
    }
}
