//! The two derived implications on a pseudocomplemented lattice.
//!
//! Both are term operations in `\/`, `/\`, and `*`:
//!
//! * single arrow: `x -> y := x* \/ y`
//! * double arrow: `x => y := x* \/ y**`
//!
//! `x -> y <= x => y` always, and `x => 0 = x -> 0 = x*`.

use crate::lattice::{Elem, FiniteLattice};
use crate::pseudo::UnaryTable;

/// Which implication a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImplKind {
    /// `x -> y = x* \/ y`
    Arrow,
    /// `x => y = x* \/ y**`
    DArrow,
}

impl ImplKind {
    /// ASCII rendering used by the CLI.
    pub fn symbol(self) -> &'static str {
        match self {
            ImplKind::Arrow => "->",
            ImplKind::DArrow => "=>",
        }
    }
}

/// A total binary operation table over a lattice's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplTable {
    kind: ImplKind,
    n: usize,
    map: Vec<Elem>,
}

impl ImplTable {
    pub fn kind(&self) -> ImplKind {
        self.kind
    }

    pub fn of(&self, x: Elem, y: Elem) -> Elem {
        self.map[x * self.n + y]
    }
}

fn fill(l: &FiniteLattice, kind: ImplKind, f: impl Fn(Elem, Elem) -> Elem) -> ImplTable {
    let n = l.size();
    let mut map = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            map.push(f(x, y));
        }
    }
    ImplTable { kind, n, map }
}

/// The `->` table: `x -> y = x* \/ y`.
pub fn arrow_table(l: &FiniteLattice, star: &UnaryTable) -> ImplTable {
    fill(l, ImplKind::Arrow, |x, y| l.join(star.of(x), y))
}

/// The `=>` table: `x => y = x* \/ y**`.
pub fn darrow_table(l: &FiniteLattice, star: &UnaryTable) -> ImplTable {
    fill(l, ImplKind::DArrow, |x, y| {
        l.join(star.of(x), star.twice(y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::Fixture;
    use crate::pseudo::pseudocomplement_table;

    fn table_labels(l: &FiniteLattice, t: &ImplTable) -> Vec<Vec<String>> {
        l.elements()
            .map(|x| {
                l.elements()
                    .map(|y| l.label(t.of(x, y)).to_string())
                    .collect()
            })
            .collect()
    }

    fn rows(rows: &[&str]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.split_whitespace().map(str::to_string).collect())
            .collect()
    }

    #[test]
    fn fig1a_arrow() {
        let l = Fixture::Fig1a.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = arrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1",
                "b 1 b 1 1",
                "c c 1 c 1",
                "b 1 b 1 1",
                "0 a b c 1"
            ])
        );
        let (b, z) = (l.element("b").unwrap(), l.element("0").unwrap());
        assert_eq!(l.label(t.of(b, z)), "c");
    }

    #[test]
    fn fig1b_arrow() {
        let l = Fixture::Fig1b.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = arrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1 1",
                "d 1 d 1 d 1",
                "a a c c 1 1",
                "0 a b c d 1",
                "a a c c 1 1",
                "0 a b c d 1",
            ])
        );
    }

    #[test]
    fn fig1c_arrow() {
        let l = Fixture::Fig1c.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = arrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1",
                "b c b c 1",
                "a a c c 1",
                "0 a b c 1",
                "0 a b c 1"
            ])
        );
    }

    #[test]
    fn fig1a_darrow() {
        let l = Fixture::Fig1a.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = darrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1",
                "b 1 b 1 1",
                "c c 1 c 1",
                "b 1 b 1 1",
                "0 c b c 1"
            ])
        );
    }

    #[test]
    fn fig1b_darrow() {
        let l = Fixture::Fig1b.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = darrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1 1",
                "d 1 d 1 d 1",
                "a a 1 1 1 1",
                "0 a d 1 d 1",
                "a a 1 1 1 1",
                "0 a d 1 d 1",
            ])
        );
        let (b, c) = (l.element("b").unwrap(), l.element("c").unwrap());
        assert_eq!(l.label(t.of(b, c)), "1");
    }

    #[test]
    fn fig1c_darrow() {
        let l = Fixture::Fig1c.lattice();
        let star = pseudocomplement_table(&l).unwrap();
        let t = darrow_table(&l, &star);
        assert_eq!(
            table_labels(&l, &t),
            rows(&[
                "1 1 1 1 1",
                "b c b 1 1",
                "a a c 1 1",
                "0 a b 1 1",
                "0 a b 1 1"
            ])
        );
    }

    #[test]
    fn arrow_to_bottom_is_star() {
        for f in Fixture::ALL {
            let l = f.lattice();
            let star = pseudocomplement_table(&l).unwrap();
            let arrow = arrow_table(&l, &star);
            let darrow = darrow_table(&l, &star);
            for x in l.elements() {
                assert_eq!(arrow.of(x, l.bottom()), star.of(x));
                assert_eq!(darrow.of(x, l.bottom()), star.of(x));
            }
        }
    }

    #[test]
    fn arrow_below_darrow() {
        for f in Fixture::ALL {
            let l = f.lattice();
            let star = pseudocomplement_table(&l).unwrap();
            let arrow = arrow_table(&l, &star);
            let darrow = darrow_table(&l, &star);
            for x in l.elements() {
                for y in l.elements() {
                    assert!(l.leq(arrow.of(x, y), darrow.of(x, y)));
                }
            }
        }
    }
}
