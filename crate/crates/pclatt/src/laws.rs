//! The law registry: every identity, inequality, and structural statement
//! checked by this crate, as data.
//!
//! Each law carries the weakest hypothesis class under which it is
//! asserted. Checking a law on a lattice outside its hypothesis class is
//! allowed and useful (it shows which hypotheses are necessary); the suite
//! flags such failures as informational rather than fatal.
//!
//! Element laws quantify over tuples of elements and are evaluated
//! exhaustively in row-major index order, so the reported counterexample
//! is always the first one. Structural laws quantify over derived objects
//! (filters, deductive systems, congruences) of the whole lattice.

use thiserror::Error;

use crate::classify::{is_distributive, satisfies_stone_identity, Classification, LatticeClass};
use crate::congruence::{class_of_top, enumerate_congruences, theta_report};
use crate::deduction::{enumerate_deductive_systems, enumerate_filters, is_ds_with, DsKind};
use crate::implication::{arrow_table, darrow_table, ImplTable};
use crate::lattice::{Elem, ElementSet, FiniteLattice};
use crate::pseudo::{pseudocomplement_table, UnaryTable};
use crate::verdict::{Binding, Counterexample, Verdict, Violation};

/// Everything a law body needs about one lattice, built once per lattice.
pub struct LawContext<'a> {
    pub l: &'a FiniteLattice,
    pub star: &'a UnaryTable,
    pub arrow: ImplTable,
    pub darrow: ImplTable,
}

impl<'a> LawContext<'a> {
    pub fn new(l: &'a FiniteLattice, star: &'a UnaryTable) -> Self {
        LawContext {
            l,
            star,
            arrow: arrow_table(l, star),
            darrow: darrow_table(l, star),
        }
    }

    fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.l.meet(x, y)
    }
    fn join(&self, x: Elem, y: Elem) -> Elem {
        self.l.join(x, y)
    }
    fn leq(&self, x: Elem, y: Elem) -> bool {
        self.l.leq(x, y)
    }
    fn bot(&self) -> Elem {
        self.l.bottom()
    }
    fn top(&self) -> Elem {
        self.l.top()
    }
    fn star(&self, x: Elem) -> Elem {
        self.star.of(x)
    }
    fn star2(&self, x: Elem) -> Elem {
        self.star.twice(x)
    }
    fn arr(&self, x: Elem, y: Elem) -> Elem {
        self.arrow.of(x, y)
    }
    fn darr(&self, x: Elem, y: Elem) -> Elem {
        self.darrow.of(x, y)
    }

    fn eq(&self, clause: &'static str, lhs: Elem, rhs: Elem) -> LawResult {
        if lhs == rhs {
            Ok(())
        } else {
            Err(Failure::new(clause, Violation::NotEqual { lhs, rhs }))
        }
    }

    fn le(&self, clause: &'static str, lhs: Elem, rhs: Elem) -> LawResult {
        if self.leq(lhs, rhs) {
            Ok(())
        } else {
            Err(Failure::new(clause, Violation::NotLeq { lhs, rhs }))
        }
    }
}

/// A failed clause inside an element law body.
pub struct Failure {
    clause: &'static str,
    extra: Vec<(&'static str, Elem)>,
    violation: Violation,
}

impl Failure {
    fn new(clause: &'static str, violation: Violation) -> Failure {
        Failure {
            clause,
            extra: Vec::new(),
            violation,
        }
    }

    fn at(mut self, extra: &[(&'static str, Elem)]) -> Failure {
        self.extra.extend_from_slice(extra);
        self
    }
}

type LawResult = Result<(), Failure>;

#[derive(Debug)]
enum LawBody {
    Element {
        vars: &'static [&'static str],
        eval: fn(&LawContext, &[Elem]) -> LawResult,
    },
    Structural {
        eval: fn(&LawContext) -> Verdict,
    },
}

/// One registered law.
#[derive(Debug)]
pub struct Law {
    pub id: &'static str,
    pub hypothesis: LatticeClass,
    pub statement: &'static str,
    body: LawBody,
}

impl Law {
    pub fn is_structural(&self) -> bool {
        matches!(self.body, LawBody::Structural { .. })
    }

    /// Evaluate exhaustively on one lattice. The hypothesis class is NOT
    /// checked here; see [`check_law`].
    pub fn evaluate(&self, ctx: &LawContext) -> Verdict {
        match self.body {
            LawBody::Structural { eval } => eval(ctx),
            LawBody::Element { vars, eval } => eval_element_body(ctx, vars, eval),
        }
    }
}

fn eval_element_body(
    ctx: &LawContext,
    vars: &'static [&'static str],
    eval: fn(&LawContext, &[Elem]) -> LawResult,
) -> Verdict {
    let n = ctx.l.size();
    let k = vars.len();
    let mut tuple = vec![0 as Elem; k];
    loop {
        if let Err(f) = eval(ctx, &tuple) {
            let mut assignment: Vec<(String, Binding)> = vars
                .iter()
                .zip(&tuple)
                .map(|(v, &e)| (v.to_string(), Binding::Element(e)))
                .collect();
            assignment.extend(
                f.extra
                    .iter()
                    .map(|&(v, e)| (v.to_string(), Binding::Element(e))),
            );
            return Verdict::fail(Counterexample {
                assignment,
                clause: Some(f.clause),
                violation: f.violation,
            });
        }
        // odometer, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Verdict::pass();
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// A law evaluated on one lattice, with its hypothesis status.
#[derive(Debug)]
pub struct LawVerdict {
    pub law: &'static Law,
    pub hypothesis_met: bool,
    pub verdict: Verdict,
}

impl LawVerdict {
    /// A failure only counts against the law when the hypothesis held.
    pub fn is_fatal(&self) -> bool {
        self.hypothesis_met && !self.verdict.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown law {0:?}")]
pub struct UnknownLaw(pub String);

/// Look up a law by id.
pub fn law(id: &str) -> Option<&'static Law> {
    REGISTRY.iter().find(|l| l.id == id)
}

/// The full registry.
pub fn registry() -> &'static [Law] {
    &REGISTRY
}

/// Evaluate one law on one lattice, recording whether the lattice lies in
/// the law's hypothesis class.
pub fn check_law(l: &FiniteLattice, star: &UnaryTable, id: &str) -> Result<LawVerdict, UnknownLaw> {
    let law = law(id).ok_or_else(|| UnknownLaw(id.to_string()))?;
    let cls = Classification::of(l);
    let ctx = LawContext::new(l, star);
    Ok(evaluate_law(&cls, &ctx, law))
}

/// Evaluate with a precomputed classification (what the suite does).
pub fn evaluate_law(cls: &Classification, ctx: &LawContext, law: &'static Law) -> LawVerdict {
    LawVerdict {
        law,
        hypothesis_met: cls.satisfies(law.hypothesis),
        verdict: law.evaluate(ctx),
    }
}

// ---------------------------------------------------------------------
// element law bodies
// ---------------------------------------------------------------------

fn lem3_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let a = t[0];
    c.eq("0* = 1", c.star(c.bot()), c.top())?;
    c.eq("1* = 0", c.star(c.top()), c.bot())?;
    c.le("a <= a**", a, c.star2(a))?;
    c.eq("a*** = a*", c.star(c.star2(a)), c.star(a))
}

fn lem3_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.le("a <= b implies b* <= a*", c.star(b), c.star(a))
}

fn lem3_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "(a \\/ b)* = a* /\\ b*",
        c.star(c.join(a, b)),
        c.meet(c.star(a), c.star(b)),
    )
}

fn lem3_iv(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "(a /\\ b)** = a** /\\ b**",
        c.star2(c.meet(a, b)),
        c.meet(c.star2(a), c.star2(b)),
    )
}

fn lem3_v(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "a /\\ (a* /\\ b)* = a",
        c.meet(a, c.star(c.meet(c.star(a), b))),
        a,
    )
}

fn arrow_idem_star(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.eq("x** -> y = x -> y", c.arr(c.star2(x), y), c.arr(x, y))?;
    c.eq("x -> (x -> y) = x -> y", c.arr(x, c.arr(x, y)), c.arr(x, y))
}

fn arrow_y_le(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.le("y <= x -> y", y, c.arr(x, y))
}

fn lem4_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.eq("a <= b implies (a -> b)* = 0", c.star(c.arr(a, b)), c.bot())
}

fn lem4_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    c.eq(
        "(a -> b) \\/ c = a -> (b \\/ c)",
        c.join(c.arr(a, b), z),
        c.arr(a, c.join(b, z)),
    )?;
    c.eq(
        "a -> (b \\/ c) = (a -> c) \\/ b",
        c.arr(a, c.join(b, z)),
        c.join(c.arr(a, z), b),
    )
}

fn lem4_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    c.eq(
        "a -> (b -> c) = (a -> c) \\/ (b -> c)",
        c.arr(a, c.arr(b, z)),
        c.join(c.arr(a, z), c.arr(b, z)),
    )?;
    c.eq(
        "a -> (b -> c) = b -> (a -> c)",
        c.arr(a, c.arr(b, z)),
        c.arr(b, c.arr(a, z)),
    )
}

fn lem4_iv(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "(a -> (b -> a))* = 0",
        c.star(c.arr(a, c.arr(b, a))),
        c.bot(),
    )
}

fn lem4_v(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.le("a <= b implies c -> a <= c -> b", c.arr(z, a), c.arr(z, b))?;
    c.le("a <= b implies b -> c <= a -> c", c.arr(b, z), c.arr(a, z))
}

fn darrow_defs(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.eq("x => y = x -> y**", c.darr(x, y), c.arr(x, c.star2(y)))?;
    c.eq(
        "x => y* = x -> y*",
        c.darr(x, c.star(y)),
        c.arr(x, c.star(y)),
    )?;
    c.eq("x => y = x** => y", c.darr(x, y), c.darr(c.star2(x), y))?;
    c.eq("x => y = x => y**", c.darr(x, y), c.darr(x, c.star2(y)))?;
    c.eq(
        "x => y = x** => y**",
        c.darr(x, y),
        c.darr(c.star2(x), c.star2(y)),
    )?;
    c.le("x -> y <= x => y", c.arr(x, y), c.darr(x, y))?;
    c.eq(
        "x => y = y* => x*",
        c.darr(x, y),
        c.darr(c.star(y), c.star(x)),
    )?;
    c.eq(
        "x => y = y* -> x*",
        c.darr(x, y),
        c.arr(c.star(y), c.star(x)),
    )?;
    c.eq("x => 0 = x*", c.darr(x, c.bot()), c.star(x))
}

fn lem9_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.le(
        "a => b <= a => (a => b)",
        c.darr(a, b),
        c.darr(a, c.darr(a, b)),
    )
}

fn lem9_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.le(
        "a <= b implies c => a <= c => b",
        c.darr(z, a),
        c.darr(z, b),
    )?;
    c.le(
        "a <= b implies b => c <= a => c",
        c.darr(b, z),
        c.darr(a, z),
    )
}

fn lem9_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.eq(
        "a <= b implies (a => b)* = 0",
        c.star(c.darr(a, b)),
        c.bot(),
    )
}

fn lem9_iv(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq("(a => b) => a = a**", c.darr(c.darr(a, b), a), c.star2(a))
}

/// The restricted `->` table on `{0, a, a*, a**, 1}`.
fn remark_arrow(c: &LawContext, t: &[Elem]) -> LawResult {
    let a = t[0];
    let (z, o, s, ss) = (c.bot(), c.top(), c.star(a), c.star2(a));
    let a_or_s = c.join(a, s);
    let s_or_ss = c.join(s, ss);
    let elems = [z, a, s, ss, o];
    let expect = [
        [o, o, o, o, o],
        [s, a_or_s, s, s_or_ss, o],
        [ss, ss, s_or_ss, ss, o],
        [s, a_or_s, s, s_or_ss, o],
        [z, a, s, ss, o],
    ];
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if c.arr(x, y) != expect[i][j] {
                return Err(Failure::new(
                    "restricted -> table on {0,a,a*,a**,1}",
                    Violation::NotEqual {
                        lhs: c.arr(x, y),
                        rhs: expect[i][j],
                    },
                )
                .at(&[("x", x), ("y", y)]));
            }
        }
    }
    Ok(())
}

/// The restricted `=>` table on `{0, a, a*, a**, 1}`.
fn remark_darrow(c: &LawContext, t: &[Elem]) -> LawResult {
    let a = t[0];
    let (z, o, s, ss) = (c.bot(), c.top(), c.star(a), c.star2(a));
    let s_or_ss = c.join(s, ss);
    let elems = [z, a, s, ss, o];
    let expect = [
        [o, o, o, o, o],
        [s, s_or_ss, s, s_or_ss, o],
        [ss, ss, s_or_ss, ss, o],
        [s, s_or_ss, s, s_or_ss, o],
        [z, ss, s, ss, o],
    ];
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if c.darr(x, y) != expect[i][j] {
                return Err(Failure::new(
                    "restricted => table on {0,a,a*,a**,1}",
                    Violation::NotEqual {
                        lhs: c.darr(x, y),
                        rhs: expect[i][j],
                    },
                )
                .at(&[("x", x), ("y", y)]));
            }
        }
    }
    Ok(())
}

fn dense_join(c: &LawContext, t: &[Elem]) -> LawResult {
    let a = t[0];
    c.eq("(a \\/ a*)* = 0", c.star(c.join(a, c.star(a))), c.bot())
}

fn lem1_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.le("a /\\ (a -> b) <= b", c.meet(a, c.arr(a, b)), b)
}

fn lem1_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    if !c.leq(a, c.arr(b, z)) {
        return Ok(());
    }
    c.le("a <= b -> c implies a /\\ b <= c", c.meet(a, b), z)
}

fn lem1_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if c.arr(a, b) != c.top() {
        return Ok(());
    }
    c.le("a -> b = 1 implies a <= b", a, b)
}

fn lem7_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !(c.meet(a, b) == c.bot() && c.join(a, b) == c.top()) {
        return Ok(());
    }
    c.eq("complements are pseudocomplements: a* = b", c.star(a), b)?;
    c.eq("complements are pseudocomplements: b* = a", c.star(b), a)
}

fn lem7_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z, d] = [t[0], t[1], t[2], t[3]];
    let complemented = |x, y| c.meet(x, y) == c.bot() && c.join(x, y) == c.top();
    if !(complemented(a, z) && complemented(b, d)) {
        return Ok(());
    }
    c.eq(
        "(a \\/ b) /\\ (c /\\ d) = 0",
        c.meet(c.join(a, b), c.meet(z, d)),
        c.bot(),
    )?;
    c.eq(
        "(a \\/ b) \\/ (c /\\ d) = 1",
        c.join(c.join(a, b), c.meet(z, d)),
        c.top(),
    )?;
    c.eq(
        "(a /\\ b) /\\ (c \\/ d) = 0",
        c.meet(c.meet(a, b), c.join(z, d)),
        c.bot(),
    )?;
    c.eq(
        "(a /\\ b) \\/ (c \\/ d) = 1",
        c.join(c.meet(a, b), c.join(z, d)),
        c.top(),
    )
}

fn lem8_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.le("a /\\ (a => b) <= b**", c.meet(a, c.darr(a, b)), c.star2(b))
}

fn lem8_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    if !c.leq(a, c.darr(b, z)) {
        return Ok(());
    }
    c.le(
        "a <= b => c implies a /\\ b <= c**",
        c.meet(a, b),
        c.star2(z),
    )
}

fn lem8_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if c.arr(a, b) != c.darr(a, b) {
        return Ok(());
    }
    c.eq(
        "a -> b = a => b implies a** /\\ b = a** /\\ b**",
        c.meet(c.star2(a), b),
        c.meet(c.star2(a), c.star2(b)),
    )
}

fn lem2_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !c.leq(a, c.star2(b)) {
        return Ok(());
    }
    c.eq("a <= b** implies a => b = 1", c.darr(a, b), c.top())
}

fn lem2_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq("a => (b => a) = 1", c.darr(a, c.darr(b, a)), c.top())
}

fn lem2_i_prime(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    if !c.leq(a, b) {
        return Ok(());
    }
    c.eq("a <= b implies a => b = 1", c.darr(a, b), c.top())
}

fn lem6_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "(a \\/ b)** = a** \\/ b**",
        c.star2(c.join(a, b)),
        c.join(c.star2(a), c.star2(b)),
    )
}

fn lem6_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    c.eq(
        "(a /\\ b)* = a* \\/ b*",
        c.star(c.meet(a, b)),
        c.join(c.star(a), c.star(b)),
    )
}

fn prop1_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    let (sa, sb) = (c.star(a), c.star(b));
    c.eq(
        "(a* -> b*) -> b* = a* \\/ b*",
        c.arr(c.arr(sa, sb), sb),
        c.join(sa, sb),
    )?;
    c.eq(
        "(b* -> a*) -> a* = a* \\/ b*",
        c.arr(c.arr(sb, sa), sa),
        c.join(sa, sb),
    )
}

fn prop1_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    let sb = c.star(b);
    let fwd = c.leq(c.meet(a, sb), z);
    let bwd = c.leq(a, c.arr(sb, z));
    if fwd && !bwd {
        return c.le("a /\\ b* <= c implies a <= b* -> c", a, c.arr(sb, z));
    }
    if bwd && !fwd {
        return c.le("a <= b* -> c implies a /\\ b* <= c", c.meet(a, sb), z);
    }
    Ok(())
}

fn th1_i(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    let rhs = c.join(c.star2(a), c.star2(b));
    c.eq("(a => b) => b = a** \\/ b**", c.darr(c.darr(a, b), b), rhs)?;
    c.eq("(b => a) => a = a** \\/ b**", c.darr(c.darr(b, a), a), rhs)
}

fn th1_ii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    let sb = c.star(b);
    let fwd = c.leq(c.meet(a, sb), c.star2(z));
    let bwd = c.leq(a, c.darr(sb, z));
    if fwd && !bwd {
        return c.le("a /\\ b* <= c** implies a <= b* => c", a, c.darr(sb, z));
    }
    if bwd && !fwd {
        return c.le(
            "a <= b* => c implies a /\\ b* <= c**",
            c.meet(a, sb),
            c.star2(z),
        );
    }
    Ok(())
}

fn th1_iii(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    let same = c.arr(a, b) == c.darr(a, b);
    let lhs = c.meet(c.star2(a), b);
    let rhs = c.meet(c.star2(a), c.star2(b));
    if same && lhs != rhs {
        return c.eq("a -> b = a => b implies a** /\\ b = a** /\\ b**", lhs, rhs);
    }
    if !same && lhs == rhs {
        return c.eq(
            "a** /\\ b = a** /\\ b** implies a -> b = a => b",
            c.arr(a, b),
            c.darr(a, b),
        );
    }
    Ok(())
}

fn th1_iv(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    c.eq(
        "a => (b => c) = (a => c) \\/ (b => c)",
        c.darr(a, c.darr(b, z)),
        c.join(c.darr(a, z), c.darr(b, z)),
    )?;
    c.eq(
        "a => (b => c) = b => (a => c)",
        c.darr(a, c.darr(b, z)),
        c.darr(b, c.darr(a, z)),
    )
}

fn th1_v(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b, z] = [t[0], t[1], t[2]];
    let (sb, sc) = (c.star(b), c.star(z));
    c.eq(
        "(a => b*) \\/ c* = a => (b* \\/ c*)",
        c.join(c.darr(a, sb), sc),
        c.darr(a, c.join(sb, sc)),
    )?;
    c.eq(
        "a => (b* \\/ c*) = (a => c*) \\/ b*",
        c.darr(a, c.join(sb, sc)),
        c.join(c.darr(a, sc), sb),
    )
}

fn th1_vi(c: &LawContext, t: &[Elem]) -> LawResult {
    let [a, b] = [t[0], t[1]];
    let unit = c.darr(a, b) == c.top();
    let below = c.leq(a, c.star2(b));
    if unit && !below {
        return c.le("a => b = 1 implies a <= b**", a, c.star2(b));
    }
    if below && !unit {
        return c.eq("a <= b** implies a => b = 1", c.darr(a, b), c.top());
    }
    Ok(())
}

fn axiom_a_modified(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.eq("(x => y) => x = x**", c.darr(c.darr(x, y), x), c.star2(x))
}

fn axiom_b(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.eq(
        "(x => y) => y = (y => x) => x",
        c.darr(c.darr(x, y), y),
        c.darr(c.darr(y, x), x),
    )
}

fn axiom_c(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y, z] = [t[0], t[1], t[2]];
    c.eq(
        "x => (y => z) = y => (x => z)",
        c.darr(x, c.darr(y, z)),
        c.darr(y, c.darr(x, z)),
    )
}

fn unit_laws(c: &LawContext, t: &[Elem]) -> LawResult {
    let x = t[0];
    c.eq("x => 1 = 1", c.darr(x, c.top()), c.top())?;
    c.eq("1 => x = x**", c.darr(c.top(), x), c.star2(x))
}

fn stone_char_1(c: &LawContext, t: &[Elem]) -> LawResult {
    let x = t[0];
    c.eq("x /\\ (0 -> 0) = x", c.meet(x, c.arr(c.bot(), c.bot())), x)
}

fn stone_char_2(c: &LawContext, t: &[Elem]) -> LawResult {
    let x = t[0];
    c.eq("x /\\ (x -> 0) = 0", c.meet(x, c.arr(x, c.bot())), c.bot())
}

fn stone_char_3(c: &LawContext, t: &[Elem]) -> LawResult {
    let [x, y] = [t[0], t[1]];
    c.eq(
        "x /\\ ((x /\\ y) -> 0) = x /\\ (y -> 0)",
        c.meet(x, c.arr(c.meet(x, y), c.bot())),
        c.meet(x, c.arr(y, c.bot())),
    )
}

fn stone_char_4(c: &LawContext, t: &[Elem]) -> LawResult {
    let x = t[0];
    let neg = c.arr(x, c.bot());
    c.eq(
        "(x -> 0) \\/ ((x -> 0) -> 0) = 1",
        c.join(neg, c.arr(neg, c.bot())),
        c.top(),
    )
}

// ---------------------------------------------------------------------
// structural law bodies
// ---------------------------------------------------------------------

fn nest(name: &'static str, set: ElementSet, inner: Counterexample) -> Counterexample {
    let mut assignment = vec![(name.to_string(), Binding::Set(set))];
    assignment.extend(inner.assignment);
    Counterexample {
        assignment,
        clause: inner.clause,
        violation: inner.violation,
    }
}

/// Every filter is a deductive system of the first kind.
fn lem10(c: &LawContext) -> Verdict {
    for f in enumerate_filters(c.l) {
        let v = is_ds_with(c.l, &c.arrow, &f);
        if let Some(cex) = v.counterexample {
            return Verdict::fail(nest("F", f, cex));
        }
    }
    Verdict::pass()
}

/// Every second-kind deductive system is upward closed.
fn lem5_i(c: &LawContext) -> Verdict {
    for a in enumerate_deductive_systems(c.l, c.star, DsKind::Second) {
        for x in a.iter() {
            for y in c.l.elements() {
                if c.leq(x, y) && !a.contains(y) {
                    return Verdict::fail(nest(
                        "A",
                        a.clone(),
                        Counterexample::elements(
                            &["a", "b"],
                            &[x, y],
                            Violation::NotIn { element: y },
                        )
                        .with_clause("a in A and a <= b imply b in A"),
                    ));
                }
            }
        }
    }
    Verdict::pass()
}

/// Every second-kind deductive system is a first-kind deductive system.
fn lem5_ii(c: &LawContext) -> Verdict {
    for a in enumerate_deductive_systems(c.l, c.star, DsKind::Second) {
        let v = is_ds_with(c.l, &c.arrow, &a);
        if let Some(cex) = v.counterexample {
            return Verdict::fail(nest("A", a, cex));
        }
    }
    Verdict::pass()
}

/// The top class of every congruence is a first-kind deductive system and
/// a sublattice.
fn top_class_ds(c: &LawContext) -> Verdict {
    for p in enumerate_congruences(c.l, c.star) {
        let t = class_of_top(c.l, &p);
        let v = is_ds_with(c.l, &c.arrow, &t);
        if let Some(cex) = v.counterexample {
            return Verdict::fail(nest("[1]T", t, cex));
        }
        for x in t.iter() {
            for y in t.iter() {
                for (val, clause) in [
                    (c.join(x, y), "closed under \\/"),
                    (c.meet(x, y), "closed under /\\"),
                ] {
                    if !t.contains(val) {
                        return Verdict::fail(nest(
                            "[1]T",
                            t.clone(),
                            Counterexample::elements(
                                &["x", "y"],
                                &[x, y],
                                Violation::NotIn { element: val },
                            )
                            .with_clause(clause),
                        ));
                    }
                }
            }
        }
    }
    Verdict::pass()
}

/// For every second-kind deductive system `A`: `Theta(A)` is reflexive,
/// symmetric, compatible with the three operations, its top class is
/// `{x : x** in A}`, and it is transitive whenever `A` is meet-closed.
fn theta_theorem(c: &LawContext) -> Verdict {
    for a in enumerate_deductive_systems(c.l, c.star, DsKind::Second) {
        let report = theta_report(c.l, c.star, &a);
        if !report.theorem_holds() {
            let inner = report
                .first_failure()
                .and_then(|v| v.counterexample.clone())
                .expect("failed theorem part carries a counterexample");
            return Verdict::fail(nest("A", a, inner));
        }
    }
    Verdict::pass()
}

/// Evaluate the four characterization identities against a candidate
/// table. The identity bodies only consult the context's arrow table,
/// `/\`, and `\/`, so any star table works as padding.
pub(crate) fn identity_verdicts(
    l: &FiniteLattice,
    star: &UnaryTable,
    table: &ImplTable,
) -> [Verdict; 4] {
    let ctx = LawContext {
        l,
        star,
        arrow: table.clone(),
        darrow: table.clone(),
    };
    [
        eval_element_body(&ctx, &["x"], stone_char_1),
        eval_element_body(&ctx, &["x"], stone_char_2),
        eval_element_body(&ctx, &["x", "y"], stone_char_3),
        eval_element_body(&ctx, &["x"], stone_char_4),
    ]
}

/// Both directions of the Stone characterization: the four `->` identities
/// hold for the canonical arrow table iff the lattice is Stone.
fn stone_char(c: &LawContext) -> Verdict {
    let idents = identity_verdicts(c.l, c.star, &c.arrow);
    let idents_hold = idents.iter().all(|v| v.holds);
    let distributive = is_distributive(c.l);
    let stone_id = satisfies_stone_identity(c.l, c.star);
    let stone = distributive.holds && stone_id.holds;
    if idents_hold == stone {
        return Verdict::pass();
    }
    if stone {
        // forward direction broken: an identity fails on a Stone lattice
        let failing = idents.into_iter().find(|v| !v.holds).unwrap();
        return failing;
    }
    // backward direction broken: identities hold but the lattice is not
    // Stone; witness whichever classification check failed
    let witness = if !distributive.holds {
        distributive
    } else {
        stone_id
    };
    Verdict::fail(
        witness
            .counterexample
            .expect("failed classification carries a counterexample")
            .with_clause("identities (1)-(4) hold but the lattice is not Stone"),
    )
}

// ---------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------

macro_rules! element_law {
    ($id:literal, $class:ident, $vars:expr, $statement:literal, $eval:ident) => {
        Law {
            id: $id,
            hypothesis: LatticeClass::$class,
            statement: $statement,
            body: LawBody::Element {
                vars: &$vars,
                eval: $eval,
            },
        }
    };
}

macro_rules! structural_law {
    ($id:literal, $class:ident, $statement:literal, $eval:ident) => {
        Law {
            id: $id,
            hypothesis: LatticeClass::$class,
            statement: $statement,
            body: LawBody::Structural { eval: $eval },
        }
    };
}

static REGISTRY: [Law; 55] = [
    // star calculus, any pseudocomplemented lattice
    element_law!("lem3-i", Pseudocomplemented, ["a"],
        "0* = 1, 1* = 0, a <= a**, a*** = a*", lem3_i),
    element_law!("lem3-ii", Pseudocomplemented, ["a", "b"],
        "a <= b implies b* <= a*", lem3_ii),
    element_law!("lem3-iii", Pseudocomplemented, ["a", "b"],
        "(a \\/ b)* = a* /\\ b*", lem3_iii),
    element_law!("lem3-iv", Pseudocomplemented, ["a", "b"],
        "(a /\\ b)** = a** /\\ b**", lem3_iv),
    element_law!("lem3-v", Pseudocomplemented, ["a", "b"],
        "a /\\ (a* /\\ b)* = a", lem3_v),
    // the single arrow, any pseudocomplemented lattice
    element_law!("arrow-idem-star", Pseudocomplemented, ["x", "y"],
        "x** -> y = x -> y = x -> (x -> y)", arrow_idem_star),
    element_law!("arrow-y-le", Pseudocomplemented, ["x", "y"],
        "y <= x -> y", arrow_y_le),
    element_law!("lem4-i", Pseudocomplemented, ["a", "b"],
        "a <= b implies (a -> b)* = 0", lem4_i),
    element_law!("lem4-ii", Pseudocomplemented, ["a", "b", "c"],
        "(a -> b) \\/ c = a -> (b \\/ c) = (a -> c) \\/ b", lem4_ii),
    element_law!("lem4-iii", Pseudocomplemented, ["a", "b", "c"],
        "a -> (b -> c) = (a -> c) \\/ (b -> c) = b -> (a -> c)", lem4_iii),
    element_law!("lem4-iv", Pseudocomplemented, ["a", "b"],
        "(a -> (b -> a))* = 0", lem4_iv),
    element_law!("lem4-v", Pseudocomplemented, ["a", "b", "c"],
        "a <= b implies c -> a <= c -> b and b -> c <= a -> c", lem4_v),
    // the double arrow, any pseudocomplemented lattice
    element_law!("darrow-defs", Pseudocomplemented, ["x", "y"],
        "x => y = x -> y** = x** => y = x => y** = x** => y**; x => y* = x -> y*; x => y = y* => x* = y* -> x*; x -> y <= x => y; x => 0 = x*",
        darrow_defs),
    element_law!("lem9-i", Pseudocomplemented, ["a", "b"],
        "a => b <= a => (a => b)", lem9_i),
    element_law!("lem9-ii", Pseudocomplemented, ["a", "b", "c"],
        "a <= b implies c => a <= c => b and b => c <= a => c", lem9_ii),
    element_law!("lem9-iii", Pseudocomplemented, ["a", "b"],
        "a <= b implies (a => b)* = 0", lem9_iii),
    element_law!("lem9-iv", Pseudocomplemented, ["a", "b"],
        "(a => b) => a = a**", lem9_iv),
    element_law!("remark-arrow", Pseudocomplemented, ["a"],
        "the -> table restricted to {0,a,a*,a**,1} has its canonical form", remark_arrow),
    element_law!("remark-darrow", Pseudocomplemented, ["a"],
        "the => table restricted to {0,a,a*,a**,1} has its canonical form", remark_darrow),
    // distributive pseudocomplemented lattices
    element_law!("dense-join", Distributive, ["a"],
        "a \\/ a* is dense", dense_join),
    element_law!("lem1-i", Distributive, ["a", "b"],
        "a /\\ (a -> b) <= b", lem1_i),
    element_law!("lem1-ii", Distributive, ["a", "b", "c"],
        "a <= b -> c implies a /\\ b <= c", lem1_ii),
    element_law!("lem1-iii", Distributive, ["a", "b"],
        "a -> b = 1 implies a <= b", lem1_iii),
    element_law!("lem7-i", Distributive, ["a", "b"],
        "complemented pairs are pseudocomplements of each other", lem7_i),
    element_law!("lem7-ii", Distributive, ["a", "b", "c", "d"],
        "complements compose: a,c and b,d complemented give a \\/ b, c /\\ d and a /\\ b, c \\/ d complemented",
        lem7_ii),
    element_law!("lem8-i", Distributive, ["a", "b"],
        "a /\\ (a => b) <= b**", lem8_i),
    element_law!("lem8-ii", Distributive, ["a", "b", "c"],
        "a <= b => c implies a /\\ b <= c**", lem8_ii),
    element_law!("lem8-iii", Distributive, ["a", "b"],
        "a -> b = a => b implies a** /\\ b = a** /\\ b**", lem8_iii),
    // Stone identity without distributivity
    element_law!("lem2-i", StoneIdentity, ["a", "b"],
        "a <= b** implies a => b = 1", lem2_i),
    element_law!("lem2-ii", StoneIdentity, ["a", "b"],
        "a => (b => a) = 1", lem2_ii),
    element_law!("lem2-i'", StoneIdentity, ["a", "b"],
        "a <= b implies a => b = 1", lem2_i_prime),
    // Stone lattices
    element_law!("lem6-i", Stone, ["a", "b"],
        "(a \\/ b)** = a** \\/ b**", lem6_i),
    element_law!("lem6-ii", Stone, ["a", "b"],
        "(a /\\ b)* = a* \\/ b*", lem6_ii),
    element_law!("prop1-i", Stone, ["a", "b"],
        "(a* -> b*) -> b* = a* \\/ b* = (b* -> a*) -> a*", prop1_i),
    element_law!("prop1-ii", Stone, ["a", "b", "c"],
        "a /\\ b* <= c iff a <= b* -> c", prop1_ii),
    element_law!("th1-i", Stone, ["a", "b"],
        "(a => b) => b = a** \\/ b** = (b => a) => a", th1_i),
    element_law!("th1-ii", Stone, ["a", "b", "c"],
        "a /\\ b* <= c** iff a <= b* => c", th1_ii),
    element_law!("th1-iii", Stone, ["a", "b"],
        "a -> b = a => b iff a** /\\ b = a** /\\ b**", th1_iii),
    element_law!("th1-iv", Stone, ["a", "b", "c"],
        "a => (b => c) = (a => c) \\/ (b => c) = b => (a => c)", th1_iv),
    element_law!("th1-v", Stone, ["a", "b", "c"],
        "(a => b*) \\/ c* = a => (b* \\/ c*) = (a => c*) \\/ b*", th1_v),
    element_law!("th1-vi", Stone, ["a", "b"],
        "a => b = 1 iff a <= b**", th1_vi),
    element_law!("axiom-a-modified", Stone, ["x", "y"],
        "(x => y) => x = x**", axiom_a_modified),
    element_law!("axiom-b", Stone, ["x", "y"],
        "(x => y) => y = (y => x) => x", axiom_b),
    element_law!("axiom-c", Stone, ["x", "y", "z"],
        "x => (y => z) = y => (x => z)", axiom_c),
    element_law!("unit-laws", Stone, ["x"],
        "x => 1 = 1 and 1 => x = x**", unit_laws),
    // the four identities of the -> axiomatization, forward direction
    element_law!("stone-char-1", Stone, ["x"],
        "x /\\ (0 -> 0) = x", stone_char_1),
    element_law!("stone-char-2", Stone, ["x"],
        "x /\\ (x -> 0) = 0", stone_char_2),
    element_law!("stone-char-3", Stone, ["x", "y"],
        "x /\\ ((x /\\ y) -> 0) = x /\\ (y -> 0)", stone_char_3),
    element_law!("stone-char-4", Stone, ["x"],
        "(x -> 0) \\/ ((x -> 0) -> 0) = 1", stone_char_4),
    // structural statements
    structural_law!("lem10", Distributive,
        "every filter is a first-kind deductive system", lem10),
    structural_law!("lem5-i", StoneIdentity,
        "every second-kind deductive system is upward closed", lem5_i),
    structural_law!("lem5-ii", StoneIdentity,
        "every second-kind deductive system is a first-kind deductive system", lem5_ii),
    structural_law!("top-class-ds", Pseudocomplemented,
        "the top class of every congruence is a first-kind deductive system and a sublattice",
        top_class_ds),
    structural_law!("theta-theorem", Stone,
        "Theta(A) of every second-kind deductive system is reflexive, symmetric, compatible, has top class {x : x** in A}, and is transitive when A is meet-closed",
        theta_theorem),
    structural_law!("stone-char", Distributive,
        "the four -> identities hold for the arrow table iff the lattice is Stone",
        stone_char),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("the lattice is not distributive")]
    NotDistributive { verdict: Verdict },
}

/// Result of checking the four defining identities of the `->`-based
/// axiomatization against a candidate implication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneCharacterization {
    /// Identities (1) `x /\ (0 -> 0) = x`, (2) `x /\ (x -> 0) = 0`,
    /// (3) `x /\ ((x /\ y) -> 0) = x /\ (y -> 0)`,
    /// (4) `(x -> 0) \/ ((x -> 0) -> 0) = 1`.
    pub identities: [Verdict; 4],
    /// Whether the lattice itself is Stone.
    pub stone: Verdict,
    /// `x -> 0` agrees with the pseudocomplement, checked when the
    /// identities hold.
    pub derived_star_matches: Option<Verdict>,
}

impl StoneCharacterization {
    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|v| v.holds)
    }

    /// The characterization's equivalence: identities hold iff Stone.
    pub fn equivalent(&self) -> bool {
        self.identities_hold() == self.stone.holds
    }

    /// Overall verdict: holds iff all four identities hold.
    pub fn verdict(&self) -> Verdict {
        match self.identities.iter().find(|v| !v.holds) {
            None => Verdict::pass(),
            Some(v) => v.clone(),
        }
    }
}

/// Check the Stone characterization on a bounded distributive lattice.
///
/// `candidate` supplies the implication table to test; by default the
/// arrow table derived from the pseudocomplement is used.
pub fn check_stone_characterization(
    l: &FiniteLattice,
    candidate: Option<&ImplTable>,
) -> Result<StoneCharacterization, CharacterizationError> {
    let distributive = is_distributive(l);
    if !distributive.holds {
        return Err(CharacterizationError::NotDistributive {
            verdict: distributive,
        });
    }
    let star =
        pseudocomplement_table(l).expect("a finite distributive lattice is pseudocomplemented");
    let canonical;
    let table = match candidate {
        Some(t) => t,
        None => {
            canonical = arrow_table(l, &star);
            &canonical
        }
    };
    let identities = identity_verdicts(l, &star, table);
    let stone = crate::classify::is_stone(l, &star);
    let derived_star_matches = identities.iter().all(|v| v.holds).then(|| {
        for x in l.elements() {
            let derived = table.of(x, l.bottom());
            if derived != star.of(x) {
                return Verdict::fail(
                    Counterexample::elements(
                        &["x"],
                        &[x],
                        Violation::NotEqual {
                            lhs: derived,
                            rhs: star.of(x),
                        },
                    )
                    .with_clause("x -> 0 = x*"),
                );
            }
        }
        Verdict::pass()
    });
    Ok(StoneCharacterization {
        identities,
        stone,
        derived_star_matches,
    })
}
