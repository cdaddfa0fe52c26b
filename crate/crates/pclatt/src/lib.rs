//! Finite pseudocomplemented lattices, the implications derived from
//! them, and exhaustive verification of the laws they satisfy.
//!
//! The pieces fit together like this:
//!
//! * [`lattice`] builds finite bounded lattices from cover relations and
//!   answers order/meet/join queries.
//! * [`pseudo`] derives the pseudocomplement `x*` and the dense elements.
//! * [`classify`] decides distributivity, the Stone identity, and the
//!   Stone/Brouwerian classes.
//! * [`implication`] tabulates `x -> y = x* \/ y` and `x => y = x* \/ y**`.
//! * [`laws`] is a registry of every checked identity and structural
//!   statement, each evaluated exhaustively with counterexample reporting.
//! * [`deduction`] and [`congruence`] handle deductive systems, filters,
//!   congruences, and the relation `Theta(A)`.
//! * [`genlat`] enumerates all bounded lattices up to 8 elements, the
//!   test population for the whole registry.
//! * [`suite`] runs the full campaign and produces a machine-readable
//!   report.
//! * [`io`] parses and serializes the lattice text format, exports DOT,
//!   and bundles three example lattices.
//!
//! ```
//! use pclatt::{Fixture, pseudocomplement_table, dense_elements};
//!
//! let l = Fixture::Fig1b.lattice();
//! let star = pseudocomplement_table(&l).unwrap();
//! let a = l.element("a").unwrap();
//! assert_eq!(l.label(star.of(a)), "d");
//! assert_eq!(dense_elements(&l, &star).render(&l), "{c,1}");
//! ```

pub mod classify;
pub mod congruence;
pub mod deduction;
pub mod genlat;
pub mod implication;
pub mod io;
pub mod lattice;
pub mod laws;
pub mod pseudo;
pub mod suite;
pub mod verdict;

pub use classify::{
    is_brouwerian, is_distributive, is_stone, satisfies_stone_identity, Classification,
    LatticeClass,
};
pub use congruence::{
    check_theta_theorem, class_of_top, enumerate_congruences, theta_of, theta_relation,
    theta_report, BinRel, CongruenceError, Partition, ThetaReport,
};
pub use deduction::{
    ds_closure, enumerate_deductive_systems, enumerate_filters, is_deductive_system, is_filter,
    DsKind,
};
pub use genlat::{
    are_isomorphic, canonical_key, filter_family, generate_all, GenError, LatticeFamily,
};
pub use implication::{arrow_table, darrow_table, ImplKind, ImplTable};
pub use io::{export_dot, parse_lattice, serialize_lattice, Fixture, ParseError};
pub use lattice::{Elem, ElementSet, FiniteLattice, LatticeError};
pub use laws::{
    check_law, check_stone_characterization, law, registry, Law, LawContext, LawVerdict,
    StoneCharacterization, UnknownLaw,
};
pub use pseudo::{dense_elements, pseudocomplement_table, PseudoError, UnaryKind, UnaryTable};
pub use suite::{run_suite, SuiteEntry, SuiteReport};
pub use verdict::{Binding, Counterexample, Verdict, Violation};

#[cfg(doctest)]
mod book {
    //! Every code block in the guide runs as a doctest, keeping the book
    //! and the library in sync.
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }
    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Lattices, "../../../book/src/lattices.md");
    chapter!(Pseudocomplements, "../../../book/src/pseudocomplements.md");
    chapter!(Implications, "../../../book/src/implications.md");
    chapter!(DeductiveSystems, "../../../book/src/deductive-systems.md");
    chapter!(Congruences, "../../../book/src/congruences.md");
    chapter!(Enumeration, "../../../book/src/enumeration.md");
    chapter!(Cli, "../../../book/src/cli.md");
    chapter!(Readme, "../../../README.md");
}
