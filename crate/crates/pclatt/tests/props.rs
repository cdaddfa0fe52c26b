//! Property tests over randomly chosen generated lattices and subsets.
//! The exhaustive sweeps live in the acceptance suite; these cover the
//! algebraic invariants with random sampling across sizes.

use proptest::prelude::*;

use pclatt::deduction::{ds_closure, is_deductive_system, DsKind};
use pclatt::genlat::generate_all;
use pclatt::implication::{arrow_table, darrow_table};
use pclatt::io::{parse_lattice, serialize_lattice};
use pclatt::lattice::{ElementSet, FiniteLattice};
use pclatt::pseudo::pseudocomplement_table;

fn arb_lattice() -> impl Strategy<Value = FiniteLattice> {
    (2usize..=6, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let family: Vec<FiniteLattice> = generate_all(n, true).unwrap().collect();
        family[idx.index(family.len())].clone()
    })
}

fn arb_lattice_and_mask() -> impl Strategy<Value = (FiniteLattice, u64)> {
    (arb_lattice(), any::<u64>()).prop_map(|(l, raw)| {
        let mask = raw & ((1 << l.size()) - 1);
        (l, mask)
    })
}

proptest! {
    #[test]
    fn lattice_operations_are_well_behaved(l in arb_lattice()) {
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(l.meet(x, y), l.meet(y, x));
                prop_assert_eq!(l.join(x, y), l.join(y, x));
                prop_assert_eq!(l.join(x, l.meet(x, y)), x);
                prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                for z in l.elements() {
                    prop_assert_eq!(l.meet(x, l.meet(y, z)), l.meet(l.meet(x, y), z));
                    prop_assert_eq!(l.join(x, l.join(y, z)), l.join(l.join(x, y), z));
                }
            }
        }
    }

    #[test]
    fn serialization_round_trips(l in arb_lattice()) {
        let back = parse_lattice(&serialize_lattice(&l)).unwrap();
        prop_assert_eq!(l, back);
    }

    #[test]
    fn star_is_antitone_and_involutive_on_its_image(l in arb_lattice()) {
        let Ok(star) = pseudocomplement_table(&l) else {
            return Ok(());
        };
        for x in l.elements() {
            prop_assert_eq!(star.of(star.twice(x)), star.of(x));
            for y in l.elements() {
                if l.leq(x, y) {
                    prop_assert!(l.leq(star.of(y), star.of(x)));
                }
            }
        }
    }

    #[test]
    fn arrow_is_below_darrow((l, _) in arb_lattice_and_mask()) {
        let Ok(star) = pseudocomplement_table(&l) else {
            return Ok(());
        };
        let arrow = arrow_table(&l, &star);
        let darrow = darrow_table(&l, &star);
        for x in l.elements() {
            for y in l.elements() {
                prop_assert!(l.leq(arrow.of(x, y), darrow.of(x, y)));
            }
            prop_assert_eq!(arrow.of(x, l.bottom()), star.of(x));
            prop_assert_eq!(darrow.of(x, l.bottom()), star.of(x));
        }
    }

    #[test]
    fn closure_is_a_closure_operator((l, mask) in arb_lattice_and_mask()) {
        let Ok(star) = pseudocomplement_table(&l) else {
            return Ok(());
        };
        let seed = ElementSet::from_mask(mask);
        for kind in [DsKind::First, DsKind::Second] {
            let closed = ds_closure(&l, &star, &seed, kind);
            prop_assert!(seed.is_subset(&closed));
            prop_assert!(is_deductive_system(&l, &star, &closed, kind).holds);
            prop_assert_eq!(ds_closure(&l, &star, &closed, kind), closed.clone());
            // monotone: close a superset, get a superset
            let extra = ((mask >> 7) as usize) % l.size();
            let bigger = seed.union(&ElementSet::singleton(extra));
            prop_assert!(closed.is_subset(&ds_closure(&l, &star, &bigger, kind)));
        }
    }
}
