//! Exhaustive generation of all bounded lattices up to 8 elements.
//!
//! Every bounded lattice has a linear extension whose first element is the
//! bottom and whose last is the top, so it suffices to enumerate
//! upper-triangular order relations with a full first row and last column,
//! filter for transitivity and the lattice property, and (optionally)
//! reject isomorphic duplicates via a canonical form. The candidate space
//! is 2^((n-2)(n-3)/2), at most 32768 at n = 8.

use std::collections::HashSet;

use thiserror::Error;

use crate::classify::{Classification, LatticeClass};
use crate::lattice::{Elem, FiniteLattice};

/// Hard ceiling on the generator; relation and partition counts explode
/// beyond this.
pub const MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("cannot generate lattices with {0} elements (supported: 1..={MAX_N})")]
    SizeLimit(usize),
}

/// A lazily generated family of all bounded lattices on `n` elements.
///
/// With `dedup`, exactly one representative per isomorphism class is
/// emitted; otherwise every valid labeling (with indices extending the
/// order) is emitted. Generation is deterministic.
#[derive(Debug)]
pub struct LatticeFamily {
    n: usize,
    dedup: bool,
    /// pairs (i, j) of middle elements whose comparability is free
    free_pairs: Vec<(usize, usize)>,
    next_mask: u64,
    mask_end: u64,
    seen: HashSet<u64>,
}

impl LatticeFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dedup(&self) -> bool {
        self.dedup
    }
}

/// All bounded lattices on `n` elements.
pub fn generate_all(n: usize, dedup: bool) -> Result<LatticeFamily, GenError> {
    if n == 0 || n > MAX_N {
        return Err(GenError::SizeLimit(n));
    }
    let mut free_pairs = Vec::new();
    if n >= 2 {
        for i in 1..n - 1 {
            for j in i + 1..n - 1 {
                free_pairs.push((i, j));
            }
        }
    }
    let mask_end = 1u64 << free_pairs.len();
    Ok(LatticeFamily {
        n,
        dedup,
        free_pairs,
        next_mask: 0,
        mask_end,
        seen: HashSet::new(),
    })
}

impl Iterator for LatticeFamily {
    type Item = FiniteLattice;

    fn next(&mut self) -> Option<FiniteLattice> {
        let n = self.n;
        while self.next_mask < self.mask_end {
            let mask = self.next_mask;
            self.next_mask += 1;

            // diagonal, full bottom row (element 0), full top column
            let mut leq = vec![false; n * n];
            for x in 0..n {
                leq[x * n + x] = true;
                leq[x * n + (n - 1)] = true;
                leq[x] = true;
            }
            for (bit, &(i, j)) in self.free_pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    leq[i * n + j] = true;
                }
            }
            if !transitive_middle(n, &leq) {
                continue;
            }
            let labels = (0..n).map(|i| i.to_string()).collect();
            let Ok(l) = FiniteLattice::from_closed_order(labels, leq) else {
                continue;
            };
            if self.dedup && !self.seen.insert(canonical_key(&l)) {
                continue;
            }
            return Some(l);
        }
        None
    }
}

/// Transitivity only needs checking among the free middle pairs: the
/// bottom row and top column cannot break it.
fn transitive_middle(n: usize, leq: &[bool]) -> bool {
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n - 1 {
            if !leq[i * n + j] {
                continue;
            }
            for k in j + 1..n - 1 {
                if leq[j * n + k] && !leq[i * n + k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism-invariant per-element data used to cut the permutation
/// search: (downset size, upset size, covers up, covers down).
type Signature = (usize, usize, usize, usize);

fn signatures(l: &FiniteLattice) -> Vec<Signature> {
    let n = l.size();
    let covers = l.covers();
    (0..n)
        .map(|x| {
            let down = (0..n).filter(|&z| l.leq(z, x)).count();
            let up = (0..n).filter(|&z| l.leq(x, z)).count();
            let cov_up = covers.iter().filter(|&&(lo, _)| lo == x).count();
            let cov_down = covers.iter().filter(|&&(_, hi)| hi == x).count();
            (down, up, cov_up, cov_down)
        })
        .collect()
}

/// Canonical key: the minimum of the order-relation bit matrix over all
/// permutations that respect the signature classes. Equal keys iff
/// isomorphic; fits in a u64 because n <= 8.
pub fn canonical_key(l: &FiniteLattice) -> u64 {
    let n = l.size();
    assert!(n <= MAX_N, "canonical keys need n*n <= 64");
    let sigs = signatures(l);
    // group elements into classes with equal signature, classes ordered
    // by signature value
    let mut classes: Vec<(Signature, Vec<Elem>)> = Vec::new();
    let mut sorted: Vec<Signature> = sigs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for sig in sorted {
        classes.push((sig, (0..n).filter(|&x| sigs[x] == sig).collect()));
    }

    let mut best = u64::MAX;
    let mut perm: Vec<Elem> = Vec::with_capacity(n);
    fn rec(
        l: &FiniteLattice,
        classes: &[(Signature, Vec<Elem>)],
        class_idx: usize,
        used: &mut u64,
        perm: &mut Vec<Elem>,
        best: &mut u64,
    ) {
        if class_idx == classes.len() {
            let n = l.size();
            let mut key = 0u64;
            for i in 0..n {
                for j in 0..n {
                    key <<= 1;
                    if l.leq(perm[i], perm[j]) {
                        key |= 1;
                    }
                }
            }
            if key < *best {
                *best = key;
            }
            return;
        }
        let members = &classes[class_idx].1;
        fn fill(
            l: &FiniteLattice,
            classes: &[(Signature, Vec<Elem>)],
            class_idx: usize,
            members: &[Elem],
            used: &mut u64,
            perm: &mut Vec<Elem>,
            best: &mut u64,
        ) {
            if members.iter().all(|&m| *used & (1 << m) != 0) {
                rec(l, classes, class_idx + 1, used, perm, best);
                return;
            }
            for &m in members {
                if *used & (1 << m) != 0 {
                    continue;
                }
                *used |= 1 << m;
                perm.push(m);
                fill(l, classes, class_idx, members, used, perm, best);
                perm.pop();
                *used &= !(1 << m);
            }
        }
        fill(l, classes, class_idx, members, used, perm, best);
    }
    let mut used = 0u64;
    rec(l, &classes, 0, &mut used, &mut perm, &mut best);
    best
}

/// Isomorphism test by backtracking over signature-compatible bijections;
/// independent of [`canonical_key`], so the two can cross-check each
/// other.
pub fn are_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> bool {
    let n = l1.size();
    if n != l2.size() {
        return false;
    }
    let s1 = signatures(l1);
    let s2 = signatures(l2);
    let mut multiset1 = s1.clone();
    let mut multiset2 = s2.clone();
    multiset1.sort_unstable();
    multiset2.sort_unstable();
    if multiset1 != multiset2 {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        l1: &FiniteLattice,
        l2: &FiniteLattice,
        s1: &[Signature],
        s2: &[Signature],
        x: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = l1.size();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || s1[x] != s2[y] {
                continue;
            }
            let consistent = (0..x)
                .all(|z| l1.leq(x, z) == l2.leq(y, map[z]) && l1.leq(z, x) == l2.leq(map[z], y));
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if assign(l1, l2, s1, s2, x + 1, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
    assign(l1, l2, &s1, &s2, 0, &mut map, &mut used)
}

/// Keep only family members in the given class.
pub fn filter_family(
    family: LatticeFamily,
    class: LatticeClass,
) -> impl Iterator<Item = FiniteLattice> {
    family.filter(move |l| Classification::of(l).satisfies(class))
}
