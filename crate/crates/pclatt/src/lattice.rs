//! Finite bounded lattices presented by cover relations.
//!
//! A lattice is built from a list of element labels and a list of cover
//! pairs (Hasse edges). Construction derives the full order as the
//! reflexive-transitive closure of the covers, checks that every pair of
//! elements has a greatest lower bound and a least upper bound, and
//! precomputes the meet and join tables so that all later operations are
//! O(1) table lookups.

use std::fmt;

use thiserror::Error;

/// Index of a lattice element. Elements are indexed in a topological
/// order of the cover relation, so `x <= y` implies `x`'s index is not
/// greater than `y`'s.
pub type Elem = usize;

/// Why a label/cover presentation failed to produce a bounded lattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice must have at least one element")]
    Empty,
    #[error("label {0:?} is not valid (expected non-empty [A-Za-z0-9_*']+)")]
    InvalidLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("cover references undeclared label {0:?}")]
    UnknownLabel(String),
    #[error("cover relation has a cycle: not a partial order")]
    NotAPoset,
    #[error("poset is not bounded: minimal elements {{{}}}, maximal elements {{{}}}",
            minimal.join(","), maximal.join(","))]
    NotBounded {
        minimal: Vec<String>,
        maximal: Vec<String>,
    },
    #[error("not a lattice: {op} of {left:?} and {right:?} does not exist")]
    NotALattice {
        op: BoundKind,
        left: String,
        right: String,
    },
}

/// Which bound was missing when a presentation is not a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

/// A finite bounded lattice with precomputed order, meet, and join tables.
///
/// Immutable after construction; all queries are pure lookups, so a value
/// can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    /// Row-major `n x n`: `leq[x*n + y]` iff `x <= y`.
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '*' || c == '\'')
}

impl FiniteLattice {
    /// Build a lattice from element labels and cover pairs `(lower, upper)`.
    ///
    /// Elements are re-indexed by a topological order of the cover DAG
    /// (ties broken by declaration order), which keeps counterexample
    /// reporting stable. Fails if the covers contain a cycle, if the poset
    /// is not bounded, or if some pair of elements has no meet or join.
    pub fn build(labels: &[&str], covers: &[(&str, &str)]) -> Result<Self, LatticeError> {
        if labels.is_empty() {
            return Err(LatticeError::Empty);
        }
        for l in labels {
            if !valid_label(l) {
                return Err(LatticeError::InvalidLabel((*l).to_string()));
            }
        }
        let n = labels.len();
        let index_of = |s: &str| labels.iter().position(|l| *l == s);
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(LatticeError::DuplicateLabel((*l).to_string()));
            }
        }
        let mut edges = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            let lo = index_of(lo).ok_or_else(|| LatticeError::UnknownLabel((*lo).to_string()))?;
            let hi = index_of(hi).ok_or_else(|| LatticeError::UnknownLabel((*hi).to_string()))?;
            if lo == hi {
                return Err(LatticeError::NotAPoset);
            }
            edges.push((lo, hi));
        }

        // Kahn's algorithm; among ready nodes always pick the first by
        // declaration order, so a topologically-sorted input keeps its order.
        let mut indeg = vec![0usize; n];
        for &(_, hi) in &edges {
            indeg[hi] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<bool> = indeg.iter().map(|&d| d == 0).collect();
        let mut done = vec![false; n];
        while order.len() < n {
            let next = match (0..n).find(|&v| ready[v] && !done[v]) {
                Some(v) => v,
                None => return Err(LatticeError::NotAPoset),
            };
            done[next] = true;
            order.push(next);
            for &(lo, hi) in &edges {
                if lo == next {
                    indeg[hi] -= 1;
                    if indeg[hi] == 0 {
                        ready[hi] = true;
                    }
                }
            }
        }
        // position in the new (internal) order of each declared index
        let mut pos = vec![0usize; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }

        let sorted_labels: Vec<String> = order.iter().map(|&v| labels[v].to_string()).collect();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(lo, hi) in &edges {
            leq[pos[lo] * n + pos[hi]] = true;
        }
        // transitive closure; indices are topological so only x < y can hold
        for k in 0..n {
            for x in 0..k {
                if leq[x * n + k] {
                    for y in k + 1..n {
                        if leq[k * n + y] {
                            leq[x * n + y] = true;
                        }
                    }
                }
            }
        }

        Self::from_closed_order(sorted_labels, leq)
    }

    /// Build from labels and an already-closed order relation whose index
    /// order is a linear extension (`leq[x][y]` implies `x <= y` as indices).
    /// Used by the generator, which enumerates such relations directly.
    pub(crate) fn from_closed_order(
        labels: Vec<String>,
        leq: Vec<bool>,
    ) -> Result<Self, LatticeError> {
        let n = labels.len();
        debug_assert_eq!(leq.len(), n * n);

        let strictly_below = |x: Elem, y: Elem| x != y && leq[x * n + y];
        let minimal: Vec<Elem> = (0..n)
            .filter(|&x| (0..n).all(|z| !strictly_below(z, x)))
            .collect();
        let maximal: Vec<Elem> = (0..n)
            .filter(|&x| (0..n).all(|z| !strictly_below(x, z)))
            .collect();
        if minimal.len() != 1 || maximal.len() != 1 {
            return Err(LatticeError::NotBounded {
                minimal: minimal.iter().map(|&x| labels[x].clone()).collect(),
                maximal: maximal.iter().map(|&x| labels[x].clone()).collect(),
            });
        }
        let (bottom, top) = (minimal[0], maximal[0]);

        let mut meet = vec![0 as Elem; n * n];
        let mut join = vec![0 as Elem; n * n];
        let mut bounds = Vec::with_capacity(n);
        for x in 0..n {
            for y in x..n {
                // lower bounds; a greatest one has the largest index
                bounds.clear();
                bounds.extend((0..n).filter(|&z| leq[z * n + x] && leq[z * n + y]));
                let glb = *bounds.last().expect("bottom is a common lower bound");
                if !bounds.iter().all(|&z| leq[z * n + glb]) {
                    return Err(LatticeError::NotALattice {
                        op: BoundKind::Meet,
                        left: labels[x].clone(),
                        right: labels[y].clone(),
                    });
                }
                // upper bounds; a least one has the smallest index
                bounds.clear();
                bounds.extend((0..n).filter(|&z| leq[x * n + z] && leq[y * n + z]));
                let lub = bounds[0];
                if !bounds.iter().all(|&z| leq[lub * n + z]) {
                    return Err(LatticeError::NotALattice {
                        op: BoundKind::Join,
                        left: labels[x].clone(),
                        right: labels[y].clone(),
                    });
                }
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }

        Ok(FiniteLattice {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// All element indices in internal (topological) order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    /// Look up an element by label.
    pub fn element(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size() + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size() + y]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// The cover pairs `(lower, upper)` of the order, sorted by index.
    /// `y` covers `x` when `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if !self.leq(x, y) {
                    continue;
                }
                let gap = (0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !gap {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// A subset of the elements of a particular lattice, kept sorted.
///
/// The ordering is canonical for enumeration output: first by size, then
/// lexicographically on the sorted member indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<Elem>,
}

impl ElementSet {
    pub fn empty() -> Self {
        ElementSet::default()
    }

    pub fn singleton(e: Elem) -> Self {
        ElementSet { members: vec![e] }
    }

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        ElementSet {
            members: (0..n).collect(),
        }
    }

    pub fn from_members(members: impl IntoIterator<Item = Elem>) -> Self {
        let mut members: Vec<Elem> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    /// Resolve a list of labels against a lattice.
    pub fn from_labels(l: &FiniteLattice, labels: &[&str]) -> Result<Self, LatticeError> {
        let mut members = Vec::with_capacity(labels.len());
        for s in labels {
            members.push(
                l.element(s)
                    .ok_or_else(|| LatticeError::UnknownLabel((*s).to_string()))?,
            );
        }
        Ok(Self::from_members(members))
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    /// Insert an element; returns true if it was new.
    pub fn insert(&mut self, e: Elem) -> bool {
        match self.members.binary_search(&e) {
            Ok(_) => false,
            Err(i) => {
                self.members.insert(i, e);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&e| other.contains(e))
                .collect(),
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        Self::from_members(self.iter().chain(other.iter()))
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&e| other.contains(e))
    }

    /// Render as `{lab1,lab2,...}` using the lattice's labels.
    pub fn render(&self, l: &FiniteLattice) -> String {
        let labels: Vec<&str> = self.members.iter().map(|&e| l.label(e)).collect();
        format!("{{{}}}", labels.join(","))
    }

    /// Bitmask view, valid while the universe fits in 64 elements. Handy
    /// for enumerating all subsets of a small lattice.
    pub fn to_mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, &e| m | (1 << e))
    }

    pub fn from_mask(mut mask: u64) -> Self {
        let mut members = Vec::new();
        while mask != 0 {
            let e = mask.trailing_zeros() as Elem;
            members.push(e);
            mask &= mask - 1;
        }
        ElementSet { members }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl FromIterator<Elem> for ElementSet {
    fn from_iter<T: IntoIterator<Item = Elem>>(iter: T) -> Self {
        Self::from_members(iter)
    }
}
