//! Fixed-width subsets of a small index universe.
//!
//! Every carrier in this crate (semilattice elements, points of a space,
//! members of a family) is a dense index range `0..n` with `n <= 64`, so a
//! subset is a single `u64`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest universe a [`Mask`] can address.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `0..n` for some `n <= 64`.
///
/// The `Ord` impl is the canonical family order used for every sorted output:
/// smaller sets first, ties broken lexicographically on the ascending member
/// lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Mask(u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Mask {
        Mask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Mask {
        debug_assert!(n <= MAX_UNIVERSE);
        if n >= 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Mask {
        debug_assert!(i < MAX_UNIVERSE);
        Mask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
        it.into_iter().fold(Mask::EMPTY, |m, i| m.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_UNIVERSE && self.0 >> i & 1 == 1
    }

    #[inline]
    #[must_use]
    pub fn with(self, i: usize) -> Mask {
        Mask(self.0 | 1u64 << i)
    }

    #[inline]
    #[must_use]
    pub fn without(self, i: usize) -> Mask {
        Mask(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    #[must_use]
    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    #[inline]
    #[must_use]
    pub fn intersect(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    #[inline]
    #[must_use]
    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    #[inline]
    #[must_use]
    pub fn complement(self, n: usize) -> Mask {
        Mask(!self.0 & Mask::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Mask) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 >> diff.trailing_zeros() & 1 == 1 {
                // the smallest element where they differ belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Mask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Mask::from_indices(iter)
    }
}

impl IntoIterator for Mask {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`Mask`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Sort a family canonically and drop duplicates.
pub fn canonicalize(family: &mut Vec<Mask>) {
    family.sort_unstable();
    family.dedup();
}

/// Intersection of a family; `universe` for the empty family.
pub fn intersect_all<I: IntoIterator<Item = Mask>>(family: I, universe: Mask) -> Mask {
    family.into_iter().fold(universe, Mask::intersect)
}

/// Union of a family; empty for the empty family.
pub fn union_all<I: IntoIterator<Item = Mask>>(family: I) -> Mask {
    family.into_iter().fold(Mask::EMPTY, Mask::union)
}

/// Close a family under pairwise intersection (and add `universe`).
pub fn intersection_closure(generators: &[Mask], universe: Mask) -> Vec<Mask> {
    let mut out: Vec<Mask> = vec![universe];
    out.extend_from_slice(generators);
    canonicalize(&mut out);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &g in generators {
                let m = a.intersect(g);
                if out.binary_search(&m).is_err() && !next.contains(&m) {
                    next.push(m);
                }
            }
        }
        out.extend_from_slice(&next);
        canonicalize(&mut out);
        frontier = next;
    }
    out
}

/// Close a family under pairwise union (and add the empty set).
pub fn union_closure(generators: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = vec![Mask::EMPTY];
    out.extend_from_slice(generators);
    canonicalize(&mut out);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &g in generators {
                let m = a.union(g);
                if out.binary_search(&m).is_err() && !next.contains(&m) {
                    next.push(m);
                }
            }
        }
        out.extend_from_slice(&next);
        canonicalize(&mut out);
        frontier = next;
    }
    out
}

/// Iterate over every subset of `0..n` (n <= 20 in practice).
pub fn all_subsets(n: usize) -> impl Iterator<Item = Mask> {
    assert!(n < 64, "subset enumeration over {n} elements");
    (0..1u64 << n).map(Mask::from_bits)
}
