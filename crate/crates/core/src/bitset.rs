//! Fixed-width bit sets over dense element indices.
//!
//! Every carrier in this crate is indexed `0..n` with `n <= 64`, so a single
//! machine word holds any subset. All set operations are branch-free word
//! operations, which matters because the exhaustive checks run them billions
//! of times.

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier any structure may have.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitSet(u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    pub fn from_bits(bits: u64) -> Self {
        BitSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        BitSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        BitSet(self.0 | 1u64 << i)
    }

    pub fn union(self, other: Self) -> Self {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        BitSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        BitSet(!self.0).intersection(BitSet::full(n))
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Canonical order used for every sorted list of subsets: first by
    /// cardinality, then lexicographically on the ascending member lists.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

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

/// `{x,y,z}` from element names; the empty set is `{}`.
pub fn set_label<S: AsRef<str>>(names: &[S], set: BitSet) -> String {
    let parts: Vec<&str> = set.iter().map(|i| names[i].as_ref()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Sorts subsets in canonical order and removes duplicates.
pub fn sort_canonical(sets: &mut Vec<BitSet>) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: BitSet = [0, 2, 5].into_iter().collect();
        let b: BitSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b), BitSet::singleton(2));
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert_eq!(a.complement(6).iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert!(BitSet::singleton(2).is_subset(a));
        assert_eq!(BitSet::full(64).len(), 64);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v: Vec<BitSet> = vec![
            [0, 2].into_iter().collect(),
            [1].into_iter().collect(),
            [0, 1].into_iter().collect(),
            BitSet::EMPTY,
        ];
        sort_canonical(&mut v);
        let lists: Vec<Vec<usize>> = v.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(lists, vec![vec![], vec![1], vec![0, 1], vec![0, 2]]);
    }
}
