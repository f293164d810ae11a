//! Finite posets, join-semilattices and bounded lattices.
//!
//! Elements are identified by their position in the declared name list.
//! The order is stored twice, as up-sets and as down-sets, so both
//! directions of every query are a single word operation.

mod iso;
mod morphism;

use std::ops::Deref;

pub use iso::{find_isomorphism, is_order_isomorphism};
pub use morphism::{
    brute_force_morphisms, enumerate_jsl_morphisms, enumerate_morphisms, is_morphism,
    LatticeMorphism, MorphismKind,
};

use crate::bitset::{BitSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// A finite partial order on named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl Poset {
    /// Builds a poset from an arbitrary generating relation; the
    /// reflexive-transitive closure is always taken.
    pub fn new<S: AsRef<str>>(names: &[S], leq_pairs: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let index = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownName(s.to_string()))
        };
        let mut up = vec![BitSet::EMPTY; names.len()];
        for (a, b) in leq_pairs {
            let (a, b) = (index(a.as_ref())?, index(b.as_ref())?);
            up[a].insert(b);
        }
        Self::from_up_sets(names, up)
    }

    /// Builds a poset from (not necessarily closed) up-sets, indexed like `names`.
    pub fn from_up_sets(names: Vec<String>, mut up: Vec<BitSet>) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        assert_eq!(up.len(), n, "one up-set per element");
        for (i, u) in up.iter_mut().enumerate() {
            u.insert(i);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        let mut down = vec![BitSet::EMPTY; n];
        for (a, u) in up.iter().enumerate() {
            for b in u.iter() {
                down[b].insert(a);
            }
        }
        for a in 0..n {
            if let Some(b) = up[a].intersection(down[a]).iter().find(|&b| b != a) {
                return Err(Error::NotAntisymmetric(names[a].clone(), names[b].clone()));
            }
        }
        Ok(Poset { names, up, down })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `{b : a <= b}`
    pub fn up(&self, a: usize) -> BitSet {
        self.up[a]
    }

    /// `{b : b <= a}`
    pub fn down(&self, a: usize) -> BitSet {
        self.down[a]
    }

    pub fn carrier(&self) -> BitSet {
        BitSet::full(self.len())
    }

    pub fn upper_bounds(&self, set: BitSet) -> BitSet {
        set.iter()
            .fold(self.carrier(), |acc, a| acc.intersection(self.up[a]))
    }

    pub fn lower_bounds(&self, set: BitSet) -> BitSet {
        set.iter()
            .fold(self.carrier(), |acc, a| acc.intersection(self.down[a]))
    }

    /// Least element of `set`, if it has one.
    pub fn least(&self, set: BitSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(self.up[x]))
    }

    pub fn greatest(&self, set: BitSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(self.down[x]))
    }

    /// Down-closure of a subset.
    pub fn down_closure(&self, set: BitSet) -> BitSet {
        set.iter()
            .fold(BitSet::EMPTY, |acc, a| acc.union(self.down[a]))
    }

    pub fn up_closure(&self, set: BitSet) -> BitSet {
        set.iter().fold(BitSet::EMPTY, |acc, a| acc.union(self.up[a]))
    }

    /// Elements strictly below `a` with nothing in between.
    pub fn lower_covers(&self, a: usize) -> BitSet {
        let below = self.down[a].difference(BitSet::singleton(a));
        below
            .iter()
            .filter(|&b| {
                // b is a lower cover iff no c in `below` sits strictly above b
                below
                    .intersection(self.up[b])
                    .difference(BitSet::singleton(b))
                    .is_empty()
            })
            .collect()
    }

    pub fn label(&self, set: BitSet) -> String {
        crate::bitset::set_label(&self.names, set)
    }

    /// Cover relation `(lower, upper)` in lexicographic index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.upper_covers(a).iter() {
                out.push((a, b));
            }
        }
        out
    }

    pub fn upper_covers(&self, a: usize) -> BitSet {
        let above = self.up[a].difference(BitSet::singleton(a));
        above
            .iter()
            .filter(|&b| {
                above
                    .intersection(self.down[b])
                    .difference(BitSet::singleton(b))
                    .is_empty()
            })
            .collect()
    }

    /// The opposite order on the same names.
    pub fn dual(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// A linear extension: indices sorted by down-set size, ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.down[a].len(), a));
        order
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if names.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(names.len()));
    }
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(Error::EmptyName);
        }
        if names[..i].contains(n) {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

/// A finite poset with all finite joins, including the empty join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinSemilattice {
    poset: Poset,
    bottom: usize,
    join: Vec<usize>,
}

impl JoinSemilattice {
    pub fn new(poset: Poset) -> Result<Self> {
        let join = binary_table(&poset, |p, s| p.least(p.upper_bounds(s)), Error::NoJoin)?;
        let bottom = poset.least(poset.carrier()).ok_or(Error::NoBottom)?;
        Ok(JoinSemilattice { poset, bottom, join })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.poset.len() + b]
    }

    /// Join of an arbitrary subset; the empty join is bottom.
    pub fn join_all(&self, set: BitSet) -> usize {
        set.iter().fold(self.bottom, |acc, a| self.join(acc, a))
    }
}

impl Deref for JoinSemilattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

/// A finite poset with all finite joins and meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLattice {
    jsl: JoinSemilattice,
    top: usize,
    meet: Vec<usize>,
}

impl BoundedLattice {
    pub fn new(poset: Poset) -> Result<Self> {
        let jsl = JoinSemilattice::new(poset)?;
        let meet = binary_table(&jsl.poset, |p, s| p.greatest(p.lower_bounds(s)), Error::NoMeet)?;
        let top = jsl.poset.greatest(jsl.poset.carrier()).ok_or(Error::NoTop)?;
        Ok(BoundedLattice { jsl, top, meet })
    }

    /// Convenience: names plus generating pairs straight to a lattice.
    pub fn from_pairs<S: AsRef<str>>(names: &[S], leq_pairs: &[(S, S)]) -> Result<Self> {
        Self::new(Poset::new(names, leq_pairs)?)
    }

    /// Every finite join-semilattice is a bounded lattice; this only adds the
    /// meet table and top.
    pub fn from_join_semilattice(jsl: &JoinSemilattice) -> Self {
        Self::new(jsl.poset.clone()).expect("finite join-semilattices are lattices")
    }

    pub fn jsl(&self) -> &JoinSemilattice {
        &self.jsl
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.jsl.len() + b]
    }

    /// Meet of an arbitrary subset; the empty meet is top.
    pub fn meet_all(&self, set: BitSet) -> usize {
        set.iter().fold(self.top, |acc, a| self.meet(acc, a))
    }

    /// `L^op`: same indices and names, order reversed.
    pub fn dual(&self) -> BoundedLattice {
        BoundedLattice {
            jsl: JoinSemilattice {
                poset: self.jsl.poset.dual(),
                bottom: self.top,
                join: self.meet.clone(),
            },
            top: self.jsl.bottom,
            meet: self.jsl.join.clone(),
        }
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// First triple (in index order) with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First triple with `a ∨ (b ∧ c) != (a ∨ b) ∧ (a ∨ c)`.
    pub fn dual_distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        self.dual().distributivity_witness()
    }
}

impl Deref for BoundedLattice {
    type Target = JoinSemilattice;

    fn deref(&self) -> &JoinSemilattice {
        &self.jsl
    }
}

fn binary_table(
    poset: &Poset,
    bound: impl Fn(&Poset, BitSet) -> Option<usize>,
    err: impl Fn(String, String) -> Error,
) -> Result<Vec<usize>> {
    let n = poset.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let pair = BitSet::singleton(a).with(b);
            let x = bound(poset, pair)
                .ok_or_else(|| err(poset.name(a).to_string(), poset.name(b).to_string()))?;
            table[a * n + b] = x;
            table[b * n + a] = x;
        }
    }
    Ok(table)
}
