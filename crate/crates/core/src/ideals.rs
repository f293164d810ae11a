//! Ideals, prime ideals and the ideal lattice.
//!
//! An ideal contains the bottom element, is closed under binary joins and is
//! downward closed. Ideals correspond to join-semilattice maps into the
//! two-element lattice (as preimages of `0`); prime ideals correspond to
//! bounded-lattice maps.

use crate::bitset::{sort_canonical, BitSet};
use crate::corpus::named;
use crate::error::{Error, Result};
use crate::order::{
    is_morphism, is_order_isomorphism, BoundedLattice, JoinSemilattice, LatticeMorphism,
    MorphismKind, Poset,
};
use crate::{Budget, SizeGuard};

/// Carriers up to this size enumerate ideals by filtering all subsets.
pub const SUBSET_FILTER_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal(pub BitSet);

impl Ideal {
    pub fn members(self) -> BitSet {
        self.0
    }

    pub fn contains(self, a: usize) -> bool {
        self.0.contains(a)
    }

    /// Canonical serialization, e.g. `{0,a}`.
    pub fn label(self, p: &Poset) -> String {
        p.label(self.0)
    }

    pub fn names(self, p: &Poset) -> Vec<String> {
        self.0.iter().map(|a| p.name(a).to_string()).collect()
    }
}

pub fn is_ideal(l: &JoinSemilattice, set: BitSet) -> bool {
    set.contains(l.bottom())
        && l.down_closure(set) == set
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(l.join(a, b))))
}

/// `I != L` and `a ∧ b ∈ I` implies `a ∈ I` or `b ∈ I`.
pub fn is_prime(l: &BoundedLattice, set: BitSet) -> bool {
    let n = l.len();
    is_ideal(l, set)
        && set != l.carrier()
        && (0..n).all(|a| (0..n).all(|b| !set.contains(l.meet(a, b)) || set.contains(a) || set.contains(b)))
}

/// `Id(L)`: all ideals of `l`, sorted canonically and ordered by inclusion.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub ideals: Vec<Ideal>,
    /// Element `i` of this lattice is `ideals[i]`, named by its label.
    pub lattice: BoundedLattice,
}

impl IdealLattice {
    pub fn position(&self, ideal: Ideal) -> Option<usize> {
        self.ideals.iter().position(|&i| i == ideal)
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

pub fn all_ideals(l: &JoinSemilattice, guard: SizeGuard) -> Result<IdealLattice> {
    let mut sets = if l.len() <= SUBSET_FILTER_LIMIT {
        ideals_by_subsets(l, guard)?
    } else {
        ideals_by_antichains(l, guard)?
    };
    sort_canonical(&mut sets);
    let ideals: Vec<Ideal> = sets.into_iter().map(Ideal).collect();
    let lattice = inclusion_lattice(l.poset(), &ideals)?;
    Ok(IdealLattice { ideals, lattice })
}

/// Builds the lattice of the given subsets under inclusion, naming each by its label.
pub(crate) fn inclusion_lattice(base: &Poset, ideals: &[Ideal]) -> Result<BoundedLattice> {
    let names: Vec<String> = ideals.iter().map(|i| i.label(base)).collect();
    let up = ideals
        .iter()
        .map(|i| {
            ideals
                .iter()
                .enumerate()
                .filter(|(_, j)| i.0.is_subset(j.0))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    BoundedLattice::new(Poset::from_up_sets(names, up)?)
}

pub(crate) fn ideals_by_subsets(l: &JoinSemilattice, guard: SizeGuard) -> Result<Vec<BitSet>> {
    let mut budget = Budget::new(guard);
    let mut out = Vec::new();
    for bits in 0u64..1 << l.len() {
        budget.tick()?;
        let s = BitSet::from_bits(bits);
        if is_ideal(l, s) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Down-sets are generated from their antichains of maximal elements; the
/// join-closed ones are kept.
pub(crate) fn ideals_by_antichains(l: &JoinSemilattice, guard: SizeGuard) -> Result<Vec<BitSet>> {
    fn walk(
        l: &JoinSemilattice,
        next: usize,
        antichain: BitSet,
        budget: &mut Budget,
        out: &mut Vec<BitSet>,
    ) -> Result<()> {
        budget.tick()?;
        let down = l.down_closure(antichain);
        if is_ideal(l, down) {
            out.push(down);
        }
        for a in next..l.len() {
            let comparable = l.up(a).union(l.down(a));
            if antichain.is_disjoint(comparable) {
                walk(l, a + 1, antichain.with(a), budget, out)?;
            }
        }
        Ok(())
    }
    let mut budget = Budget::new(guard);
    let mut out = Vec::new();
    walk(l, 0, BitSet::EMPTY, &mut budget, &mut out)?;
    Ok(out)
}

/// `↓a = {b : b <= a}`
pub fn principal_ideal(l: &JoinSemilattice, a: usize) -> Ideal {
    Ideal(l.down(a))
}

pub fn principal_ideal_named(l: &JoinSemilattice, name: &str) -> Result<Ideal> {
    Ok(principal_ideal(l, l.index_of(name)?))
}

/// All prime ideals, sorted canonically.
///
/// Every ideal of a finite lattice is the principal ideal of its join, so
/// the candidates are the `n` principal ideals.
pub fn prime_ideals(l: &BoundedLattice) -> Vec<Ideal> {
    let mut sets: Vec<BitSet> = (0..l.len())
        .map(|a| l.down(a))
        .filter(|&s| is_prime(l, s))
        .collect();
    sort_canonical(&mut sets);
    sets.into_iter().map(Ideal).collect()
}

/// `φ ↦ φ⁻¹(0)` for a morphism into the two-element lattice.
pub fn ideal_of_morphism(l: &BoundedLattice, phi: &LatticeMorphism) -> Result<Ideal> {
    if !is_morphism(l, &named::two(), &phi.map, phi.kind) {
        return Err(Error::KindMismatch(format!(
            "map is not a {:?} morphism into the two-element lattice",
            phi.kind
        )));
    }
    Ok(Ideal(
        (0..l.len()).filter(|&a| phi.map[a] == 0).collect(),
    ))
}

/// The characteristic map `a ↦ 0` iff `a ∈ I`; requires a prime ideal
/// unless `kind` is [`MorphismKind::Jsl`].
pub fn morphism_of_ideal(l: &BoundedLattice, ideal: Ideal, kind: MorphismKind) -> Result<LatticeMorphism> {
    if !is_ideal(l, ideal.0) {
        return Err(Error::Malformed(format!("{} is not an ideal", ideal.label(l))));
    }
    if kind != MorphismKind::Jsl && !is_prime(l, ideal.0) {
        return Err(Error::KindMismatch(format!(
            "{} is not prime, so its characteristic map is not a {kind:?} morphism",
            ideal.label(l)
        )));
    }
    let map = (0..l.len()).map(|a| usize::from(!ideal.contains(a))).collect();
    Ok(LatticeMorphism { kind, map })
}

/// The compact elements of `Id(L)` as a sub-poset, with the isomorphism
/// back to the base lattice.
#[derive(Debug, Clone)]
pub struct CompactElements {
    /// Indices into the ideal lattice.
    pub elements: Vec<usize>,
    pub lattice: BoundedLattice,
    /// `to_base[i]` is the base element whose principal ideal is `elements[i]`.
    pub to_base: Vec<usize>,
}

/// `c` is compact when every directed family whose join lies above `c`
/// already has a member above `c`.
///
/// All families of ideals are enumerated, so this is exponential in `|Id(L)|`
/// and charged against the guard.
pub fn compact_elements(
    base: &JoinSemilattice,
    idl: &IdealLattice,
    guard: SizeGuard,
) -> Result<CompactElements> {
    let id = &idl.lattice;
    let n = id.len();
    if n > 24 {
        return Err(Error::SizeGuard(guard.0));
    }
    let mut budget = Budget::new(guard);
    let mut directed: Vec<BitSet> = Vec::new();
    for bits in 1u64..1 << n {
        budget.tick()?;
        let family = BitSet::from_bits(bits);
        let is_directed = family.iter().all(|x| {
            family
                .iter()
                .all(|y| !family.intersection(id.up(x)).intersection(id.up(y)).is_empty())
        });
        if is_directed {
            directed.push(family);
        }
    }
    let elements: Vec<usize> = (0..n)
        .filter(|&c| {
            directed.iter().all(|&d| {
                !id.leq(c, id.join_all(d)) || d.iter().any(|x| id.leq(c, x))
            })
        })
        .collect();

    let names: Vec<String> = elements.iter().map(|&i| id.name(i).to_string()).collect();
    let up = elements
        .iter()
        .map(|&i| {
            elements
                .iter()
                .enumerate()
                .filter(|&(_, &j)| id.leq(i, j))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let lattice = BoundedLattice::new(Poset::from_up_sets(names, up)?)?;
    let to_base: Vec<usize> = elements
        .iter()
        .map(|&i| {
            let members = idl.ideals[i].members();
            base.greatest(members).unwrap_or(base.bottom())
        })
        .collect();
    debug_assert!(
        elements.len() != base.len() || is_order_isomorphism(lattice.poset(), base.poset(), &to_base)
    );
    Ok(CompactElements { elements, lattice, to_base })
}

/// Nonbottom elements with exactly one lower cover.
///
/// Read directly off the covering relation, without reference to ideals.
pub fn join_irreducibles(p: &Poset) -> BitSet {
    (0..p.len()).filter(|&a| p.lower_covers(a).len() == 1).collect()
}
