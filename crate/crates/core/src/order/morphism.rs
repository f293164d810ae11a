use serde::{Deserialize, Serialize};

use super::{BoundedLattice, JoinSemilattice};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::{Budget, SizeGuard};

/// Carriers up to this size have frame morphisms checked against every
/// subset join; above it the equivalent binary check is used.
pub const LITERAL_SUBSET_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    /// Preserves bottom and binary joins.
    Jsl,
    /// Additionally preserves top and binary meets.
    Blat,
    /// Preserves all subset joins and finite meets.
    Frame,
}

/// A structure-preserving map, stored as the image of each source index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeMorphism {
    pub kind: MorphismKind,
    pub map: Vec<usize>,
}

impl LatticeMorphism {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

pub fn is_morphism(
    src: &BoundedLattice,
    tgt: &BoundedLattice,
    map: &[usize],
    kind: MorphismKind,
) -> bool {
    let n = src.len();
    if map.len() != n || map.iter().any(|&x| x >= tgt.len()) {
        return false;
    }
    let joins = map[src.bottom()] == tgt.bottom()
        && (0..n).all(|a| (0..n).all(|b| map[src.join(a, b)] == tgt.join(map[a], map[b])));
    if !joins || kind == MorphismKind::Jsl {
        return joins;
    }
    let meets = map[src.top()] == tgt.top()
        && (0..n).all(|a| (0..n).all(|b| map[src.meet(a, b)] == tgt.meet(map[a], map[b])));
    if !meets || kind == MorphismKind::Blat {
        return meets;
    }
    preserves_all_joins(src, tgt, map)
}

fn preserves_all_joins(src: &BoundedLattice, tgt: &BoundedLattice, map: &[usize]) -> bool {
    let n = src.len();
    if n > LITERAL_SUBSET_LIMIT {
        // bottom and binary joins were already checked, which suffices for finite joins
        return true;
    }
    (0u64..1 << n).all(|bits| {
        let s = BitSet::from_bits(bits);
        let image: BitSet = s.iter().map(|a| map[a]).collect();
        map[src.join_all(s)] == tgt.join_all(image)
    })
}

/// All join-semilattice morphisms, in lexicographic order of image tuples.
pub fn enumerate_jsl_morphisms(
    src: &JoinSemilattice,
    tgt: &JoinSemilattice,
    guard: SizeGuard,
) -> Result<Vec<LatticeMorphism>> {
    let search = Search::new(src, tgt, None);
    let maps = search.run(guard)?;
    Ok(maps
        .into_iter()
        .map(|map| LatticeMorphism { kind: MorphismKind::Jsl, map })
        .collect())
}

/// All morphisms of the given kind, in lexicographic order of image tuples.
///
/// Depth-first over a linear extension of `src`, fixing bottom (and top)
/// up front and rejecting a partial assignment as soon as any join or meet
/// equation between assigned elements fails.
pub fn enumerate_morphisms(
    src: &BoundedLattice,
    tgt: &BoundedLattice,
    kind: MorphismKind,
    guard: SizeGuard,
) -> Result<Vec<LatticeMorphism>> {
    let meets = match kind {
        MorphismKind::Jsl => None,
        MorphismKind::Blat | MorphismKind::Frame => Some((src, tgt)),
    };
    let search = Search::new(src.jsl(), tgt.jsl(), meets);
    let maps = search.run(guard)?;
    Ok(maps
        .into_iter()
        .filter(|map| kind != MorphismKind::Frame || preserves_all_joins(src, tgt, map))
        .map(|map| LatticeMorphism { kind, map })
        .collect())
}

/// Every map `src -> tgt` tried in lexicographic order and filtered through
/// [`is_morphism`]. Exponential; only for cross-checking small cases.
pub fn brute_force_morphisms(
    src: &BoundedLattice,
    tgt: &BoundedLattice,
    kind: MorphismKind,
) -> Vec<LatticeMorphism> {
    let (n, m) = (src.len(), tgt.len());
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        if is_morphism(src, tgt, &map, kind) {
            out.push(LatticeMorphism { kind, map: map.clone() });
        }
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Equation `f(lhs op rhs) == f(lhs) op' f(rhs)`, checked once all three are assigned.
#[derive(Clone, Copy)]
struct Equation {
    lhs: usize,
    rhs: usize,
    result: usize,
    meet: bool,
}

struct Search<'a> {
    tgt: &'a JoinSemilattice,
    tgt_meet: Option<&'a BoundedLattice>,
    order: Vec<usize>,
    fixed: Vec<Option<usize>>,
    /// equations that become decidable at each step of `order`
    checks: Vec<Vec<Equation>>,
    src_len: usize,
    impossible: bool,
}

impl<'a> Search<'a> {
    fn new(
        src: &'a JoinSemilattice,
        tgt: &'a JoinSemilattice,
        meets: Option<(&'a BoundedLattice, &'a BoundedLattice)>,
    ) -> Self {
        let n = src.len();
        let order = src.linear_extension();
        let mut pos = vec![0; n];
        for (i, &a) in order.iter().enumerate() {
            pos[a] = i;
        }
        let mut fixed = vec![None; n];
        fixed[src.bottom()] = Some(tgt.bottom());
        let mut impossible = false;
        if let Some((s, t)) = meets {
            // a one-element source has 0 = 1, which only a one-element target matches
            impossible = s.top() == s.bottom() && t.top() != t.bottom();
            fixed[s.top()] = Some(t.top());
        }
        let mut checks = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                let j = src.join(a, b);
                let step = pos[a].max(pos[b]).max(pos[j]);
                checks[step].push(Equation { lhs: a, rhs: b, result: j, meet: false });
                if let Some((s, _)) = meets {
                    let m = s.meet(a, b);
                    let step = pos[a].max(pos[b]).max(pos[m]);
                    checks[step].push(Equation { lhs: a, rhs: b, result: m, meet: true });
                }
            }
        }
        Search {
            tgt,
            tgt_meet: meets.map(|(_, t)| t),
            order,
            fixed,
            checks,
            src_len: n,
            impossible,
        }
    }

    fn run(&self, guard: SizeGuard) -> Result<Vec<Vec<usize>>> {
        let mut budget = Budget::new(guard);
        let mut out = Vec::new();
        if self.impossible {
            return Ok(out);
        }
        let mut map = vec![usize::MAX; self.src_len];
        self.extend(0, &mut map, &mut budget, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn extend(
        &self,
        step: usize,
        map: &mut [usize],
        budget: &mut Budget,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if step == self.order.len() {
            out.push(map.to_vec());
            return Ok(());
        }
        let a = self.order[step];
        let candidates = match self.fixed[a] {
            Some(x) => x..x + 1,
            None => 0..self.tgt.len(),
        };
        for x in candidates {
            budget.tick()?;
            map[a] = x;
            if self.consistent(step, map) {
                self.extend(step + 1, map, budget, out)?;
            }
        }
        map[a] = usize::MAX;
        Ok(())
    }

    fn consistent(&self, step: usize, map: &[usize]) -> bool {
        self.checks[step].iter().all(|e| {
            let (x, y) = (map[e.lhs], map[e.rhs]);
            let expected = if e.meet {
                self.tgt_meet.expect("meet equations need a lattice target").meet(x, y)
            } else {
                self.tgt.join(x, y)
            };
            map[e.result] == expected
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, named};

    fn images(l: &BoundedLattice, ms: &[LatticeMorphism]) -> Vec<Vec<String>> {
        ms.iter()
            .map(|m| m.map.iter().map(|&x| l.name(x).to_string()).collect())
            .collect()
    }

    #[test]
    fn hom_two_two() {
        let two = named::two();
        let g = SizeGuard::default();
        let jsl = enumerate_morphisms(&two, &two, MorphismKind::Jsl, g).unwrap();
        assert_eq!(images(&two, &jsl), vec![vec!["0", "0"], vec!["0", "1"]]);
        let blat = enumerate_morphisms(&two, &two, MorphismKind::Blat, g).unwrap();
        assert_eq!(images(&two, &blat), vec![vec!["0", "1"]]);
    }

    #[test]
    fn hom_b2_two() {
        let (b2, two) = (named::b2(), named::two());
        let ms = enumerate_morphisms(&b2, &two, MorphismKind::Blat, SizeGuard::default()).unwrap();
        assert_eq!(ms.len(), 2);
        let (a, b) = (b2.index_of("a").unwrap(), b2.index_of("b").unwrap());
        let pattern: Vec<(usize, usize)> = ms.iter().map(|m| (m.map[a], m.map[b])).collect();
        assert!(pattern.contains(&(1, 0)) && pattern.contains(&(0, 1)));
    }

    #[test]
    fn size_guard_trips() {
        let b2 = named::b2();
        assert_eq!(
            enumerate_morphisms(&b2, &b2, MorphismKind::Jsl, SizeGuard(3)),
            Err(crate::Error::SizeGuard(3))
        );
    }

    #[test]
    fn agrees_with_brute_force_on_small_lattices() {
        let small: Vec<BoundedLattice> = corpus::generate(4)
            .unwrap()
            .into_iter()
            .map(|e| e.lattice)
            .collect();
        for src in &small {
            for tgt in &small {
                for kind in [MorphismKind::Jsl, MorphismKind::Blat, MorphismKind::Frame] {
                    let fast = enumerate_morphisms(src, tgt, kind, SizeGuard::default()).unwrap();
                    assert_eq!(fast, brute_force_morphisms(src, tgt, kind));
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_named_lattices() {
        let named = [named::two(), named::c3(), named::b2(), named::m3(), named::n5()];
        for src in &named {
            for tgt in &named {
                for kind in [MorphismKind::Jsl, MorphismKind::Blat] {
                    let fast = enumerate_morphisms(src, tgt, kind, SizeGuard::default()).unwrap();
                    assert_eq!(fast, brute_force_morphisms(src, tgt, kind), "{kind:?}");
                }
            }
        }
    }
}
