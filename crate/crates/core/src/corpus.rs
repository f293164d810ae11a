//! The named example lattices and the generated corpus of all bounded
//! lattices up to isomorphism.
//!
//! Generation grows lattices one atom at a time: deleting an atom from a
//! lattice with at least three elements leaves a lattice, so every lattice of
//! size `n + 1` is some lattice of size `n` with a new atom attached below a
//! nonempty up-set. Candidates are filtered through [`BoundedLattice::new`]
//! and deduplicated by [`canonical_form`].

use std::collections::BTreeMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::order::{BoundedLattice, Poset};

pub const MAX_CORPUS_SIZE: usize = 8;

/// Number of bounded lattices on `n` elements up to isomorphism, `n = 1..=8`.
pub const EXPECTED_COUNTS: [usize; MAX_CORPUS_SIZE] = [1, 1, 1, 2, 5, 15, 53, 222];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: BoundedLattice,
}

pub mod named {
    use crate::order::BoundedLattice;

    fn build(names: &[&str], pairs: &[(&str, &str)]) -> BoundedLattice {
        BoundedLattice::from_pairs(names, pairs).expect("named lattice is valid")
    }

    /// The one-element lattice, `0 = 1`.
    pub fn trivial() -> BoundedLattice {
        build(&["0"], &[])
    }

    /// The two-element chain `0 < 1`.
    pub fn two() -> BoundedLattice {
        build(&["0", "1"], &[("0", "1")])
    }

    pub fn c3() -> BoundedLattice {
        build(&["0", "m", "1"], &[("0", "m"), ("m", "1")])
    }

    /// Subsets of a two-element set.
    pub fn b2() -> BoundedLattice {
        build(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
    }

    /// Diamond with three atoms.
    pub fn m3() -> BoundedLattice {
        build(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
    }

    /// Pentagon `0 < a < 1`, `0 < b < c < 1`.
    pub fn n5() -> BoundedLattice {
        build(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
    }

    /// All named lattices with their conventional names.
    pub fn all() -> Vec<(&'static str, BoundedLattice)> {
        vec![
            ("trivial", trivial()),
            ("2", two()),
            ("C3", c3()),
            ("B2", b2()),
            ("M3", m3()),
            ("N5", n5()),
        ]
    }
}

/// All bounded lattices with at most `max_n` elements, one per isomorphism
/// class, ordered by size and then by canonical code.
pub fn generate(max_n: usize) -> Result<Vec<CorpusEntry>> {
    if max_n > MAX_CORPUS_SIZE {
        return Err(Error::CorpusBound(max_n));
    }
    let mut out = Vec::new();
    let mut level: Vec<Poset> = Vec::new();
    for n in 1..=max_n {
        level = match n {
            1 => vec![named::trivial().poset().clone()],
            2 => vec![named::two().poset().clone()],
            _ => grow(&level),
        };
        for (k, p) in level.iter().enumerate() {
            out.push(CorpusEntry {
                name: format!("L{n}_{}", k + 1),
                lattice: BoundedLattice::new(p.clone()).expect("generated lattice"),
            });
        }
    }
    Ok(out)
}

fn grow(level: &[Poset]) -> Vec<Poset> {
    let mut found: BTreeMap<u64, Poset> = BTreeMap::new();
    for p in level {
        let n = p.len();
        let bottom = p.least(p.carrier()).expect("lattice has a bottom");
        let rest: Vec<usize> = (0..n).filter(|&x| x != bottom).collect();
        for bits in 1u64..1 << rest.len() {
            let above: BitSet = BitSet::from_bits(bits).iter().map(|i| rest[i]).collect();
            if p.up_closure(above) != above {
                continue;
            }
            let mut up: Vec<BitSet> = (0..n).map(|x| p.up(x)).collect();
            up.push(above.with(n));
            up[bottom].insert(n);
            let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
            let candidate = Poset::from_up_sets(names, up).expect("atom extension is a poset");
            if BoundedLattice::new(candidate.clone()).is_err() {
                continue;
            }
            let (perm, code) = canonical_form(&candidate);
            found.entry(code).or_insert_with(|| relabel(&candidate, &perm));
        }
    }
    found.into_values().collect()
}

/// Canonical labelling of a poset with at most 11 elements.
///
/// Elements are sorted by (height, down-set size, up-set size); ties are
/// broken by trying every permutation inside each block and keeping the one
/// whose strict-order bit string is smallest. Returns the permutation
/// (`perm[i]` is the element placed at position `i`) and that bit string.
/// Two posets are isomorphic iff their codes agree.
pub fn canonical_form(p: &Poset) -> (Vec<usize>, u64) {
    let n = p.len();
    assert!(n * (n.saturating_sub(1)) / 2 <= 64, "canonical form needs n <= 11");
    let height = heights(p);
    let key = |a: usize| (height[a], p.down(a).len(), p.up(a).len());
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&a| (key(a), a));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &a in &sorted {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(a) => b.push(a),
            _ => blocks.push(vec![a]),
        }
    }
    let block_of: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| std::iter::repeat(i).take(b.len()))
        .collect();
    let mut best = (Vec::new(), u64::MAX);
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_blocks(p, &blocks, &block_of, &mut perm, &mut used, &mut best);
    best
}

fn search_blocks(
    p: &Poset,
    blocks: &[Vec<usize>],
    block_of: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut (Vec<usize>, u64),
) {
    if perm.len() == p.len() {
        let code = order_code(p, perm);
        if best.0.is_empty() || code < best.1 {
            *best = (perm.clone(), code);
        }
        return;
    }
    for &a in &blocks[block_of[perm.len()]] {
        if used[a] {
            continue;
        }
        used[a] = true;
        perm.push(a);
        search_blocks(p, blocks, block_of, perm, used, best);
        perm.pop();
        used[a] = false;
    }
}

/// Bit string of `perm[i] < perm[j]` over pairs `i < j`, first pair most significant.
fn order_code(p: &Poset, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            code = code << 1 | u64::from(p.leq(perm[i], perm[j]));
        }
    }
    code
}

/// Length of the longest chain ending at each element.
fn heights(p: &Poset) -> Vec<usize> {
    let mut h = vec![0; p.len()];
    for a in p.linear_extension() {
        h[a] = p
            .down(a)
            .iter()
            .filter(|&b| b != a)
            .map(|b| h[b] + 1)
            .max()
            .unwrap_or(0);
    }
    h
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let n = perm.len();
    let mut pos = vec![0; n];
    for (i, &a) in perm.iter().enumerate() {
        pos[a] = i;
    }
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => middle_name(i - 1),
        })
        .collect();
    let up = perm
        .iter()
        .map(|&a| p.up(a).iter().map(|b| pos[b]).collect())
        .collect();
    Poset::from_up_sets(names, up).expect("relabelling preserves the order")
}

fn middle_name(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}
