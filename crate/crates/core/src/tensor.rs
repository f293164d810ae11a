//! Lattices with a tensor product, and their radical tensor ideals.
//!
//! Elements stand for objects up to thick equivalence, joins for direct
//! sums. The product distributes over joins in each variable, kills `0`
//! and has a unit. `⟨a⟩` is the least radical tensor ideal containing `a`,
//! and `L(⊗)` is the set of these ordered by inclusion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::{sort_canonical, BitSet};
use crate::error::{Error, Result};
use crate::frames::{id_vs_omega_dual, IdOmegaCertificate};
use crate::ideals::{all_ideals, is_ideal, Ideal, IdealLattice};
use crate::order::{is_order_isomorphism, BoundedLattice, Poset};
use crate::SizeGuard;

#[derive(Debug, Clone)]
pub struct TensorLattice {
    base: BoundedLattice,
    /// `table[a][b] = a ⊗ b`
    table: Vec<Vec<usize>>,
    unit: usize,
}

impl TensorLattice {
    pub fn base(&self) -> &BoundedLattice {
        &self.base
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// First triple with `(a ⊗ b) ⊗ c ≠ a ⊗ (b ⊗ c)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.tensor(self.tensor(a, b), c) != self.tensor(a, self.tensor(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.tensor(a, b) == self.tensor(b, a)))
    }
}

/// Validates the table against the axioms, in the order shape, zero,
/// unit, join-distributivity, associativity.
///
/// Associativity is required: without it `⟨a⟩ ∩ ⟨b⟩ = ⟨a ⊗ b⟩` can fail
/// (see the tests for a five-element counterexample).
pub fn build_tensor_lattice(
    l: &BoundedLattice,
    table: Vec<Vec<usize>>,
    unit: usize,
) -> Result<TensorLattice> {
    build(l, table, unit, true)
}

fn build(
    l: &BoundedLattice,
    table: Vec<Vec<usize>>,
    unit: usize,
    associative: bool,
) -> Result<TensorLattice> {
    let n = l.len();
    if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::Malformed(format!("tensor table must be {n} × {n} over the carrier")));
    }
    if unit >= n {
        return Err(Error::Malformed("tensor unit is not an element".into()));
    }
    let name = |a: usize| l.name(a);
    let z = l.bottom();
    for a in 0..n {
        if table[a][z] != z || table[z][a] != z {
            return Err(Error::ZeroLawFails(format!(
                "{} ⊗ 0 = {}, 0 ⊗ {} = {}",
                name(a),
                name(table[a][z]),
                name(a),
                name(table[z][a])
            )));
        }
    }
    for a in 0..n {
        if table[unit][a] != a || table[a][unit] != a {
            return Err(Error::UnitLawFails(format!(
                "{u} ⊗ {x} = {}, {x} ⊗ {u} = {}",
                name(table[unit][a]),
                name(table[a][unit]),
                u = name(unit),
                x = name(a)
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = l.join(b, c);
                if table[a][bc] != l.join(table[a][b], table[a][c]) {
                    return Err(Error::NotDistributiveOverJoin(format!(
                        "{} ⊗ ({} ∨ {}) ≠ ({} ⊗ {}) ∨ ({} ⊗ {})",
                        name(a), name(b), name(c), name(a), name(b), name(a), name(c)
                    )));
                }
                if table[bc][a] != l.join(table[b][a], table[c][a]) {
                    return Err(Error::NotDistributiveOverJoin(format!(
                        "({} ∨ {}) ⊗ {} ≠ ({} ⊗ {}) ∨ ({} ⊗ {})",
                        name(b), name(c), name(a), name(b), name(a), name(c), name(a)
                    )));
                }
            }
        }
    }
    let t = TensorLattice { base: l.clone(), table, unit };
    // monotonicity follows from join-distributivity
    debug_assert!((0..n).all(|a| (0..n).all(|b| {
        !l.leq(a, b) || (0..n).all(|c| l.leq(t.tensor(a, c), t.tensor(b, c)) && l.leq(t.tensor(c, a), t.tensor(c, b)))
    })));
    if !associative {
        return Ok(t);
    }
    if let Some((a, b, c)) = t.associativity_witness() {
        return Err(Error::NotAssociative(format!(
            "({} ⊗ {}) ⊗ {} ≠ {} ⊗ ({} ⊗ {})",
            name(a), name(b), name(c), name(a), name(b), name(c)
        )));
    }
    Ok(t)
}

/// The table `a ⊗ b = a ∧ b` with unit `1`.
pub fn meet_table(l: &BoundedLattice) -> Vec<Vec<usize>> {
    let n = l.len();
    (0..n).map(|a| (0..n).map(|b| l.meet(a, b)).collect()).collect()
}

/// Downward closed, join closed, absorbing on both sides, and radical.
pub fn is_radical_tensor_ideal(t: &TensorLattice, set: BitSet) -> bool {
    let n = t.len();
    is_ideal(t.base(), set)
        && set.iter().all(|a| (0..n).all(|b| set.contains(t.tensor(a, b)) && set.contains(t.tensor(b, a))))
        && (0..n).all(|a| !set.contains(t.tensor(a, a)) || set.contains(a))
}

/// `⟨seed⟩`, by iterating the four closure rules to a fixpoint.
pub fn radical_closure(t: &TensorLattice, seed: BitSet) -> Ideal {
    let l = t.base();
    let n = t.len();
    let mut s = seed.with(l.bottom());
    loop {
        let mut next = l.down_closure(s);
        for a in next.iter() {
            for b in next.iter() {
                next.insert(l.join(a, b));
            }
        }
        for a in s.iter() {
            for b in 0..n {
                next.insert(t.tensor(a, b));
                next.insert(t.tensor(b, a));
            }
        }
        for a in 0..n {
            if s.contains(t.tensor(a, a)) {
                next.insert(a);
            }
        }
        if next == s {
            return Ideal(s);
        }
        s = next;
    }
}

pub fn generated(t: &TensorLattice, a: usize) -> Ideal {
    radical_closure(t, BitSet::singleton(a))
}

/// All radical tensor ideals ordered by inclusion, in canonical order.
pub fn all_radical_tensor_ideals(t: &TensorLattice, guard: SizeGuard) -> Result<IdealLattice> {
    let ideals: Vec<Ideal> = all_ideals(t.base(), guard)?
        .ideals
        .into_iter()
        .filter(|i| is_radical_tensor_ideal(t, i.members()))
        .collect();
    let lattice = crate::ideals::inclusion_lattice(t.base(), &ideals)?;
    Ok(IdealLattice { ideals, lattice })
}

/// `L(⊗)` with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    /// The distinct `⟨a⟩`, in canonical order.
    pub classes: Vec<Ideal>,
    /// `projection[a]` is the class of `⟨a⟩`.
    pub projection: Vec<usize>,
    /// Element `i` is `classes[i]`, named `[x]` after its first member in
    /// declaration order.
    pub lattice: BoundedLattice,
    /// first pair violating `[a] ∨ [b] = [a ∨ b]`
    pub join_witness: Option<(usize, usize)>,
    /// first pair violating `[a] ∧ [b] = [a ⊗ b]`
    pub meet_witness: Option<(usize, usize)>,
}

pub fn quotient_lattice(t: &TensorLattice) -> Result<Quotient> {
    let l = t.base();
    let n = t.len();
    let gens: Vec<Ideal> = (0..n).map(|a| generated(t, a)).collect();
    let mut sets: Vec<BitSet> = gens.iter().map(|i| i.members()).collect();
    sort_canonical(&mut sets);
    let classes: Vec<Ideal> = sets.into_iter().map(Ideal).collect();
    let projection: Vec<usize> = gens
        .iter()
        .map(|g| classes.iter().position(|c| c == g).expect("every generator is a class"))
        .collect();
    let names: Vec<String> = (0..classes.len())
        .map(|c| format!("[{}]", l.name(projection.iter().position(|&p| p == c).expect("classes are hit"))))
        .collect();
    let up = classes
        .iter()
        .map(|c| {
            (0..classes.len())
                .filter(|&d| c.members().is_subset(classes[d].members()))
                .collect()
        })
        .collect();
    let lattice = BoundedLattice::new(Poset::from_up_sets(names, up)?)?;
    let mut join_witness = None;
    let mut meet_witness = None;
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = (projection[a], projection[b]);
            if join_witness.is_none() && lattice.join(pa, pb) != projection[l.join(a, b)] {
                join_witness = Some((a, b));
            }
            if meet_witness.is_none() && lattice.meet(pa, pb) != projection[t.tensor(a, b)] {
                meet_witness = Some((a, b));
            }
        }
    }
    Ok(Quotient { classes, projection, lattice, join_witness, meet_witness })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaWitness {
    pub a: String,
    pub b: String,
    pub generated_a: Vec<String>,
    pub generated_b: Vec<String>,
    pub generated_product: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCertificate {
    pub pairs_checked: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LemmaWitness>,
}

/// `⟨a⟩ ∩ ⟨b⟩ = ⟨a ⊗ b⟩` for every pair.
pub fn check_tensor_lemma(t: &TensorLattice) -> LemmaCertificate {
    let l = t.base();
    let n = t.len();
    let gens: Vec<Ideal> = (0..n).map(|a| generated(t, a)).collect();
    let mut witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let meet = gens[a].members().intersection(gens[b].members());
            let product = gens[t.tensor(a, b)];
            if meet != product.members() {
                witness = Some(LemmaWitness {
                    a: l.name(a).to_string(),
                    b: l.name(b).to_string(),
                    generated_a: gens[a].names(l),
                    generated_b: gens[b].names(l),
                    generated_product: product.names(l),
                });
                break 'outer;
            }
        }
    }
    LemmaCertificate { pairs_checked: n * n, holds: witness.is_none(), witness }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationCertificate {
    pub classes: usize,
    pub radical_ideals: usize,
    pub quotient_distributive: bool,
    pub quotient_formulas: bool,
    /// `Id(L(⊗)) -> radical ideals`, `I ↦ ⋃ I`, is an isomorphism with
    /// inverse `S ↦ {[a] : a ∈ S}`
    pub ideals_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<IdOmegaCertificate>,
    pub classified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

pub fn check_classification(t: &TensorLattice, guard: SizeGuard) -> Result<ClassificationCertificate> {
    let q = quotient_lattice(t)?;
    let radicals = all_radical_tensor_ideals(t, guard)?;
    let mut failure = None;
    let quotient_distributive = q.lattice.is_distributive();
    if !quotient_distributive {
        failure = Some("L(⊗) is not distributive".to_string());
    }
    let quotient_formulas = q.join_witness.is_none() && q.meet_witness.is_none();
    if !quotient_formulas {
        failure.get_or_insert("join or meet formula fails in L(⊗)".to_string());
    }
    let id_q = all_ideals(&q.lattice, guard)?;
    let union = |i: &Ideal| -> BitSet {
        i.members().iter().fold(BitSet::EMPTY, |acc, c| acc.union(q.classes[c].members()))
    };
    let forward: Vec<Option<usize>> =
        id_q.ideals.iter().map(|i| radicals.position(Ideal(union(i)))).collect();
    let backward = |s: &Ideal| -> Ideal {
        Ideal(s.members().iter().map(|a| q.projection[a]).collect())
    };
    let ideals_match = forward.iter().all(Option::is_some)
        && id_q.len() == radicals.len()
        && {
            let f: Vec<usize> = forward.iter().map(|p| p.unwrap()).collect();
            is_order_isomorphism(id_q.lattice.poset(), radicals.lattice.poset(), &f)
                && radicals.ideals.iter().enumerate().all(|(r, s)| {
                    id_q.position(backward(s)).is_some_and(|i| f[i] == r)
                })
        };
    if !ideals_match {
        failure.get_or_insert("Id(L(⊗)) does not match the radical ideals".to_string());
    }
    let omega = if quotient_distributive {
        let c = id_vs_omega_dual(&q.lattice, guard)?;
        if !(c.isomorphism && c.inverse_roundtrip) {
            failure.get_or_insert("Id(L(⊗)) is not Ω(Spc(L(⊗))^∨)".to_string());
        }
        Some(c)
    } else {
        None
    };
    Ok(ClassificationCertificate {
        classes: q.classes.len(),
        radical_ideals: radicals.len(),
        quotient_distributive,
        quotient_formulas,
        ideals_match,
        omega,
        classified: failure.is_none(),
        failure,
    })
}

/// Random candidate table: values drawn on pairs of join-irreducibles,
/// extended by joins, with the unit row and column forced. Roughly half
/// the draws are kept below the meet, which makes valid tables common.
pub fn random_table(l: &BoundedLattice, rng: &mut impl Rng) -> (Vec<Vec<usize>>, usize) {
    let n = l.len();
    let irreducibles: Vec<usize> = crate::ideals::join_irreducibles(l).iter().collect();
    let unit = rng.gen_range(0..n);
    let mut g = vec![vec![l.bottom(); n]; n];
    let meet_like = rng.gen_bool(0.5);
    for &j in &irreducibles {
        for &k in &irreducibles {
            let cap = if meet_like { l.meet(j, k) } else { l.top() };
            let below: Vec<usize> = l.down(cap).iter().collect();
            g[j][k] = below[rng.gen_range(0..below.len())];
        }
    }
    let mut table = vec![vec![l.bottom(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut v = l.bottom();
            for &j in irreducibles.iter().filter(|&&j| l.leq(j, a)) {
                for &k in irreducibles.iter().filter(|&&k| l.leq(k, b)) {
                    v = l.join(v, g[j][k]);
                }
            }
            table[a][b] = v;
        }
    }
    for a in 0..n {
        table[unit][a] = a;
        table[a][unit] = a;
    }
    (table, unit)
}

/// Up to `wanted` valid tensor lattices on `l`, drawn from a generator
/// seeded by `seed`; gives up after `attempts` draws.
pub fn fuzz_tensor_lattices(
    l: &BoundedLattice,
    seed: u64,
    wanted: usize,
    attempts: usize,
) -> Vec<TensorLattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<TensorLattice> = Vec::new();
    for _ in 0..attempts {
        if out.len() == wanted {
            break;
        }
        let (table, unit) = random_table(l, &mut rng);
        if let Ok(t) = build_tensor_lattice(l, table, unit) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate, named};

    fn g() -> SizeGuard {
        SizeGuard::default()
    }

    /// C3 = {0, m, 1} with m ⊗ m = 0.
    fn nilpotent_c3() -> TensorLattice {
        let c3 = named::c3();
        build_tensor_lattice(&c3, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]], 2).unwrap()
    }

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn validation_examples() {
        let b2 = named::b2();
        assert!(build_tensor_lattice(&b2, meet_table(&b2), 3).is_ok());
        let t = nilpotent_c3();
        assert!(t.is_commutative());
        let join: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| b2.join(a, b)).collect()).collect();
        assert!(matches!(build_tensor_lattice(&b2, join, 0), Err(Error::ZeroLawFails(_))));
        assert!(matches!(build_tensor_lattice(&b2, meet_table(&b2), 1), Err(Error::UnitLawFails(_))));
        assert!(matches!(build_tensor_lattice(&b2, vec![vec![0; 3]; 3], 3), Err(Error::Malformed(_))));
        // on N5 the meet does not distribute over joins
        let n5 = named::n5();
        assert!(matches!(
            build_tensor_lattice(&n5, meet_table(&n5), n5.top()),
            Err(Error::NotDistributiveOverJoin(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let t = nilpotent_c3();
        assert_eq!(radical_closure(&t, BitSet::singleton(0)).members(), set(&[0, 1]));
        assert_eq!(generated(&t, 2).members(), set(&[0, 1, 2]));
        let b2 = named::b2();
        let t = build_tensor_lattice(&b2, meet_table(&b2), 3).unwrap();
        assert_eq!(generated(&t, 1).members(), set(&[0, 1]));
        assert_eq!(generated(&t, 3).members(), BitSet::full(4));
    }

    #[test]
    fn radical_ideal_examples() {
        let b2 = named::b2();
        let t = build_tensor_lattice(&b2, meet_table(&b2), 3).unwrap();
        assert_eq!(all_radical_tensor_ideals(&t, g()).unwrap().len(), 4);
        let r = all_radical_tensor_ideals(&nilpotent_c3(), g()).unwrap();
        let sets: Vec<BitSet> = r.ideals.iter().map(|i| i.members()).collect();
        assert_eq!(sets, vec![set(&[0, 1]), set(&[0, 1, 2])]);
        let triv = named::trivial();
        let t = build_tensor_lattice(&triv, vec![vec![0]], 0).unwrap();
        assert_eq!(all_radical_tensor_ideals(&t, g()).unwrap().len(), 1);
    }

    #[test]
    fn quotient_examples() {
        let b2 = named::b2();
        let t = build_tensor_lattice(&b2, meet_table(&b2), 3).unwrap();
        let q = quotient_lattice(&t).unwrap();
        assert_eq!(q.classes.len(), 4);
        assert!(q.join_witness.is_none() && q.meet_witness.is_none());
        let q = quotient_lattice(&nilpotent_c3()).unwrap();
        assert_eq!(q.classes.len(), 2);
        assert_eq!(q.projection[0], q.projection[1]);
        assert_eq!(q.lattice.names(), ["[0]", "[1]"]);
        for e in generate(6).unwrap().into_iter().filter(|e| e.lattice.is_distributive()) {
            let t = build_tensor_lattice(&e.lattice, meet_table(&e.lattice), e.lattice.top()).unwrap();
            let q = quotient_lattice(&t).unwrap();
            assert_eq!(q.classes.len(), e.lattice.len(), "{}", e.name);
        }
    }

    #[test]
    fn lemma_and_classification_examples() {
        let b2 = named::b2();
        let t = build_tensor_lattice(&b2, meet_table(&b2), 3).unwrap();
        assert!(check_tensor_lemma(&t).holds);
        let c = check_classification(&t, g()).unwrap();
        assert!(c.classified);
        assert_eq!((c.classes, c.radical_ideals), (4, 4));
        assert_eq!(c.omega.unwrap().opens, 4);

        let t = nilpotent_c3();
        assert!(check_tensor_lemma(&t).holds);
        let c = check_classification(&t, g()).unwrap();
        assert!(c.classified);
        assert_eq!((c.classes, c.radical_ideals), (2, 2));

        let triv = named::trivial();
        let t = build_tensor_lattice(&triv, vec![vec![0]], 0).unwrap();
        let c = check_classification(&t, g()).unwrap();
        assert_eq!((c.classes, c.radical_ideals, c.classified), (1, 1, true));
    }

    #[test]
    fn closure_operator_laws() {
        for e in generate(5).unwrap() {
            for t in fuzz_tensor_lattices(&e.lattice, 7, 10, 400) {
                let n = t.len();
                for a in 0..n {
                    for b in 0..n {
                        let seed = set(&[a, b]);
                        let c = radical_closure(&t, seed).members();
                        assert!(seed.is_subset(c));
                        assert!(is_radical_tensor_ideal(&t, c));
                        assert_eq!(radical_closure(&t, c).members(), c);
                        assert!(generated(&t, a).members().is_subset(c));
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_needs_associativity() {
        // 0 < a, b < c < 1 with unit c; a ⊗ 1 = 1 ⊗ b = 1 but a ⊗ b = 0
        let l = BoundedLattice::from_pairs(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
        )
        .unwrap();
        let table = vec![
            vec![0, 0, 0, 0, 0],
            vec![0, 1, 0, 1, 4],
            vec![0, 0, 2, 2, 4],
            vec![0, 1, 2, 3, 4],
            vec![0, 1, 4, 4, 4],
        ];
        assert!(matches!(build_tensor_lattice(&l, table.clone(), 3), Err(Error::NotAssociative(_))));
        let t = build(&l, table, 3, false).unwrap();
        let c = check_tensor_lemma(&t);
        let w = c.witness.unwrap();
        assert_eq!((w.a.as_str(), w.b.as_str()), ("a", "b"));
        assert_eq!(w.generated_product, ["0"]);
    }

    #[test]
    fn fuzzing_is_deterministic() {
        let b2 = named::b2();
        let first: Vec<Vec<Vec<usize>>> =
            fuzz_tensor_lattices(&b2, 3, 20, 2000).iter().map(|t| t.table().to_vec()).collect();
        let second: Vec<Vec<Vec<usize>>> =
            fuzz_tensor_lattices(&b2, 3, 20, 2000).iter().map(|t| t.table().to_vec()).collect();
        assert_eq!(first, second);
        assert!(!first.is_empty());
    }
}
