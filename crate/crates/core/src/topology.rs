//! Finite topological spaces and the spectra of (semi)lattices.
//!
//! A space stores its whole family of open sets. For the spectra the points
//! are ideals, labelled by their canonical serialization, and `supp(a)` is
//! the set of points not containing `a`.

use serde::{Deserialize, Serialize};

use crate::bitset::{set_label, sort_canonical, BitSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, prime_ideals, Ideal};
use crate::order::{BoundedLattice, JoinSemilattice, Poset};
use crate::{Budget, SizeGuard};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: Vec<String>,
    opens: Vec<BitSet>,
}

impl FiniteSpace {
    /// Validates a topology: `∅` and the full set are open and opens are
    /// closed under pairwise union and intersection. Opens are stored in
    /// canonical order.
    pub fn new(points: Vec<String>, opens: Vec<BitSet>) -> Result<Self> {
        check_points(&points)?;
        let full = BitSet::full(points.len());
        let mut opens = opens;
        sort_canonical(&mut opens);
        let label = |s: BitSet| set_label(&points, s);
        if let Some(&bad) = opens.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::Malformed(format!("open set {bad:?} mentions unknown points")));
        }
        if !opens.contains(&BitSet::EMPTY) {
            return Err(Error::Malformed("the empty set must be open".into()));
        }
        if !opens.contains(&full) {
            return Err(Error::Malformed("the whole space must be open".into()));
        }
        for &u in &opens {
            for &v in &opens {
                if !opens.contains(&u.union(v)) || !opens.contains(&u.intersection(v)) {
                    return Err(Error::Malformed(format!(
                        "opens {} and {} are not closed under union and intersection",
                        label(u),
                        label(v)
                    )));
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    pub fn discrete(points: Vec<String>) -> Result<Self> {
        check_points(&points)?;
        let opens = (0u64..1 << points.len()).map(BitSet::from_bits).collect();
        Self::new(points, opens)
    }

    /// Points `p, q` with `{q}` the only nontrivial open set.
    pub fn sierpinski() -> Self {
        let opens = vec![BitSet::EMPTY, BitSet::singleton(1), BitSet::full(2)];
        Self::new(vec!["p".into(), "q".into()], opens).expect("Sierpiński space")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> Vec<BitSet> {
        let mut c: Vec<BitSet> = self.opens.iter().map(|u| u.complement(self.len())).collect();
        sort_canonical(&mut c);
        c
    }

    pub fn is_open(&self, s: BitSet) -> bool {
        self.opens.binary_search_by(|u| u.canonical_cmp(s)).is_ok()
    }

    pub fn is_closed(&self, s: BitSet) -> bool {
        s.is_subset(self.full()) && self.is_open(s.complement(self.len()))
    }

    /// Smallest closed superset.
    pub fn closure(&self, s: BitSet) -> BitSet {
        self.opens
            .iter()
            .filter(|u| u.is_disjoint(s))
            .fold(BitSet::EMPTY, |acc, u| acc.union(*u))
            .complement(self.len())
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> BitSet {
        self.opens
            .iter()
            .filter(|u| u.contains(x))
            .fold(self.full(), |acc, u| acc.intersection(*u))
    }

    pub fn label(&self, s: BitSet) -> String {
        set_label(&self.points, s)
    }
}

fn check_points(points: &[String]) -> Result<()> {
    if points.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(points.len()));
    }
    for (i, p) in points.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::EmptyName);
        }
        if points[..i].contains(p) {
            return Err(Error::DuplicateName(p.clone()));
        }
    }
    Ok(())
}

fn close_under(seed: Vec<BitSet>, op: impl Fn(BitSet, BitSet) -> BitSet) -> Vec<BitSet> {
    let mut sets = seed;
    sort_canonical(&mut sets);
    let mut i = 0;
    while i < sets.len() {
        let a = sets[i];
        let mut fresh = Vec::new();
        for &b in &sets[..=i] {
            let c = op(a, b);
            if !sets.contains(&c) && !fresh.contains(&c) {
                fresh.push(c);
            }
        }
        sets.extend(fresh);
        i += 1;
    }
    sort_canonical(&mut sets);
    sets
}

/// Closed sets are the intersections of finite unions of basis sets, the
/// empty union and the empty intersection included.
pub fn space_from_closed_basis(points: Vec<String>, basis: &[BitSet]) -> Result<FiniteSpace> {
    check_points(&points)?;
    let full = BitSet::full(points.len());
    let mut seed = vec![BitSet::EMPTY];
    seed.extend(basis.iter().map(|b| b.intersection(full)));
    let unions = close_under(seed, BitSet::union);
    let mut seed = unions;
    seed.push(full);
    let closed = close_under(seed, BitSet::intersection);
    let opens = closed.iter().map(|c| c.complement(points.len())).collect();
    FiniteSpace::new(points, opens)
}

/// Opens are the unions of finite intersections of basis sets, the empty
/// union and the empty intersection included.
pub fn space_from_open_basis(points: Vec<String>, basis: &[BitSet]) -> Result<FiniteSpace> {
    check_points(&points)?;
    let full = BitSet::full(points.len());
    let mut seed = vec![full];
    seed.extend(basis.iter().map(|b| b.intersection(full)));
    let meets = close_under(seed, BitSet::intersection);
    let mut seed = meets;
    seed.push(BitSet::EMPTY);
    let opens = close_under(seed, BitSet::union);
    FiniteSpace::new(points, opens)
}

/// Writes `open` as a union of finite intersections of basis sets.
///
/// Each entry is a set of basis indices whose intersection is one term of
/// the union; `None` when `open` is not generated by the basis.
pub fn open_generation_certificate(
    n_points: usize,
    basis: &[BitSet],
    open: BitSet,
) -> Option<Vec<Vec<usize>>> {
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut covered = BitSet::EMPTY;
    for x in open.iter() {
        let term: Vec<usize> = (0..basis.len()).filter(|&t| basis[t].contains(x)).collect();
        let set = term
            .iter()
            .fold(BitSet::full(n_points), |acc, &t| acc.intersection(basis[t]));
        if !set.is_subset(open) {
            return None;
        }
        covered = covered.union(set);
        if !terms.contains(&term) {
            terms.push(term);
        }
    }
    (covered == open).then_some(terms)
}

/// Writes `closed` as an intersection of finite unions of basis sets.
pub fn closed_generation_certificate(
    n_points: usize,
    basis: &[BitSet],
    closed: BitSet,
) -> Option<Vec<Vec<usize>>> {
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut cut = BitSet::full(n_points);
    for y in closed.complement(n_points).iter() {
        let term: Vec<usize> = (0..basis.len()).filter(|&t| !basis[t].contains(y)).collect();
        let set = term.iter().fold(BitSet::EMPTY, |acc, &t| acc.union(basis[t]));
        if !closed.is_subset(set) {
            return None;
        }
        cut = cut.intersection(set);
        if !terms.contains(&term) {
            terms.push(term);
        }
    }
    (cut == closed).then_some(terms)
}

/// Lattice of the given point sets under inclusion, each named by its label.
fn set_lattice(x: &FiniteSpace, sets: &[BitSet]) -> BoundedLattice {
    let names = sets.iter().map(|&s| x.label(s)).collect();
    let up = sets
        .iter()
        .map(|&s| {
            sets.iter()
                .enumerate()
                .filter(|(_, t)| s.is_subset(**t))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    BoundedLattice::new(Poset::from_up_sets(names, up).expect("inclusion is a partial order"))
        .expect("a topology is a lattice under inclusion")
}

/// `Ω(X)`; element `i` is `x.opens()[i]`.
pub fn omega_lattice(x: &FiniteSpace) -> BoundedLattice {
    set_lattice(x, x.opens())
}

/// `Cl(X)`; element `i` is `x.closed_sets()[i]`.
pub fn cl_lattice(x: &FiniteSpace) -> BoundedLattice {
    set_lattice(x, &x.closed_sets())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumKind {
    /// All ideals, `supp(a)` a closed basis.
    Sp,
    /// Prime ideals, `supp(a)` a closed basis.
    Spc,
    /// Prime ideals, `supp(a)` an open basis.
    HochsterDual,
}

/// The support sets `supp(a)`, one per lattice element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportBasis {
    pub assignment: Vec<BitSet>,
    /// `true` when the sets are a basis of open sets, `false` for closed.
    pub open: bool,
}

impl SupportBasis {
    pub fn supp(&self, a: usize) -> BitSet {
        self.assignment[a]
    }
}

#[derive(Debug, Clone)]
pub struct Spectrum {
    pub kind: SpectrumKind,
    /// Point `i` of `space` is `points[i]`.
    pub points: Vec<Ideal>,
    pub space: FiniteSpace,
    pub supp: SupportBasis,
}

impl Spectrum {
    pub fn position(&self, ideal: Ideal) -> Option<usize> {
        self.points.iter().position(|&p| p == ideal)
    }
}

fn supports(n: usize, points: &[Ideal]) -> Vec<BitSet> {
    (0..n)
        .map(|a| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.contains(a))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

fn assert_join_laws(l: &JoinSemilattice, supp: &[BitSet], n_points: usize) {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                supp[l.join(a, b)],
                supp[a].union(supp[b]),
                "supp({} ∨ {}) is not the union",
                l.name(a),
                l.name(b)
            );
        }
    }
    let meet_all = supp.iter().fold(BitSet::full(n_points), |acc, s| acc.intersection(*s));
    assert!(meet_all.is_empty(), "the supports have a common point");
}

/// `Sp(L)`: all ideals, with `supp(a)` a basis of closed sets.
pub fn sp_space(l: &JoinSemilattice, guard: SizeGuard) -> Result<Spectrum> {
    let points = all_ideals(l, guard)?.ideals;
    let supp = supports(l.len(), &points);
    assert_join_laws(l, &supp, points.len());
    let names = points.iter().map(|i| i.label(l)).collect();
    let space = space_from_closed_basis(names, &supp)?;
    Ok(Spectrum {
        kind: SpectrumKind::Sp,
        points,
        space,
        supp: SupportBasis { assignment: supp, open: false },
    })
}

/// `Spc(L)`: prime ideals, with `supp(a)` a basis of closed sets.
pub fn spc_space(l: &BoundedLattice) -> Result<Spectrum> {
    let points = prime_ideals(l);
    let supp = supports(l.len(), &points);
    assert_join_laws(l, &supp, points.len());
    let names = points.iter().map(|i| i.label(l)).collect();
    let space = space_from_closed_basis(names, &supp)?;
    Ok(Spectrum {
        kind: SpectrumKind::Spc,
        points,
        space,
        supp: SupportBasis { assignment: supp, open: false },
    })
}

/// `Spc(L)^∨`: prime ideals, with `supp(a)` a basis of open sets.
pub fn hochster_dual(l: &BoundedLattice) -> Result<Spectrum> {
    let points = prime_ideals(l);
    let supp = supports(l.len(), &points);
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                supp[l.meet(a, b)],
                supp[a].intersection(supp[b]),
                "supp({} ∧ {}) is not the intersection",
                l.name(a),
                l.name(b)
            );
        }
    }
    let cover = supp.iter().fold(BitSet::EMPTY, |acc, s| acc.union(*s));
    assert_eq!(cover, BitSet::full(points.len()), "the supports do not cover");
    let names = points.iter().map(|i| i.label(l)).collect();
    let space = space_from_open_basis(names, &supp)?;
    Ok(Spectrum {
        kind: SpectrumKind::HochsterDual,
        points,
        space,
        supp: SupportBasis { assignment: supp, open: true },
    })
}

/// `x <= y` iff `x ∈ cl{y}`.
pub fn specialization_order(x: &FiniteSpace) -> Result<Poset> {
    let up = specialization_up_sets(x);
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if up[a].contains(b) && up[b].contains(a) {
                return Err(Error::NotT0(x.point(a).into(), x.point(b).into()));
            }
        }
    }
    Poset::from_up_sets(x.points().to_vec(), up)
}

/// `up[a] = {b : a ∈ cl{b}}`, which is the smallest open set containing `a`.
fn specialization_up_sets(x: &FiniteSpace) -> Vec<BitSet> {
    (0..x.len()).map(|a| x.neighbourhood(a)).collect()
}

pub fn preimage(f: &[usize], set: BitSet) -> BitSet {
    f.iter()
        .enumerate()
        .filter(|&(_, &y)| set.contains(y))
        .map(|(x, _)| x)
        .collect()
}

pub fn image(f: &[usize], set: BitSet) -> BitSet {
    set.iter().map(|x| f[x]).collect()
}

pub fn is_continuous(f: &[usize], x: &FiniteSpace, y: &FiniteSpace) -> bool {
    f.len() == x.len()
        && f.iter().all(|&v| v < y.len())
        && y.opens().iter().all(|&v| x.is_open(preimage(f, v)))
}

/// The first open set of `y` whose preimage is not open, as an error.
pub fn check_continuous(f: &[usize], x: &FiniteSpace, y: &FiniteSpace) -> Result<()> {
    if f.len() != x.len() || f.iter().any(|&v| v >= y.len()) {
        return Err(Error::Malformed("map is not total on the source points".into()));
    }
    match y.opens().iter().find(|&&v| !x.is_open(preimage(f, v))) {
        Some(&v) => Err(Error::NotContinuous(y.label(v))),
        None => Ok(()),
    }
}

/// All continuous maps `x -> y`, in lexicographic order of image tuples.
///
/// Partial maps are pruned by monotonicity for the specialization preorders,
/// which continuity implies; survivors are checked against the opens.
pub fn enumerate_continuous(
    x: &FiniteSpace,
    y: &FiniteSpace,
    guard: SizeGuard,
) -> Result<Vec<Vec<usize>>> {
    let xu = specialization_up_sets(x);
    let yu = specialization_up_sets(y);
    let mut budget = Budget::new(guard);
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(x.len());
    fn walk(
        x: &FiniteSpace,
        y: &FiniteSpace,
        xu: &[BitSet],
        yu: &[BitSet],
        f: &mut Vec<usize>,
        budget: &mut Budget,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let a = f.len();
        if a == x.len() {
            if is_continuous(f, x, y) {
                out.push(f.clone());
            }
            return Ok(());
        }
        for v in 0..y.len() {
            budget.tick()?;
            let monotone = (0..a).all(|b| {
                (!xu[b].contains(a) || yu[f[b]].contains(v))
                    && (!xu[a].contains(b) || yu[v].contains(f[b]))
            });
            if monotone {
                f.push(v);
                walk(x, y, xu, yu, f, budget, out)?;
                f.pop();
            }
        }
        Ok(())
    }
    walk(x, y, &xu, &yu, &mut f, &mut budget, &mut out)?;
    Ok(out)
}

/// Bijection whose forward images and preimages both carry opens to opens.
pub fn is_homeomorphism(f: &[usize], x: &FiniteSpace, y: &FiniteSpace) -> bool {
    if f.len() != x.len() || x.len() != y.len() {
        return false;
    }
    let img: BitSet = f.iter().copied().collect();
    img == y.full()
        && x.opens().iter().all(|&u| y.is_open(image(f, u)))
        && y.opens().iter().all(|&v| x.is_open(preimage(f, v)))
}

/// Backtracking search for a homeomorphism, pruned by the number of open
/// sets containing each point and by the specialization preorders.
pub fn find_homeomorphism(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    let n = x.len();
    if n != y.len() || x.opens().len() != y.opens().len() {
        return None;
    }
    let degree = |s: &FiniteSpace, p: usize| s.opens().iter().filter(|u| u.contains(p)).count();
    let xd: Vec<usize> = (0..n).map(|p| degree(x, p)).collect();
    let yd: Vec<usize> = (0..n).map(|p| degree(y, p)).collect();
    let xu = specialization_up_sets(x);
    let yu = specialization_up_sets(y);
    let mut f = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn walk(
        ctx: (&FiniteSpace, &FiniteSpace, &[usize], &[usize], &[BitSet], &[BitSet]),
        f: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let (x, y, xd, yd, xu, yu) = ctx;
        let a = f.len();
        if a == x.len() {
            return is_homeomorphism(f, x, y);
        }
        for v in 0..y.len() {
            if used[v] || xd[a] != yd[v] {
                continue;
            }
            let ok = (0..a).all(|b| {
                xu[b].contains(a) == yu[f[b]].contains(v) && xu[a].contains(b) == yu[v].contains(f[b])
            });
            if !ok {
                continue;
            }
            used[v] = true;
            f.push(v);
            if walk(ctx, f, used) {
                return true;
            }
            f.pop();
            used[v] = false;
        }
        false
    }
    walk((x, y, &xd, &yd, &xu, &yu), &mut f, &mut used).then_some(f)
}

/// Every topology on `n` labelled points `x0, x1, ..`, as the up-set
/// topologies of all preorders. Supports `n <= 5`.
pub fn all_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > 5 {
        return Err(Error::SizeGuard(n as u64));
    }
    let points: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << off_diagonal.len() {
        let mut up: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        for (k, &(a, b)) in off_diagonal.iter().enumerate() {
            if bits >> k & 1 == 1 {
                up[a].insert(b);
            }
        }
        let transitive = (0..n).all(|a| up[a].iter().all(|b| up[b].is_subset(up[a])));
        if !transitive {
            continue;
        }
        let opens = (0u64..1 << n)
            .map(BitSet::from_bits)
            .filter(|s| s.iter().all(|a| up[a].is_subset(*s)))
            .collect();
        out.push(FiniteSpace::new(points.clone(), opens)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, named};
    use crate::order::find_isomorphism;

    fn pts(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    /// Every map `0..n -> 0..m` in lexicographic order.
    fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|f| (0..m).map(move |v| [f.clone(), vec![v]].concat()))
                .collect();
        }
        out
    }

    fn open_labels(x: &FiniteSpace) -> Vec<String> {
        x.opens().iter().map(|&u| x.label(u)).collect()
    }

    #[test]
    fn closed_basis_examples() {
        let x = space_from_closed_basis(pts(&["p"]), &[BitSet::EMPTY]).unwrap();
        assert_eq!(x.opens().len(), 2);
        let s = space_from_closed_basis(pts(&["p", "q"]), &[set(&[0])]).unwrap();
        assert_eq!(open_labels(&s), vec!["{}", "{q}", "{p,q}"]);
        let t = space_from_closed_basis(pts(&["p", "q", "r"]), &[set(&[0]), set(&[1])]).unwrap();
        let mut closed: Vec<String> = t.closed_sets().iter().map(|&c| t.label(c)).collect();
        closed.sort();
        assert_eq!(closed, vec!["{p,q,r}", "{p,q}", "{p}", "{q}", "{}"]);
        assert_eq!(t.opens().len(), 5);
    }

    #[test]
    fn open_basis_examples() {
        let x = space_from_open_basis(pts(&["p"]), &[BitSet::EMPTY]).unwrap();
        assert_eq!(x.opens().len(), 2);
        let s = space_from_open_basis(pts(&["p", "q"]), &[set(&[1])]).unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        let t = space_from_open_basis(pts(&["p", "q", "r"]), &[set(&[0]), set(&[1])]).unwrap();
        assert_eq!(open_labels(&t), vec!["{}", "{p}", "{q}", "{p,q}", "{p,q,r}"]);
    }

    #[test]
    fn generation_certificates_exist() {
        let basis = [set(&[0, 1]), set(&[1, 2]), set(&[3])];
        let x = space_from_open_basis(pts(&["a", "b", "c", "d"]), &basis).unwrap();
        for &u in x.opens() {
            assert!(open_generation_certificate(4, &basis, u).is_some());
        }
        let y = space_from_closed_basis(pts(&["a", "b", "c", "d"]), &basis).unwrap();
        for c in y.closed_sets() {
            assert!(closed_generation_certificate(4, &basis, c).is_some());
        }
        assert!(open_generation_certificate(4, &basis, set(&[0])).is_none());
    }

    #[test]
    fn invalid_topologies_are_rejected() {
        let r = FiniteSpace::new(pts(&["p", "q"]), vec![BitSet::EMPTY, set(&[0]), set(&[1])]);
        assert!(matches!(r, Err(Error::Malformed(_))));
        let r = FiniteSpace::new(pts(&["p", "p"]), vec![BitSet::EMPTY, set(&[0, 1])]);
        assert_eq!(r, Err(Error::DuplicateName("p".into())));
    }

    #[test]
    fn omega_and_cl() {
        let s = FiniteSpace::sierpinski();
        assert!(find_isomorphism(omega_lattice(&s).poset(), named::c3().poset()).is_some());
        let d = FiniteSpace::discrete(pts(&["p", "q"])).unwrap();
        assert!(find_isomorphism(omega_lattice(&d).poset(), named::b2().poset()).is_some());
        for x in all_topologies(3).unwrap() {
            // complement is an isomorphism Cl(X) -> Ω(X)^op
            let cl = cl_lattice(&x);
            let omega_op = omega_lattice(&x).dual();
            let closed = x.closed_sets();
            let map: Vec<usize> = closed
                .iter()
                .map(|c| x.opens().iter().position(|u| *u == c.complement(x.len())).unwrap())
                .collect();
            assert!(crate::order::is_order_isomorphism(cl.poset(), omega_op.poset(), &map));
        }
    }

    #[test]
    fn sp_examples() {
        let g = SizeGuard::default();
        let two = named::two();
        let sp = sp_space(&two, g).unwrap();
        assert_eq!(sp.space.points(), &["{0}".to_string(), "{0,1}".to_string()]);
        assert_eq!(sp.space.label(sp.supp.supp(1)), "{{0}}");
        let closed: Vec<String> = sp.space.closed_sets().iter().map(|&c| sp.space.label(c)).collect();
        assert_eq!(closed, vec!["{}", "{{0}}", "{{0},{0,1}}"]);

        let c3 = named::c3();
        let sp3 = sp_space(&c3, g).unwrap();
        assert_eq!(sp3.points.len(), 3);
        let m = c3.index_of("m").unwrap();
        assert_eq!(sp3.space.label(sp3.supp.supp(m)), "{{0}}");
        assert_eq!(sp3.space.label(sp3.supp.supp(c3.top())), "{{0},{0,m}}");
    }

    #[test]
    fn supp_of_bottom_is_empty() {
        for e in corpus::generate(5).unwrap() {
            let sp = sp_space(&e.lattice, SizeGuard::default()).unwrap();
            assert!(sp.supp.supp(e.lattice.bottom()).is_empty());
        }
    }

    #[test]
    fn spc_examples() {
        let b2 = named::b2();
        let spc = spc_space(&b2).unwrap();
        assert_eq!(spc.space.points(), &["{0,a}".to_string(), "{0,b}".to_string()]);
        let [a, b] = ["a", "b"].map(|s| b2.index_of(s).unwrap());
        assert_eq!(spc.space.label(spc.supp.supp(a)), "{{0,b}}");
        assert_eq!(spc.space.label(spc.supp.supp(b)), "{{0,a}}");
        assert_eq!(spc.supp.supp(b2.top()), spc.space.full());

        let m3 = spc_space(&named::m3()).unwrap();
        assert!(m3.space.is_empty());
        assert_eq!(m3.space.opens(), &[BitSet::EMPTY]);

        let n5 = named::n5();
        let s = spc_space(&n5).unwrap();
        let [b, c] = ["b", "c"].map(|x| n5.index_of(x).unwrap());
        assert_eq!(s.supp.supp(b), s.supp.supp(c));
        assert_eq!(s.space.label(s.supp.supp(b)), "{{0,a}}");
    }

    #[test]
    fn hochster_examples() {
        let c3 = hochster_dual(&named::c3()).unwrap();
        assert_eq!(open_labels(&c3.space), vec!["{}", "{{0}}", "{{0},{0,m}}"]);
        assert!(find_homeomorphism(&c3.space, &FiniteSpace::sierpinski()).is_some());
        assert_eq!(hochster_dual(&named::two()).unwrap().space.len(), 1);
        let b2 = hochster_dual(&named::b2()).unwrap();
        let d = FiniteSpace::discrete(pts(&["p", "q"])).unwrap();
        assert!(find_homeomorphism(&b2.space, &d).is_some());
    }

    #[test]
    fn hochster_dual_is_spectrum_of_dual() {
        for e in corpus::generate(6).unwrap() {
            let l = &e.lattice;
            let hd = hochster_dual(l).unwrap();
            let op = spc_space(&l.dual()).unwrap();
            let f: Vec<usize> = hd
                .points
                .iter()
                .map(|p| op.position(Ideal(p.members().complement(l.len()))).unwrap())
                .collect();
            assert!(is_homeomorphism(&f, &hd.space, &op.space), "{}", e.name);
        }
    }

    #[test]
    fn specialization_examples() {
        let s = FiniteSpace::sierpinski();
        let o = specialization_order(&s).unwrap();
        assert!(o.leq(0, 1) && !o.leq(1, 0));
        let d = FiniteSpace::discrete(pts(&["p", "q", "r"])).unwrap();
        let o = specialization_order(&d).unwrap();
        assert!(o.covers().is_empty());
        let indiscrete = FiniteSpace::new(pts(&["p", "q"]), vec![BitSet::EMPTY, set(&[0, 1])]).unwrap();
        assert_eq!(
            specialization_order(&indiscrete),
            Err(Error::NotT0("p".into(), "q".into()))
        );
    }

    #[test]
    fn specialization_of_sp_is_inclusion() {
        for e in corpus::generate(6).unwrap() {
            let sp = sp_space(&e.lattice, SizeGuard::default()).unwrap();
            let o = specialization_order(&sp.space).unwrap();
            for (i, p) in sp.points.iter().enumerate() {
                for (j, q) in sp.points.iter().enumerate() {
                    assert_eq!(o.leq(i, j), p.members().is_subset(q.members()));
                }
            }
        }
    }

    #[test]
    fn continuity() {
        let s = FiniteSpace::sierpinski();
        let sp = sp_space(&named::two(), SizeGuard::default()).unwrap();
        let maps = enumerate_continuous(&s, &sp.space, SizeGuard::default()).unwrap();
        assert_eq!(maps.len(), 3);
        for x in all_topologies(3).unwrap() {
            let id: Vec<usize> = (0..x.len()).collect();
            assert!(is_continuous(&id, &x, &x));
            for y in all_topologies(2).unwrap() {
                for c in 0..y.len() {
                    assert!(is_continuous(&vec![c; x.len()], &x, &y));
                }
                // pruned enumeration agrees with testing every map
                let all = enumerate_continuous(&x, &y, SizeGuard::default()).unwrap();
                let brute: Vec<Vec<usize>> = all_maps(x.len(), y.len())
                    .into_iter()
                    .filter(|f| is_continuous(f, &x, &y))
                    .collect();
                assert_eq!(all, brute);
            }
        }
        assert!(matches!(
            check_continuous(&[1, 0], &s, &s),
            Err(Error::NotContinuous(_))
        ));
    }

    #[test]
    fn topology_counts() {
        // independent count: families containing ∅ and X closed under ∪ and ∩
        for n in 0..=3usize {
            let full = (1u64 << n) - 1;
            let middle: Vec<u64> = (1..full).collect();
            let mut count = 0;
            for mask in 0u64..1 << middle.len() {
                let mut fam = vec![0, full];
                fam.extend((0..middle.len()).filter(|k| mask >> k & 1 == 1).map(|k| middle[k]));
                fam.dedup();
                if fam.iter().all(|a| fam.iter().all(|b| fam.contains(&(a | b)) && fam.contains(&(a & b)))) {
                    count += 1;
                }
            }
            assert_eq!(all_topologies(n).unwrap().len(), count);
        }
        assert_eq!(
            (0..=4).map(|n| all_topologies(n).unwrap().len()).collect::<Vec<_>>(),
            vec![1, 1, 4, 29, 355]
        );
    }

    #[test]
    fn homeomorphism_search() {
        let tops = all_topologies(3).unwrap();
        // 9 homeomorphism classes of topologies on three points
        let mut reps: Vec<&FiniteSpace> = Vec::new();
        for x in &tops {
            if !reps.iter().any(|r| find_homeomorphism(r, x).is_some()) {
                reps.push(x);
            }
        }
        assert_eq!(reps.len(), 9);
    }
}
