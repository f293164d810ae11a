//! Finite frames and their points.
//!
//! A finite lattice is a frame exactly when it is distributive, but the
//! frame law is still checked literally (every subset join) up to 16
//! elements so the two can be compared. Points are frame morphisms into
//! `2`; the ideal lattice of a distributive `L` is compared with the
//! Hochster dual of `Spc(L)` through its points and through its opens.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, compact_elements, principal_ideal, Ideal, IdealLattice};
use crate::order::{
    enumerate_morphisms, find_isomorphism, is_morphism, is_order_isomorphism, BoundedLattice,
    LatticeMorphism, MorphismKind,
};
use crate::topology::{hochster_dual, image, is_homeomorphism, omega_lattice, FiniteSpace};
use crate::SizeGuard;

const LITERAL_FRAME_LIMIT: usize = 16;

/// A lattice certified to satisfy the frame law.
#[derive(Debug, Clone)]
pub struct Frame {
    lattice: BoundedLattice,
}

impl Frame {
    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }
}

impl std::ops::Deref for Frame {
    type Target = BoundedLattice;

    fn deref(&self) -> &BoundedLattice {
        &self.lattice
    }
}

/// Checks `a ∧ ⋁S = ⋁{a ∧ s : s ∈ S}` for every `a` and every subset `S`
/// (binary distributivity beyond 16 elements, which is equivalent for
/// finite lattices).
pub fn as_frame(l: BoundedLattice) -> Result<Frame> {
    let n = l.len();
    if n > LITERAL_FRAME_LIMIT {
        if let Some((a, b, c)) = l.distributivity_witness() {
            return Err(Error::NotAFrame(format!(
                "{} ∧ ({} ∨ {}) ≠ ({} ∧ {}) ∨ ({} ∧ {})",
                l.name(a), l.name(b), l.name(c), l.name(a), l.name(b), l.name(a), l.name(c)
            )));
        }
        return Ok(Frame { lattice: l });
    }
    for bits in 0u64..1 << n {
        let s = BitSet::from_bits(bits);
        let j = l.join_all(s);
        for a in 0..n {
            let meets: BitSet = s.iter().map(|b| l.meet(a, b)).collect();
            if l.meet(a, j) != l.join_all(meets) {
                return Err(Error::NotAFrame(format!(
                    "{} ∧ ⋁{} ≠ ⋁{{{} ∧ s}}",
                    l.name(a),
                    l.label(s),
                    l.name(a)
                )));
            }
        }
    }
    Ok(Frame { lattice: l })
}

/// `Pt(F)` with point `i` the frame morphism `points[i]`.
#[derive(Debug, Clone)]
pub struct PointSpace {
    pub points: Vec<LatticeMorphism>,
    pub space: FiniteSpace,
    /// `opens_of[a]` is `U(a) = {φ : φ(a) = 1}`.
    pub opens_of: Vec<BitSet>,
}

fn two() -> BoundedLattice {
    BoundedLattice::from_pairs(&["0", "1"], &[("0", "1")]).expect("2 is a lattice")
}

/// Points are named by the filter `φ⁻¹(1)`.
pub fn points(f: &Frame, guard: SizeGuard) -> Result<PointSpace> {
    let points = enumerate_morphisms(f, &two(), MorphismKind::Frame, guard)?;
    let names = points
        .iter()
        .map(|phi| f.label((0..f.len()).filter(|&a| phi.apply(a) == 1).collect()))
        .collect();
    let opens_of: Vec<BitSet> = (0..f.len())
        .map(|a| (0..points.len()).filter(|&i| points[i].apply(a) == 1).collect())
        .collect();
    let mut opens = opens_of.clone();
    crate::bitset::sort_canonical(&mut opens);
    let space = FiniteSpace::new(names, opens)?;
    Ok(PointSpace { points, space, opens_of })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpatialCertificate {
    pub elements: usize,
    pub points: usize,
    pub opens: usize,
    /// `a ↦ U(a)` is injective
    pub injective: bool,
    /// every open of `Pt(F)` is some `U(a)`
    pub surjective: bool,
    pub spatial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Evaluates the unit `a ↦ U(a)` into `Ω(Pt(F))`.
pub fn is_spatial(f: &Frame, guard: SizeGuard) -> Result<SpatialCertificate> {
    let pt = points(f, guard)?;
    let n = f.len();
    let mut failure = None;
    'outer: for a in 0..n {
        for b in 0..a {
            if pt.opens_of[a] == pt.opens_of[b] {
                failure = Some(format!(
                    "no point separates {} and {}",
                    f.name(b),
                    f.name(a)
                ));
                break 'outer;
            }
        }
    }
    let injective = failure.is_none();
    let surjective = pt.space.opens().iter().all(|u| pt.opens_of.contains(u));
    if !surjective {
        failure.get_or_insert_with(|| "some open is not of the form U(a)".to_string());
    }
    // a bijective unit is order-reflecting too, since U(a ∧ b) = U(a) ∩ U(b)
    Ok(SpatialCertificate {
        elements: n,
        points: pt.points.len(),
        opens: pt.space.opens().len(),
        injective,
        surjective,
        spatial: injective && surjective,
        failure,
    })
}

fn require_distributive(l: &BoundedLattice) -> Result<()> {
    match l.distributivity_witness() {
        None => Ok(()),
        Some((a, b, c)) => Err(Error::NotDistributive(format!(
            "{} ∧ ({} ∨ {}) ≠ ({} ∧ {}) ∨ ({} ∧ {})",
            l.name(a), l.name(b), l.name(c), l.name(a), l.name(b), l.name(a), l.name(c)
        ))),
    }
}

/// `Id(L)` for a distributive `L`, certified as a frame.
pub fn ideal_frame(l: &BoundedLattice, guard: SizeGuard) -> Result<(IdealLattice, Frame)> {
    require_distributive(l)?;
    let idl = all_ideals(l, guard)?;
    let frame = as_frame(idl.lattice.clone())?;
    Ok((idl, frame))
}

/// The frame morphism `I ↦ ⋁_{a ∈ I} φ(a)` extending a bounded-lattice
/// morphism `φ: L -> F`.
pub fn extend_morphism(
    l: &BoundedLattice,
    idl: &IdealLattice,
    f: &Frame,
    phi: &LatticeMorphism,
) -> Result<LatticeMorphism> {
    require_distributive(l)?;
    if !is_morphism(l, f, &phi.map, MorphismKind::Blat) {
        return Err(Error::KindMismatch("φ is not a bounded-lattice morphism".into()));
    }
    let map = idl
        .ideals
        .iter()
        .map(|i| f.join_all(i.members().iter().map(|a| phi.apply(a)).collect()))
        .collect();
    Ok(LatticeMorphism { kind: MorphismKind::Frame, map })
}

/// Restriction along `a ↦ ↓a`.
pub fn restrict_morphism(l: &BoundedLattice, idl: &IdealLattice, psi: &LatticeMorphism) -> LatticeMorphism {
    let map = (0..l.len())
        .map(|a| {
            let pos = idl.position(principal_ideal(l, a)).expect("principal ideals are ideals");
            psi.apply(pos)
        })
        .collect();
    LatticeMorphism { kind: MorphismKind::Blat, map }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionCertificate {
    pub frame_morphisms: usize,
    pub lattice_morphisms: usize,
    pub bijection: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// `Hom_Frm(Id(L), F) ≅ Hom_BLat(L, F)`: both sides enumerated, restriction
/// and extension checked to be mutually inverse.
pub fn check_restriction_bijection(
    l: &BoundedLattice,
    f: &Frame,
    guard: SizeGuard,
) -> Result<RestrictionCertificate> {
    let (idl, id_frame) = ideal_frame(l, guard)?;
    let frame_homs = enumerate_morphisms(&id_frame, f, MorphismKind::Frame, guard)?;
    let lattice_homs = enumerate_morphisms(l, f, MorphismKind::Blat, guard)?;
    let mut failure = None;
    for psi in &frame_homs {
        let phi = restrict_morphism(l, &idl, psi);
        if !lattice_homs.iter().any(|m| m.map == phi.map) {
            failure.get_or_insert(format!("restriction of {:?} is not a lattice morphism", psi.map));
        }
        if extend_morphism(l, &idl, f, &phi)?.map != psi.map {
            failure.get_or_insert(format!("{:?} is not the extension of its restriction", psi.map));
        }
    }
    for phi in &lattice_homs {
        let psi = extend_morphism(l, &idl, f, phi)?;
        if !frame_homs.iter().any(|m| m.map == psi.map) {
            failure.get_or_insert(format!("extension of {:?} is not a frame morphism", phi.map));
        }
        if restrict_morphism(l, &idl, &psi).map != phi.map {
            failure.get_or_insert(format!("extension of {:?} does not restrict back", phi.map));
        }
    }
    if frame_homs.len() != lattice_homs.len() {
        failure.get_or_insert(format!(
            "{} frame morphisms but {} lattice morphisms",
            frame_homs.len(),
            lattice_homs.len()
        ));
    }
    Ok(RestrictionCertificate {
        frame_morphisms: frame_homs.len(),
        lattice_morphisms: lattice_homs.len(),
        bijection: failure.is_none(),
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointsCertificate {
    pub points: usize,
    pub primes: usize,
    /// `[point, prime ideal]`, the point named by its filter
    pub map: Vec<[String; 2]>,
    pub homeomorphism: bool,
    /// `U(↓a)` is carried onto `supp(a)` for every `a`
    pub basis_matches: bool,
    /// the inverse, found by inverting the forward map, round-trips
    pub inverse_roundtrip: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// `Pt(Id(L)) -> Spc(L)^∨`, `φ ↦ {a : φ(↓a) = 0}`.
pub fn pt_ideal_vs_hochster(l: &BoundedLattice, guard: SizeGuard) -> Result<PointsCertificate> {
    let (idl, frame) = ideal_frame(l, guard)?;
    let pt = points(&frame, guard)?;
    let hd = hochster_dual(l)?;
    let principal: Vec<usize> = (0..l.len())
        .map(|a| idl.position(principal_ideal(l, a)).expect("principal ideals are ideals"))
        .collect();
    let mut failure = None;
    let mut forward = Vec::with_capacity(pt.points.len());
    for phi in &pt.points {
        let kernel = Ideal((0..l.len()).filter(|&a| phi.apply(principal[a]) == 0).collect());
        match hd.position(kernel) {
            Some(p) => forward.push(p),
            None => {
                failure.get_or_insert(format!("{} is not a prime ideal", kernel.label(l)));
                forward.push(usize::MAX);
            }
        }
    }
    let total = failure.is_none();
    let homeomorphism = total && is_homeomorphism(&forward, &pt.space, &hd.space);
    if total && !homeomorphism {
        failure.get_or_insert("the map is not a homeomorphism".to_string());
    }
    let basis_matches =
        total && (0..l.len()).all(|a| image(&forward, pt.opens_of[principal[a]]) == hd.supp.supp(a));
    if total && !basis_matches {
        failure.get_or_insert("U(↓a) is not carried onto supp(a)".to_string());
    }
    let inverse: Vec<Option<usize>> = (0..hd.points.len())
        .map(|q| {
            let pre: Vec<usize> = (0..forward.len()).filter(|&p| forward[p] == q).collect();
            (pre.len() == 1).then(|| pre[0])
        })
        .collect();
    let inverse_roundtrip = inverse.iter().enumerate().all(|(q, p)| p.is_some_and(|p| forward[p] == q))
        && (0..forward.len()).all(|p| forward[p] < inverse.len() && inverse[forward[p]] == Some(p));
    if !inverse_roundtrip {
        failure.get_or_insert("the map is not invertible".to_string());
    }
    let map = forward
        .iter()
        .enumerate()
        .filter(|(_, &q)| q != usize::MAX)
        .map(|(p, &q)| [pt.space.point(p).to_string(), hd.space.point(q).to_string()])
        .collect();
    Ok(PointsCertificate {
        points: pt.points.len(),
        primes: hd.points.len(),
        map,
        homeomorphism,
        basis_matches,
        inverse_roundtrip,
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdOmegaCertificate {
    pub ideals: usize,
    pub opens: usize,
    /// `[ideal, open set]`
    pub map: Vec<[String; 2]>,
    pub injective: bool,
    pub surjective: bool,
    pub isomorphism: bool,
    /// `U ↦ {a : supp(a) ⊆ U}` inverts the map on both sides
    pub inverse_roundtrip: bool,
    /// two ideals with the same image, when not injective
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision: Option<[String; 2]>,
}

/// `Id(L) -> Ω(Spc(L)^∨)`, `I ↦ ⋃_{a ∈ I} supp(a)`, for distributive `L`.
pub fn id_vs_omega_dual(l: &BoundedLattice, guard: SizeGuard) -> Result<IdOmegaCertificate> {
    require_distributive(l)?;
    id_vs_omega_unchecked(l, guard)
}

/// Same map without the distributivity precondition, so that its failure
/// on non-distributive lattices can be observed.
pub fn id_vs_omega_unchecked(l: &BoundedLattice, guard: SizeGuard) -> Result<IdOmegaCertificate> {
    let idl = all_ideals(l, guard)?;
    let hd = hochster_dual(l)?;
    let x = &hd.space;
    let opens = x.opens();
    let forward: Vec<usize> = idl
        .ideals
        .iter()
        .map(|i| {
            let u = i.members().iter().fold(BitSet::EMPTY, |acc, a| acc.union(hd.supp.supp(a)));
            opens.iter().position(|&v| v == u).expect("a union of basic opens is open")
        })
        .collect();
    let mut collision = None;
    'outer: for i in 0..forward.len() {
        for j in 0..i {
            if forward[i] == forward[j] {
                collision = Some([idl.ideals[j].label(l), idl.ideals[i].label(l)]);
                break 'outer;
            }
        }
    }
    let injective = collision.is_none();
    let hit: BitSet = forward.iter().copied().collect();
    let surjective = hit == BitSet::full(opens.len());
    let isomorphism = injective
        && surjective
        && is_order_isomorphism(idl.lattice.poset(), omega_lattice(x).poset(), &forward);
    let backward = |u: BitSet| -> Ideal {
        Ideal((0..l.len()).filter(|&a| hd.supp.supp(a).is_subset(u)).collect())
    };
    let inverse_roundtrip = idl
        .ideals
        .iter()
        .enumerate()
        .all(|(i, &ideal)| backward(opens[forward[i]]) == ideal)
        && opens.iter().all(|&u| {
            idl.position(backward(u))
                .is_some_and(|i| opens[forward[i]] == u)
        });
    let map = forward
        .iter()
        .enumerate()
        .map(|(i, &u)| [idl.ideals[i].label(l), x.label(opens[u])])
        .collect();
    Ok(IdOmegaCertificate {
        ideals: idl.len(),
        opens: opens.len(),
        map,
        injective,
        surjective,
        isomorphism,
        inverse_roundtrip,
        collision,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceCertificate {
    pub elements: usize,
    pub compact: usize,
    /// `F ≅ Id(K(F))`
    pub coherent: bool,
}

/// Compares `F` with the ideal lattice of its compact elements.
pub fn check_coherent(f: &Frame, guard: SizeGuard) -> Result<CoherenceCertificate> {
    let idl = all_ideals(f, guard)?;
    let k = compact_elements(f, &idl, guard)?;
    let id_k = all_ideals(&k.lattice, guard)?;
    let coherent = find_isomorphism(f.poset(), id_k.lattice.poset()).is_some();
    Ok(CoherenceCertificate { elements: f.len(), compact: k.elements.len(), coherent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate, named};
    use crate::ideals::prime_ideals;

    fn g() -> SizeGuard {
        SizeGuard::default()
    }

    #[test]
    fn frame_examples() {
        assert!(as_frame(named::b2()).is_ok());
        assert!(matches!(as_frame(named::m3()), Err(Error::NotAFrame(_))));
        assert!(matches!(as_frame(named::n5()), Err(Error::NotAFrame(_))));
        let id_c3 = all_ideals(&named::c3(), g()).unwrap().lattice;
        assert!(as_frame(id_c3).is_ok());
    }

    #[test]
    fn frame_law_agrees_with_distributivity() {
        for e in generate(7).unwrap() {
            assert_eq!(as_frame(e.lattice.clone()).is_ok(), e.lattice.is_distributive(), "{}", e.name);
        }
    }

    #[test]
    fn point_examples() {
        let two = as_frame(named::two()).unwrap();
        let pt = points(&two, g()).unwrap();
        assert_eq!(pt.points.len(), 1);
        assert_eq!(pt.points[0].map, vec![0, 1]);
        let b2 = as_frame(named::b2()).unwrap();
        let pt = points(&b2, g()).unwrap();
        assert_eq!(pt.points.len(), 2);
        assert_eq!(pt.space.opens().len(), 4);
    }

    #[test]
    fn spatial_examples() {
        let c = is_spatial(&as_frame(named::two()).unwrap(), g()).unwrap();
        assert!(c.spatial);
        for e in generate(7).unwrap() {
            if let Ok(f) = as_frame(e.lattice.clone()) {
                assert!(is_spatial(&f, g()).unwrap().spatial, "{}", e.name);
            }
        }
    }

    #[test]
    fn extension_examples() {
        let b2 = named::b2();
        let (idl, _) = ideal_frame(&b2, g()).unwrap();
        let two = as_frame(named::two()).unwrap();
        // 0, a, b, 1 ↦ 0, 1, 0, 1
        let phi = LatticeMorphism { kind: MorphismKind::Blat, map: vec![0, 1, 0, 1] };
        let psi = extend_morphism(&b2, &idl, &two, &phi).unwrap();
        for (i, ideal) in idl.ideals.iter().enumerate() {
            let expected = usize::from(ideal.contains(1) || ideal.contains(3));
            assert_eq!(psi.apply(i), expected, "{}", ideal.label(&b2));
        }
        assert_eq!(restrict_morphism(&b2, &idl, &psi).map, phi.map);

        // the embedding L -> Id(L) extends to the identity
        let c3 = named::c3();
        let (idl, frame) = ideal_frame(&c3, g()).unwrap();
        let embed = LatticeMorphism {
            kind: MorphismKind::Blat,
            map: (0..c3.len()).map(|a| idl.position(principal_ideal(&c3, a)).unwrap()).collect(),
        };
        let id = extend_morphism(&c3, &idl, &frame, &embed).unwrap();
        assert_eq!(id.map, (0..idl.len()).collect::<Vec<_>>());

        let m3 = named::m3();
        let idl = all_ideals(&m3, g()).unwrap();
        let phi = LatticeMorphism { kind: MorphismKind::Blat, map: vec![0, 1, 1, 1, 1] };
        assert!(matches!(extend_morphism(&m3, &idl, &two, &phi), Err(Error::NotDistributive(_))));
    }

    #[test]
    fn restriction_bijection_on_small_pairs() {
        let small: Vec<_> = generate(4).unwrap().into_iter().filter(|e| e.lattice.is_distributive()).collect();
        for l in &small {
            for f in &small {
                let f = as_frame(f.lattice.clone()).unwrap();
                let c = check_restriction_bijection(&l.lattice, &f, g()).unwrap();
                assert!(c.bijection, "{}: {:?}", l.name, c.failure);
            }
        }
    }

    #[test]
    fn points_of_ideals_examples() {
        let c = pt_ideal_vs_hochster(&named::two(), g()).unwrap();
        assert_eq!((c.points, c.primes, c.homeomorphism), (1, 1, true));
        let c = pt_ideal_vs_hochster(&named::c3(), g()).unwrap();
        assert_eq!((c.points, c.primes, c.homeomorphism, c.basis_matches), (2, 2, true, true));
        let c = pt_ideal_vs_hochster(&named::b2(), g()).unwrap();
        assert_eq!((c.points, c.primes, c.homeomorphism), (2, 2, true));
        assert!(matches!(pt_ideal_vs_hochster(&named::n5(), g()), Err(Error::NotDistributive(_))));
    }

    #[test]
    fn id_omega_examples() {
        let c = id_vs_omega_dual(&named::c3(), g()).unwrap();
        assert_eq!((c.ideals, c.opens, c.isomorphism, c.inverse_roundtrip), (3, 3, true, true));
        let c = id_vs_omega_dual(&named::b2(), g()).unwrap();
        assert_eq!((c.ideals, c.opens, c.isomorphism), (4, 4, true));
        assert!(matches!(id_vs_omega_dual(&named::m3(), g()), Err(Error::NotDistributive(_))));
        let c = id_vs_omega_unchecked(&named::m3(), g()).unwrap();
        assert_eq!((c.opens, c.injective), (1, false));
        assert!(c.collision.is_some());
        let c = id_vs_omega_unchecked(&named::n5(), g()).unwrap();
        assert!(!c.injective);
    }

    #[test]
    fn points_count_primes() {
        for e in generate(6).unwrap() {
            if e.lattice.is_distributive() {
                let (_, f) = ideal_frame(&e.lattice, g()).unwrap();
                assert_eq!(points(&f, g()).unwrap().points.len(), prime_ideals(&e.lattice).len());
            }
        }
    }

    #[test]
    fn finite_frames_are_coherent() {
        for (name, l) in named::all() {
            if let Ok(f) = as_frame(l) {
                let c = check_coherent(&f, g()).unwrap();
                assert!(c.coherent && c.compact == c.elements, "{name}");
            }
        }
    }
}
