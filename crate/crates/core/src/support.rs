//! Support data and their correspondence with continuous maps into spectra.
//!
//! A support datum on `L` assigns a subset `σ(a)` of a space `X` to every
//! element, turning joins into unions (and, for lattices, meets into
//! intersections). Pulling back `supp` along a continuous map `X -> Sp(L)`
//! gives such a datum, and `x ↦ {a : x ∉ σ(a)}` goes back. The functions
//! here compute both directions and certify that they are mutually inverse
//! by enumerating every continuous map and every datum.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::json::SpaceJson;
use crate::order::{enumerate_jsl_morphisms, enumerate_morphisms, BoundedLattice, MorphismKind};
use crate::topology::{
    check_continuous, cl_lattice, enumerate_continuous, hochster_dual, is_homeomorphism,
    omega_lattice, preimage, sp_space, spc_space, FiniteSpace, Spectrum,
};
use crate::SizeGuard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Closed sets; `σ(0) = ∅` and joins to unions.
    SemilatticeClosed,
    /// Closed sets; additionally `σ(1) = X` and meets to intersections.
    LatticeClosed,
    /// A bounded-lattice map into the open sets.
    LatticeOpen,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [
        Flavor::SemilatticeClosed,
        Flavor::LatticeClosed,
        Flavor::LatticeOpen,
    ];
}

/// The spectrum a flavor's data correspond to.
pub fn spectrum(l: &BoundedLattice, flavor: Flavor, guard: SizeGuard) -> Result<Spectrum> {
    match flavor {
        Flavor::SemilatticeClosed => sp_space(l, guard),
        Flavor::LatticeClosed => spc_space(l),
        Flavor::LatticeOpen => hochster_dual(l),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDatum {
    pub space: FiniteSpace,
    /// `sigma[a]` is the set assigned to lattice element `a`.
    pub sigma: Vec<BitSet>,
    pub flavor: Flavor,
}

/// First axiom a datum breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum AxiomViolation {
    Arity { expected: usize, found: usize },
    NotClosed { element: String },
    NotOpen { element: String },
    /// `σ(0) = ∅` fails.
    Empty { found: String },
    /// `σ(1) = X` fails.
    Full { found: String },
    /// `σ(a ∨ b) = σ(a) ∪ σ(b)` fails.
    Join { a: String, b: String },
    /// `σ(a ∧ b) = σ(a) ∩ σ(b)` fails.
    Meet { a: String, b: String },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Arity { expected, found } => {
                write!(f, "expected {expected} assigned sets, found {found}")
            }
            Self::NotClosed { element } => write!(f, "σ({element}) is not closed"),
            Self::NotOpen { element } => write!(f, "σ({element}) is not open"),
            Self::Empty { found } => write!(f, "(∅) fails: σ(0) = {found}"),
            Self::Full { found } => write!(f, "σ(1) = {found} is not the whole space"),
            Self::Join { a, b } => write!(f, "(∨) fails: σ({a} ∨ {b}) ≠ σ({a}) ∪ σ({b})"),
            Self::Meet { a, b } => write!(f, "(∧) fails: σ({a} ∧ {b}) ≠ σ({a}) ∩ σ({b})"),
        }
    }
}

/// Checks the axioms of `d.flavor`, reporting the first violation found.
pub fn validate_support_datum(l: &BoundedLattice, d: &SupportDatum) -> Result<(), AxiomViolation> {
    let n = l.len();
    let x = &d.space;
    let s = &d.sigma;
    if s.len() != n {
        return Err(AxiomViolation::Arity { expected: n, found: s.len() });
    }
    let open = d.flavor == Flavor::LatticeOpen;
    for a in 0..n {
        let element = l.name(a).to_string();
        if open && !x.is_open(s[a]) {
            return Err(AxiomViolation::NotOpen { element });
        }
        if !open && !x.is_closed(s[a]) {
            return Err(AxiomViolation::NotClosed { element });
        }
    }
    if !s[l.bottom()].is_empty() {
        return Err(AxiomViolation::Empty { found: x.label(s[l.bottom()]) });
    }
    let lattice = d.flavor != Flavor::SemilatticeClosed;
    if lattice && s[l.top()] != x.full() {
        return Err(AxiomViolation::Full { found: x.label(s[l.top()]) });
    }
    for a in 0..n {
        for b in 0..n {
            if s[l.join(a, b)] != s[a].union(s[b]) {
                return Err(AxiomViolation::Join { a: l.name(a).into(), b: l.name(b).into() });
            }
            if lattice && s[l.meet(a, b)] != s[a].intersection(s[b]) {
                return Err(AxiomViolation::Meet { a: l.name(a).into(), b: l.name(b).into() });
            }
        }
    }
    Ok(())
}

/// `Σ(f)`: the datum `a ↦ f⁻¹(supp(a))` of a continuous map into the spectrum.
pub fn sigma_of_map(
    spec: &Spectrum,
    x: &FiniteSpace,
    f: &[usize],
) -> Result<SupportDatum> {
    check_continuous(f, x, &spec.space)?;
    Ok(SupportDatum {
        space: x.clone(),
        sigma: spec.supp.assignment.iter().map(|&s| preimage(f, s)).collect(),
        flavor: flavor_of(spec),
    })
}

fn flavor_of(spec: &Spectrum) -> Flavor {
    match spec.kind {
        crate::topology::SpectrumKind::Sp => Flavor::SemilatticeClosed,
        crate::topology::SpectrumKind::Spc => Flavor::LatticeClosed,
        crate::topology::SpectrumKind::HochsterDual => Flavor::LatticeOpen,
    }
}

/// The inverse of [`sigma_of_map`]: `x ↦ {a : x ∉ σ(a)}`.
///
/// Open data are first translated to closed data on `L^op`; the resulting
/// prime ideal of `L^op` is complemented to land in `Spc(L)^∨`.
pub fn map_of_sigma(l: &BoundedLattice, spec: &Spectrum, d: &SupportDatum) -> Result<Vec<usize>> {
    if d.flavor != flavor_of(spec) {
        return Err(Error::InvalidDatum(format!(
            "a {:?} datum does not correspond to maps into {:?}",
            d.flavor, spec.kind
        )));
    }
    validate_support_datum(l, d).map_err(|v| Error::InvalidDatum(v.to_string()))?;
    let n = l.len();
    let ideal_at = |x: usize| -> BitSet {
        match d.flavor {
            Flavor::SemilatticeClosed | Flavor::LatticeClosed => {
                (0..n).filter(|&a| !d.sigma[a].contains(x)).collect()
            }
            Flavor::LatticeOpen => {
                let tau = translate_sets(&d.space, &d.sigma);
                let in_dual: BitSet = (0..n).filter(|&a| !tau[a].contains(x)).collect();
                in_dual.complement(n)
            }
        }
    };
    (0..d.space.len())
        .map(|x| {
            let ideal = Ideal(ideal_at(x));
            spec.position(ideal).ok_or_else(|| {
                Error::InvalidDatum(format!(
                    "point {} maps to {}, which is not a point of the spectrum",
                    d.space.point(x),
                    ideal.label(l)
                ))
            })
        })
        .collect()
}

fn translate_sets(x: &FiniteSpace, sigma: &[BitSet]) -> Vec<BitSet> {
    sigma.iter().map(|s| s.complement(x.len())).collect()
}

/// `τ(a) = X ∖ σ(a)`: an open datum on `l` becomes a closed datum on
/// `l.dual()` and vice versa. Applying it twice (with `l.dual()` the second
/// time) is the identity.
pub fn open_closed_translate(l: &BoundedLattice, d: &SupportDatum) -> Result<SupportDatum> {
    let flavor = match d.flavor {
        Flavor::LatticeOpen => Flavor::LatticeClosed,
        Flavor::LatticeClosed => Flavor::LatticeOpen,
        Flavor::SemilatticeClosed => {
            return Err(Error::InvalidDatum(
                "only bounded-lattice data have an open/closed counterpart".into(),
            ))
        }
    };
    validate_support_datum(l, d).map_err(|v| Error::InvalidDatum(v.to_string()))?;
    Ok(SupportDatum {
        space: d.space.clone(),
        sigma: translate_sets(&d.space, &d.sigma),
        flavor,
    })
}

/// Every support datum of the given flavor on `(l, x)`, obtained as the
/// lattice morphisms `L -> Cl(X)` or `L -> Ω(X)`.
pub fn enumerate_support_data(
    l: &BoundedLattice,
    x: &FiniteSpace,
    flavor: Flavor,
    guard: SizeGuard,
) -> Result<Vec<SupportDatum>> {
    let (target, sets) = match flavor {
        Flavor::LatticeOpen => (omega_lattice(x), x.opens().to_vec()),
        _ => (cl_lattice(x), x.closed_sets()),
    };
    let morphisms = match flavor {
        Flavor::SemilatticeClosed => enumerate_jsl_morphisms(l, &target, guard)?,
        _ => enumerate_morphisms(l, &target, MorphismKind::Blat, guard)?,
    };
    Ok(morphisms
        .into_iter()
        .map(|m| SupportDatum {
            space: x.clone(),
            sigma: m.map.iter().map(|&i| sets[i]).collect(),
            flavor,
        })
        .collect())
}

/// A continuous map and the datum it corresponds to, by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    /// `[point, image point]` pairs.
    pub map: Vec<[String; 2]>,
    /// `[element, assigned points]` pairs.
    pub datum: Vec<(String, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionCertificate {
    pub lattice: String,
    pub space: SpaceJson,
    pub flavor: Flavor,
    pub map_count: usize,
    pub datum_count: usize,
    pub bijection: bool,
    pub witness_pairs: Vec<WitnessPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

fn witness(l: &BoundedLattice, spec: &Spectrum, f: &[usize], d: &SupportDatum) -> WitnessPair {
    let x = &d.space;
    WitnessPair {
        map: f
            .iter()
            .enumerate()
            .map(|(p, &q)| [x.point(p).to_string(), spec.space.point(q).to_string()])
            .collect(),
        datum: d
            .sigma
            .iter()
            .enumerate()
            .map(|(a, s)| (l.name(a).to_string(), s.iter().map(|p| x.point(p).to_string()).collect()))
            .collect(),
    }
}

/// Certifies that `Σ` is a bijection between continuous maps `X -> spectrum`
/// and support data on `(L, X)`, with exact round trips in both directions.
pub fn check_adjunction(
    lattice_name: &str,
    l: &BoundedLattice,
    x: &FiniteSpace,
    flavor: Flavor,
    guard: SizeGuard,
) -> Result<AdjunctionCertificate> {
    let spec = spectrum(l, flavor, guard)?;
    let maps = enumerate_continuous(x, &spec.space, guard)?;
    let data = enumerate_support_data(l, x, flavor, guard)?;
    let mut failure = None;
    let mut witness_pairs = Vec::with_capacity(maps.len());
    let mut hit = vec![false; data.len()];
    for f in &maps {
        let d = sigma_of_map(&spec, x, f)?;
        match data.iter().position(|e| *e == d) {
            Some(i) if hit[i] => {
                failure.get_or_insert(format!("Σ is not injective at {f:?}"));
            }
            Some(i) => hit[i] = true,
            None => {
                failure.get_or_insert(format!("Σ({f:?}) is not among the enumerated data"));
            }
        }
        if map_of_sigma(l, &spec, &d)? != *f {
            failure.get_or_insert(format!("map_of_sigma(Σ({f:?})) differs from the map"));
        }
        witness_pairs.push(witness(l, &spec, f, &d));
    }
    for d in &data {
        let f = map_of_sigma(l, &spec, d)?;
        if !maps.contains(&f) {
            failure.get_or_insert(format!("map_of_sigma gives the non-enumerated map {f:?}"));
        }
        if sigma_of_map(&spec, x, &f)? != *d {
            failure.get_or_insert(format!("Σ(map_of_sigma(d)) differs from d for {f:?}"));
        }
    }
    if maps.len() != data.len() {
        failure.get_or_insert(format!("{} maps but {} data", maps.len(), data.len()));
    }
    Ok(AdjunctionCertificate {
        lattice: lattice_name.to_string(),
        space: SpaceJson::from(x),
        flavor,
        map_count: maps.len(),
        datum_count: data.len(),
        bijection: failure.is_none(),
        witness_pairs,
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinalityCertificate {
    pub datum_count: usize,
    /// every datum has exactly one morphism of support data into the spectrum
    pub final_object: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// For every datum `(X, σ)`, the morphisms of support data into
/// `(spectrum, supp)` are exactly the continuous `h` with
/// `σ(a) = h⁻¹(supp(a))`; there must be one, namely [`map_of_sigma`].
pub fn check_finality(
    l: &BoundedLattice,
    x: &FiniteSpace,
    flavor: Flavor,
    guard: SizeGuard,
) -> Result<FinalityCertificate> {
    let spec = spectrum(l, flavor, guard)?;
    let maps = enumerate_continuous(x, &spec.space, guard)?;
    let data = enumerate_support_data(l, x, flavor, guard)?;
    let mut failure = None;
    for d in &data {
        let morphisms: Vec<&Vec<usize>> = maps
            .iter()
            .filter(|h| {
                (0..l.len()).all(|a| d.sigma[a] == preimage(h, spec.supp.supp(a)))
            })
            .collect();
        let expected = map_of_sigma(l, &spec, d)?;
        if morphisms.len() != 1 || *morphisms[0] != expected {
            failure.get_or_insert(format!(
                "{} morphisms of support data for the datum mapped to {expected:?}",
                morphisms.len()
            ));
        }
    }
    Ok(FinalityCertificate {
        datum_count: data.len(),
        final_object: failure.is_none(),
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaturalityCertificate {
    pub maps_checked: usize,
    pub commutes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// For continuous `g: X -> Y`, checks `Σ(f ∘ g) = g⁻¹ ∘ Σ(f)` for every
/// continuous `f: Y -> spectrum`.
pub fn check_naturality(
    l: &BoundedLattice,
    g: &[usize],
    x: &FiniteSpace,
    y: &FiniteSpace,
    flavor: Flavor,
    guard: SizeGuard,
) -> Result<NaturalityCertificate> {
    check_continuous(g, x, y)?;
    let spec = spectrum(l, flavor, guard)?;
    let maps = enumerate_continuous(y, &spec.space, guard)?;
    let mut failure = None;
    for f in &maps {
        let composite: Vec<usize> = g.iter().map(|&p| f[p]).collect();
        let lhs = sigma_of_map(&spec, x, &composite)?;
        let rhs: Vec<BitSet> = sigma_of_map(&spec, y, f)?
            .sigma
            .iter()
            .map(|&s| preimage(g, s))
            .collect();
        if lhs.sigma != rhs {
            failure.get_or_insert(format!("square fails for f = {f:?}"));
        }
    }
    Ok(NaturalityCertificate {
        maps_checked: maps.len(),
        commutes: failure.is_none(),
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationCertificate {
    pub open_count: usize,
    pub closed_dual_count: usize,
    /// translation is a bijection from open data on `L` to closed data on `L^op`
    pub bijection: bool,
    /// the corresponding maps agree through the complement homeomorphism
    /// `Spc(L)^∨ -> Spc(L^op)`
    pub maps_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Matches open data on `L` with closed data on `L^op` datum for datum, and
/// checks that their classifying maps agree under `P ↦ L ∖ P`.
pub fn check_translation(
    l: &BoundedLattice,
    x: &FiniteSpace,
    guard: SizeGuard,
) -> Result<TranslationCertificate> {
    let op = l.dual();
    let open = enumerate_support_data(l, x, Flavor::LatticeOpen, guard)?;
    let closed = enumerate_support_data(&op, x, Flavor::LatticeClosed, guard)?;
    let hd = hochster_dual(l)?;
    let spc_op = spc_space(&op)?;
    let complement: Vec<usize> = hd
        .points
        .iter()
        .map(|p| {
            spc_op
                .position(Ideal(p.members().complement(l.len())))
                .expect("complement of a prime ideal is prime in the dual")
        })
        .collect();
    let mut failure = None;
    if !is_homeomorphism(&complement, &hd.space, &spc_op.space) {
        failure = Some("complement map is not a homeomorphism".to_string());
    }
    let mut hit = vec![false; closed.len()];
    let mut maps_match = true;
    for d in &open {
        let t = open_closed_translate(l, d)?;
        match closed.iter().position(|c| *c == t) {
            Some(i) if !hit[i] => hit[i] = true,
            _ => {
                failure.get_or_insert("translation is not a bijection".to_string());
            }
        }
        if open_closed_translate(&op, &t)? != *d {
            failure.get_or_insert("translation is not an involution".to_string());
        }
        let f = map_of_sigma(l, &hd, d)?;
        let g = map_of_sigma(&op, &spc_op, &t)?;
        if f.iter().map(|&p| complement[p]).collect::<Vec<_>>() != g {
            maps_match = false;
            failure.get_or_insert(format!("classifying maps disagree: {f:?} vs {g:?}"));
        }
    }
    if open.len() != closed.len() {
        failure.get_or_insert(format!("{} open but {} closed data", open.len(), closed.len()));
    }
    Ok(TranslationCertificate {
        open_count: open.len(),
        closed_dual_count: closed.len(),
        bijection: open.len() == closed.len() && hit.iter().all(|&h| h),
        maps_match,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::topology::all_topologies;

    fn g() -> SizeGuard {
        SizeGuard::default()
    }

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn validation_examples() {
        let two = named::two();
        let s = FiniteSpace::sierpinski();
        // {p} is closed in the Sierpiński space
        let ok = SupportDatum { space: s.clone(), sigma: vec![BitSet::EMPTY, set(&[0])], flavor: Flavor::SemilatticeClosed };
        assert_eq!(validate_support_datum(&two, &ok), Ok(()));
        let bad = SupportDatum { sigma: vec![set(&[0]), set(&[0])], ..ok.clone() };
        assert!(matches!(validate_support_datum(&two, &bad), Err(AxiomViolation::Empty { .. })));

        let b2 = named::b2();
        let pt = FiniteSpace::discrete(vec!["p".into()]).unwrap();
        let full = set(&[0]);
        let d = SupportDatum {
            space: pt,
            sigma: vec![BitSet::EMPTY, full, full, full],
            flavor: Flavor::LatticeClosed,
        };
        assert!(matches!(validate_support_datum(&b2, &d), Err(AxiomViolation::Meet { .. })));
        let arity = SupportDatum { sigma: vec![], ..d };
        assert!(matches!(validate_support_datum(&b2, &arity), Err(AxiomViolation::Arity { .. })));
    }

    #[test]
    fn sigma_examples() {
        let c3 = named::c3();
        let sp = spectrum(&c3, Flavor::SemilatticeClosed, g()).unwrap();
        let id: Vec<usize> = (0..sp.space.len()).collect();
        let d = sigma_of_map(&sp, &sp.space, &id).unwrap();
        assert_eq!(d.sigma, sp.supp.assignment);
        assert_eq!(map_of_sigma(&c3, &sp, &d).unwrap(), id);

        let whole = sp.position(Ideal(c3.carrier())).unwrap();
        let x = FiniteSpace::sierpinski();
        let constant = sigma_of_map(&sp, &x, &[whole, whole]).unwrap();
        assert!(constant.sigma.iter().all(|s| s.is_empty()));
        assert_eq!(map_of_sigma(&c3, &sp, &constant).unwrap(), vec![whole, whole]);

        let two = named::two();
        let sp2 = spectrum(&two, Flavor::SemilatticeClosed, g()).unwrap();
        let f = vec![sp2.position(Ideal(set(&[0]))).unwrap(), sp2.position(Ideal(set(&[0, 1]))).unwrap()];
        let d = sigma_of_map(&sp2, &x, &f).unwrap();
        assert_eq!(x.label(d.sigma[1]), "{p}");
        assert_eq!(map_of_sigma(&two, &sp2, &d).unwrap(), f);

        // q ↦ {0}, p ↦ 2 pulls the closed point back to an open set
        let swapped = vec![f[1], f[0]];
        assert!(matches!(sigma_of_map(&sp2, &x, &swapped), Err(Error::NotContinuous(_))));
    }

    #[test]
    fn adjunction_examples() {
        let two = named::two();
        let s = FiniteSpace::sierpinski();
        let c = check_adjunction("2", &two, &s, Flavor::SemilatticeClosed, g()).unwrap();
        assert!(c.bijection);
        assert_eq!((c.map_count, c.datum_count), (3, 3));

        let empty = FiniteSpace::new(vec![], vec![BitSet::EMPTY]).unwrap();
        for (name, l) in named::all() {
            for flavor in Flavor::ALL {
                let c = check_adjunction(name, &l, &empty, flavor, g()).unwrap();
                assert_eq!((c.map_count, c.datum_count, c.bijection), (1, 1, true));
            }
        }

        let pt = FiniteSpace::discrete(vec!["p".into()]).unwrap();
        let c = check_adjunction("B2", &named::b2(), &pt, Flavor::LatticeClosed, g()).unwrap();
        assert_eq!((c.map_count, c.datum_count, c.bijection), (2, 2, true));
    }

    #[test]
    fn adjunction_and_finality_on_named_lattices() {
        for (name, l) in named::all() {
            for x in all_topologies(2).unwrap() {
                for flavor in Flavor::ALL {
                    let c = check_adjunction(name, &l, &x, flavor, g()).unwrap();
                    assert!(c.bijection, "{name} {flavor:?}: {:?}", c.failure);
                    let f = check_finality(&l, &x, flavor, g()).unwrap();
                    assert!(f.final_object, "{name} {flavor:?}: {:?}", f.failure);
                }
            }
        }
    }

    #[test]
    fn closed_lattice_data_classify_into_primes() {
        for (_, l) in named::all() {
            for x in all_topologies(2).unwrap() {
                let spec = spectrum(&l, Flavor::LatticeClosed, g()).unwrap();
                for d in enumerate_support_data(&l, &x, Flavor::LatticeClosed, g()).unwrap() {
                    for p in map_of_sigma(&l, &spec, &d).unwrap() {
                        assert!(crate::ideals::is_prime(&l, spec.points[p].members()));
                    }
                }
            }
        }
    }

    #[test]
    fn translation_examples() {
        let two = named::two();
        let pt = FiniteSpace::discrete(vec!["p".into()]).unwrap();
        let open = SupportDatum { space: pt.clone(), sigma: vec![BitSet::EMPTY, set(&[0])], flavor: Flavor::LatticeOpen };
        let closed = open_closed_translate(&two, &open).unwrap();
        assert_eq!(closed.flavor, Flavor::LatticeClosed);
        assert!(closed.sigma[1].is_empty());
        assert_eq!(validate_support_datum(&two.dual(), &closed), Ok(()));
        assert_eq!(open_closed_translate(&two.dual(), &closed).unwrap(), open);

        for (_, l) in named::all() {
            for x in all_topologies(2).unwrap() {
                let c = check_translation(&l, &x, g()).unwrap();
                assert!(c.bijection && c.maps_match, "{:?}", c.failure);
            }
        }
    }

    #[test]
    fn naturality_examples() {
        let c3 = named::c3();
        let s = FiniteSpace::sierpinski();
        let d2 = FiniteSpace::discrete(vec!["u".into(), "v".into()]).unwrap();
        for flavor in Flavor::ALL {
            let id = check_naturality(&c3, &[0, 1], &s, &s, flavor, g()).unwrap();
            assert!(id.commutes);
            let constant = check_naturality(&c3, &[0, 0], &s, &d2, flavor, g()).unwrap();
            assert!(constant.commutes);
            // Sierpiński is connected, so only constants reach the discrete space
            let maps = enumerate_continuous(&s, &d2, g()).unwrap();
            assert_eq!(maps, vec![vec![0, 0], vec![1, 1]]);
            for m in maps {
                let square = check_naturality(&c3, &m, &s, &d2, flavor, g()).unwrap();
                assert!(square.commutes && square.maps_checked > 0);
            }
            let back = check_naturality(&c3, &[0, 1], &d2, &s, flavor, g()).unwrap();
            assert!(back.commutes);
        }
        assert!(matches!(
            check_naturality(&c3, &[1, 0], &d2, &s, Flavor::LatticeClosed, g()),
            Ok(_)
        ));
        assert!(matches!(
            check_naturality(&c3, &[0, 1], &s, &FiniteSpace::new(vec!["u".into(), "v".into()], vec![BitSet::EMPTY, set(&[0]), set(&[0, 1])]).unwrap(), Flavor::LatticeClosed, g()),
            Err(Error::NotContinuous(_))
        ));
    }
}
