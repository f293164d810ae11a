//! Corpus-wide verification runs.
//!
//! Each criterion sweeps the generated lattice corpus (and, where spaces
//! are involved, every topology on a few points) and folds the individual
//! certificates into one report. Work items run on a rayon pool of the
//! requested size, but results are collected in input order, so the JSON
//! report does not depend on scheduling.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{self, named, CorpusEntry};
use crate::error::{Error, Result};
use crate::frames::{
    as_frame, check_restriction_bijection, id_vs_omega_dual, id_vs_omega_unchecked, ideal_frame,
    is_spatial, pt_ideal_vs_hochster,
};
use crate::ideals::{ideal_of_morphism, join_irreducibles, prime_ideals, Ideal};
use crate::json::LatticeFile;
use crate::order::{enumerate_morphisms, BoundedLattice, MorphismKind};
use crate::support::{check_adjunction, check_finality, check_translation, Flavor};
use crate::tensor::{
    build_tensor_lattice, check_classification, check_tensor_lemma, fuzz_tensor_lattices,
    meet_table, TensorLattice,
};
use crate::topology::{all_topologies, hochster_dual, is_homeomorphism, spc_space, FiniteSpace, Spectrum};
use crate::SizeGuard;

/// Failures listed per criterion before the rest are only counted.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    /// largest lattice in the corpus sweeps
    pub max_lattice: usize,
    /// largest space in the support-data sweeps
    pub max_points: usize,
    /// largest lattice and frame in the restriction sweep
    pub max_frame: usize,
    /// largest lattice carrying fuzzed tensor products
    pub max_tensor: usize,
    /// fuzzed valid tensor lattices required
    pub fuzz_count: usize,
    pub seed: u64,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    pub guard: SizeGuard,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_lattice: 6,
            max_points: 3,
            max_frame: 5,
            max_tensor: 5,
            fuzz_count: 1000,
            seed: 0,
            jobs: 1,
            guard: SizeGuard::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub criterion: u8,
    pub title: &'static str,
    pub passed: bool,
    /// number of individual certificates examined
    pub checked: usize,
    pub summary: Value,
    pub failures: Vec<Value>,
    pub unlisted_failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

pub const CRITERIA: [(u8, &str); 7] = [
    (1, "semilattice support data match continuous maps into Sp(L)"),
    (2, "closed and open support data, and the open/closed translation"),
    (3, "Spc(L)^∨ is homeomorphic to Spc(L^op) by complement"),
    (4, "Id(L) ≅ Ω(Spc(L)^∨) for distributive L, not for M3 and N5"),
    (5, "Id(L) is a spatial frame, restriction bijection, Pt(Id(L)) ≅ Spc(L)^∨"),
    (6, "prime ideals are counted by join-irreducibles"),
    (7, "tensor lemma and classification of radical tensor ideals"),
];

struct Tally {
    checked: usize,
    failures: Vec<Value>,
    unlisted: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new(), unlisted: 0 }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(failure());
            } else {
                self.unlisted += 1;
            }
        }
    }

    fn report(self, criterion: u8, summary: Value) -> CriterionReport {
        let title = CRITERIA.iter().find(|(c, _)| *c == criterion).expect("known criterion").1;
        CriterionReport {
            criterion,
            title,
            passed: self.failures.is_empty(),
            checked: self.checked,
            summary,
            failures: self.failures,
            unlisted_failures: self.unlisted,
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))
}

/// Maps `f` over `items` on `jobs` threads, keeping input order.
fn par_map<T: Sync, R: Send>(
    jobs: usize,
    items: &[T],
    f: impl Fn(&T) -> Result<R> + Sync + Send,
) -> Result<Vec<R>> {
    pool(jobs)?.install(|| items.par_iter().map(f).collect())
}

fn spaces(max_points: usize) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for n in 0..=max_points {
        out.extend(all_topologies(n)?);
    }
    Ok(out)
}

fn lattices(max_n: usize) -> Result<Vec<CorpusEntry>> {
    corpus::generate(max_n)
}

pub fn run_criterion(criterion: u8, cfg: &SuiteConfig) -> Result<CriterionReport> {
    match criterion {
        1 => adjunction_semilattice(cfg),
        2 => adjunction_lattice(cfg),
        3 => hochster_duality(cfg),
        4 => ideals_and_opens(cfg),
        5 => frames(cfg),
        6 => birkhoff(cfg),
        7 => tensor(cfg),
        _ => Err(Error::Malformed(format!("no criterion {criterion}"))),
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let criteria = CRITERIA
        .iter()
        .map(|&(c, _)| run_criterion(c, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        config: cfg.clone(),
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    })
}

fn adjunction_semilattice(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let xs = spaces(cfg.max_points)?;
    let pairs: Vec<(&CorpusEntry, &FiniteSpace)> =
        ls.iter().flat_map(|e| xs.iter().map(move |x| (e, x))).collect();
    let certs = par_map(cfg.jobs, &pairs, |(e, x)| {
        check_adjunction(&e.name, &e.lattice, x, Flavor::SemilatticeClosed, cfg.guard)
    })?;
    let mut tally = Tally::new();
    let mut maps = 0;
    for c in &certs {
        maps += c.map_count;
        tally.check(c.bijection, || json!(c));
    }
    let per_lattice: Vec<Value> = ls
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let counts: Vec<usize> = certs[i * xs.len()..(i + 1) * xs.len()].iter().map(|c| c.map_count).collect();
            json!({ "lattice": e.name, "map_counts": counts })
        })
        .collect();
    Ok(tally.report(
        1,
        json!({ "lattices": ls.len(), "spaces": xs.len(), "maps": maps, "per_lattice": per_lattice }),
    ))
}

fn adjunction_lattice(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let xs = spaces(cfg.max_points)?;
    let pairs: Vec<(&CorpusEntry, &FiniteSpace)> =
        ls.iter().flat_map(|e| xs.iter().map(move |x| (e, x))).collect();
    let results = par_map(cfg.jobs, &pairs, |(e, x)| {
        let closed = check_adjunction(&e.name, &e.lattice, x, Flavor::LatticeClosed, cfg.guard)?;
        let open = check_adjunction(&e.name, &e.lattice, x, Flavor::LatticeOpen, cfg.guard)?;
        let finality = check_finality(&e.lattice, x, Flavor::LatticeClosed, cfg.guard)?;
        let translation = check_translation(&e.lattice, x, cfg.guard)?;
        Ok((closed, open, finality, translation))
    })?;
    let mut tally = Tally::new();
    let (mut closed_maps, mut open_maps) = (0, 0);
    for (closed, open, finality, translation) in &results {
        closed_maps += closed.map_count;
        open_maps += open.map_count;
        tally.check(closed.bijection, || json!(closed));
        tally.check(open.bijection, || json!(open));
        tally.check(finality.final_object, || json!({ "lattice": closed.lattice, "finality": finality }));
        tally.check(
            translation.bijection && translation.maps_match && translation.failure.is_none(),
            || json!({ "lattice": closed.lattice, "space": closed.space, "translation": translation }),
        );
        // the translation pairs open data with closed data on the dual, so
        // the counts of the two certificates on L and L^op must agree
        tally.check(translation.open_count == open.datum_count, || {
            json!({ "lattice": closed.lattice, "open": open.datum_count, "translated": translation.open_count })
        });
    }
    Ok(tally.report(
        2,
        json!({ "pairs": pairs.len(), "closed_maps": closed_maps, "open_maps": open_maps }),
    ))
}

/// `P ↦ L ∖ P` from the points of `from` to those of `to`.
fn complement_map(l: &BoundedLattice, from: &Spectrum, to: &Spectrum) -> Option<Vec<usize>> {
    from.points
        .iter()
        .map(|p| to.position(Ideal(p.members().complement(l.len()))))
        .collect()
}

fn hochster_duality(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let results = par_map(cfg.jobs, &ls, |e| {
        let l = &e.lattice;
        let op = l.dual();
        let mut out = Vec::new();
        // Spc(L)^∨ -> Spc(L^op), then Spc(L^op)^∨ -> Spc(L) with L^op in the role of L
        for (src, tgt_lattice) in [(l, &op), (&op, l)] {
            let hd = hochster_dual(src)?;
            let spc = spc_space(tgt_lattice)?;
            let ok = match (complement_map(src, &hd, &spc), complement_map(tgt_lattice, &spc, &hd)) {
                (Some(f), Some(g)) => {
                    is_homeomorphism(&f, &hd.space, &spc.space)
                        && is_homeomorphism(&g, &spc.space, &hd.space)
                        && (0..f.len()).all(|p| g[f[p]] == p)
                }
                _ => false,
            };
            out.push((hd.points.len(), ok));
        }
        Ok(out)
    })?;
    let mut tally = Tally::new();
    let mut points = Vec::new();
    for (e, r) in ls.iter().zip(&results) {
        for (i, &(n, ok)) in r.iter().enumerate() {
            tally.check(ok, || json!({ "lattice": e.name, "direction": i }));
            if i == 0 {
                points.push(n);
            }
        }
    }
    Ok(tally.report(3, json!({ "lattices": ls.len(), "prime_counts": points })))
}

fn ideals_and_opens(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let results = par_map(cfg.jobs, &ls, |e| {
        if e.lattice.is_distributive() {
            Ok(Some(id_vs_omega_dual(&e.lattice, cfg.guard)?))
        } else {
            match id_vs_omega_dual(&e.lattice, cfg.guard) {
                Err(Error::NotDistributive(_)) => Ok(None),
                Err(err) => Err(err),
                Ok(_) => Err(Error::Malformed(format!("{} was accepted", e.name))),
            }
        }
    })?;
    let mut tally = Tally::new();
    let mut distributive = 0;
    for (e, r) in ls.iter().zip(&results) {
        if let Some(c) = r {
            distributive += 1;
            tally.check(c.isomorphism && c.inverse_roundtrip, || json!({ "lattice": e.name, "certificate": c }));
        }
    }
    let mut controls = Vec::new();
    for (name, l) in [("M3", named::m3()), ("N5", named::n5())] {
        let c = id_vs_omega_unchecked(&l, cfg.guard)?;
        tally.check(!c.injective && c.collision.is_some(), || json!({ "lattice": name, "certificate": c }));
        controls.push(json!({ "lattice": name, "ideals": c.ideals, "opens": c.opens, "collision": c.collision }));
    }
    Ok(tally.report(
        4,
        json!({ "lattices": ls.len(), "distributive": distributive, "negative_controls": controls }),
    ))
}

fn frames(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let mut tally = Tally::new();
    let per_lattice = par_map(cfg.jobs, &ls, |e| {
        let frame_ok = as_frame(e.lattice.clone()).is_ok() == e.lattice.is_distributive();
        if !e.lattice.is_distributive() {
            return Ok((frame_ok, None));
        }
        let (_, f) = ideal_frame(&e.lattice, cfg.guard)?;
        let spatial = is_spatial(&f, cfg.guard)?;
        let points = pt_ideal_vs_hochster(&e.lattice, cfg.guard)?;
        Ok((frame_ok, Some((spatial, points))))
    })?;
    let mut spatial_count = 0;
    for (e, (frame_ok, r)) in ls.iter().zip(&per_lattice) {
        tally.check(*frame_ok, || json!({ "lattice": e.name, "frame_law_disagrees_with_distributivity": true }));
        if let Some((spatial, points)) = r {
            spatial_count += 1;
            tally.check(spatial.spatial, || json!({ "lattice": e.name, "spatial": spatial }));
            tally.check(
                points.homeomorphism && points.basis_matches && points.inverse_roundtrip,
                || json!({ "lattice": e.name, "points": points }),
            );
        }
    }
    let small: Vec<&CorpusEntry> = ls
        .iter()
        .filter(|e| e.lattice.len() <= cfg.max_frame && e.lattice.is_distributive())
        .collect();
    let pairs: Vec<(&CorpusEntry, &CorpusEntry)> =
        small.iter().flat_map(|&l| small.iter().map(move |&f| (l, f))).collect();
    let certs = par_map(cfg.jobs, &pairs, |(l, f)| {
        let frame = as_frame(f.lattice.clone())?;
        check_restriction_bijection(&l.lattice, &frame, cfg.guard)
    })?;
    let mut morphisms = Vec::new();
    for ((l, f), c) in pairs.iter().zip(&certs) {
        tally.check(c.bijection, || json!({ "lattice": l.name, "frame": f.name, "restriction": c }));
        morphisms.push(c.frame_morphisms);
    }
    Ok(tally.report(
        5,
        json!({
            "spatial_ideal_frames": spatial_count,
            "restriction_pairs": pairs.len(),
            "morphism_counts": morphisms,
        }),
    ))
}

fn birkhoff(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let ls = lattices(cfg.max_lattice)?;
    let two = named::two();
    let mut tally = Tally::new();
    let mut counts = Vec::new();
    for e in ls.iter().filter(|e| e.lattice.is_distributive()) {
        let primes = prime_ideals(&e.lattice).len();
        let irreducibles = join_irreducibles(&e.lattice).len();
        // a third count, through Hom_BLat(L, 2) and kernels
        let kernels = enumerate_morphisms(&e.lattice, &two, MorphismKind::Blat, cfg.guard)?
            .iter()
            .map(|phi| ideal_of_morphism(&e.lattice, phi))
            .collect::<Result<Vec<_>>>()?
            .len();
        tally.check(primes == irreducibles && kernels == primes, || {
            json!({ "lattice": e.name, "primes": primes, "join_irreducibles": irreducibles, "kernels": kernels })
        });
        counts.push(json!([e.name, primes]));
    }
    Ok(tally.report(6, json!({ "distributive": counts.len(), "prime_counts": counts })))
}

fn nilpotent_c3() -> TensorLattice {
    build_tensor_lattice(&named::c3(), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]], 2)
        .expect("the nilpotent chain is a tensor lattice")
}

fn tensor(cfg: &SuiteConfig) -> Result<CriterionReport> {
    let b2 = named::b2();
    let hand = vec![
        ("B2", build_tensor_lattice(&b2, meet_table(&b2), b2.top())?),
        ("C3-nilpotent", nilpotent_c3()),
    ];
    let ls = lattices(cfg.max_tensor)?;
    let per_lattice = cfg.fuzz_count.div_ceil(ls.len().max(1));
    let fuzzed: Vec<(String, TensorLattice)> = ls
        .iter()
        .enumerate()
        .flat_map(|(i, e)| {
            let seed = cfg.seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            fuzz_tensor_lattices(&e.lattice, seed, per_lattice, per_lattice * 200)
                .into_iter()
                .map(|t| (e.name.clone(), t))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut all: Vec<(String, TensorLattice)> =
        hand.into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    all.extend(fuzzed.iter().cloned());
    let results = par_map(cfg.jobs, &all, |(_, t)| {
        Ok((check_tensor_lemma(t), check_classification(t, cfg.guard)?))
    })?;
    let mut tally = Tally::new();
    for ((name, t), (lemma, class)) in all.iter().zip(&results) {
        let witness = || {
            json!({
                "tensor_lattice": LatticeFile::from_tensor(name, t),
                "lemma": lemma,
                "classification": class,
            })
        };
        tally.check(lemma.holds, witness);
        tally.check(class.quotient_distributive, witness);
        tally.check(class.classified, witness);
    }
    let mut distinct: Vec<(String, Vec<Vec<usize>>, usize)> = fuzzed
        .iter()
        .map(|(n, t)| (n.clone(), t.table().to_vec(), t.unit()))
        .collect();
    distinct.sort();
    distinct.dedup();
    let enough = fuzzed.len() >= cfg.fuzz_count;
    tally.check(enough, || json!({ "fuzzed": fuzzed.len(), "required": cfg.fuzz_count }));
    Ok(tally.report(
        7,
        json!({ "hand_built": 2, "fuzzed": fuzzed.len(), "fuzzed_distinct": distinct.len() }),
    ))
}
