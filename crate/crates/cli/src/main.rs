//! `lattik`: run lattice, spectrum, frame and tensor checks on JSON files.
//!
//! Exit status is 0 when the requested check holds, 1 when it fails (the
//! JSON on stdout carries the witness), and 2 when the input cannot be read
//! or does not describe a valid structure.

mod dot;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lattik::frames::{
    as_frame, check_coherent, extend_morphism, id_vs_omega_dual, id_vs_omega_unchecked,
    ideal_frame, is_spatial, points, pt_ideal_vs_hochster,
};
use lattik::ideals::{all_ideals, join_irreducibles, prime_ideals};
use lattik::json::{parse, render, resolve_element_map, DatumFile, LatticeFile, MapFile, SpaceJson};
use lattik::order::{BoundedLattice, LatticeMorphism, MorphismKind};
use lattik::suite::{run_criterion, run_suite, SuiteConfig};
use lattik::support::{check_adjunction, check_finality, check_naturality, validate_support_datum, Flavor};
use lattik::tensor::{
    all_radical_tensor_ideals, check_classification, check_tensor_lemma, quotient_lattice,
    TensorLattice,
};
use lattik::topology::{hochster_dual, sp_space, spc_space, Spectrum};
use lattik::{corpus, Error, SizeGuard};

#[derive(Parser, Debug)]
#[command(name = "lattik", version, about = "Finite lattices, their spectra, frames and tensor ideals")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// worker threads for corpus runs; output order does not depend on it
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// abort exhaustive searches after this many candidates
    #[arg(long, global = true, env = "LATTIK_SIZE_GUARD")]
    size_guard: Option<u64>,
    /// seed for tensor fuzzing
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlavorArg {
    SemilatticeClosed,
    LatticeClosed,
    LatticeOpen,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::SemilatticeClosed => Flavor::SemilatticeClosed,
            FlavorArg::LatticeClosed => Flavor::LatticeClosed,
            FlavorArg::LatticeOpen => Flavor::LatticeOpen,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Parse a lattice file and report its basic invariants
    Validate { lattice: PathBuf },
    /// All ideals
    Ideals { lattice: PathBuf },
    /// Prime ideals
    Primes { lattice: PathBuf },
    /// Sp(L): all ideals with closed basis supp(a)
    Sp { lattice: PathBuf },
    /// Spc(L): prime ideals with closed basis supp(a)
    Spectrum { lattice: PathBuf },
    /// Spc(L)^∨: prime ideals with open basis supp(a)
    Hochster { lattice: PathBuf },
    /// Check the axioms of a support datum
    SupportCheck { lattice: PathBuf, datum: PathBuf },
    /// Support data versus continuous maps into the spectrum, plus finality
    Adjunction {
        lattice: PathBuf,
        space: PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::SemilatticeClosed)]
        flavor: FlavorArg,
    },
    /// Naturality of the bijection along a continuous map
    Naturality {
        lattice: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::SemilatticeClosed)]
        flavor: FlavorArg,
    },
    /// Points of a frame
    FramePoints { lattice: PathBuf },
    /// Whether a frame has enough points, and whether it is coherent
    Spatial { lattice: PathBuf },
    /// Extend a lattice morphism L -> F to Id(L) -> F
    Extend {
        lattice: PathBuf,
        frame: PathBuf,
        /// JSON object mapping element names of L to element names of F
        morphism: PathBuf,
    },
    /// Pt(Id(L)) versus Spc(L)^∨
    PtVsHochster { lattice: PathBuf },
    /// Id(L) versus Ω(Spc(L)^∨)
    IdVsOmega {
        lattice: PathBuf,
        /// skip the distributivity precondition
        #[arg(long)]
        unchecked: bool,
    },
    /// Check the tensor section of a lattice file
    TensorValidate { lattice: PathBuf },
    /// Radical tensor ideals
    Radicals { lattice: PathBuf },
    /// The lattice L(⊗) of generated radical tensor ideals
    Quotient { lattice: PathBuf },
    /// ⟨a⟩ ∩ ⟨b⟩ = ⟨a ⊗ b⟩ for all a, b
    TensorLemma { lattice: PathBuf },
    /// Radical tensor ideals versus Id(L(⊗)) and Ω(Spc(L(⊗))^∨)
    Classify { lattice: PathBuf },
    /// Generate the lattice corpus, or run the corpus verification suite
    Corpus {
        /// largest lattice generated (at most 8)
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// run the verification suite instead of listing lattices
        #[arg(long)]
        verify: bool,
        /// only this criterion of the suite
        #[arg(long, requires = "verify")]
        criterion: Option<u8>,
        /// fuzzed tensor lattices required by the suite
        #[arg(long, default_value_t = 1000)]
        fuzz: usize,
    },
    /// Hasse diagram of a lattice file or of the specialization order of a space file
    Dot { file: PathBuf },
}

/// Verb name and the operation it runs; each operation has exactly one verb.
#[cfg(test)]
const COVERAGE: &[(&str, &str)] = &[
    ("validate", "BoundedLattice::from_pairs"),
    ("ideals", "all_ideals"),
    ("primes", "prime_ideals"),
    ("sp", "sp_space"),
    ("spectrum", "spc_space"),
    ("hochster", "hochster_dual"),
    ("support-check", "validate_support_datum"),
    ("adjunction", "check_adjunction"),
    ("naturality", "check_naturality"),
    ("frame-points", "points"),
    ("spatial", "is_spatial"),
    ("extend", "extend_morphism"),
    ("pt-vs-hochster", "pt_ideal_vs_hochster"),
    ("id-vs-omega", "id_vs_omega_dual"),
    ("tensor-validate", "build_tensor_lattice"),
    ("radicals", "all_radical_tensor_ideals"),
    ("quotient", "quotient_lattice"),
    ("tensor-lemma", "check_tensor_lemma"),
    ("classify", "check_classification"),
    ("corpus", "corpus::generate"),
    ("dot", "export_dot"),
];

/// What a verb produced: the text for stdout and whether the check held.
struct Outcome {
    text: String,
    holds: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, holds: true }
    }

    fn json<T: Serialize>(value: &T, holds: bool) -> Self {
        Outcome { text: render(value), holds }
    }
}

/// Errors that describe the mathematics of a valid input rather than a
/// problem with the input itself.
fn is_check_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotContinuous(_)
            | Error::InvalidDatum(_)
            | Error::NotAFrame(_)
            | Error::NotDistributive(_)
            | Error::NotDistributiveOverJoin(_)
            | Error::UnitLawFails(_)
            | Error::ZeroLawFails(_)
            | Error::NotAssociative(_)
            | Error::NotT0(..)
            | Error::KindMismatch(_)
    )
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_lattice(path: &Path) -> Result<(LatticeFile, BoundedLattice), Error> {
    let file: LatticeFile = parse(&read(path)?)?;
    let l = file.lattice()?;
    Ok((file, l))
}

fn load_tensor(path: &Path) -> Result<(String, TensorLattice), Error> {
    let (file, _) = load_lattice(path)?;
    match file.tensor_lattice()? {
        Some(t) => Ok((file.name, t)),
        None => Err(Error::Malformed(format!("{} has no tensor section", path.display()))),
    }
}

fn names(l: &BoundedLattice, set: lattik::BitSet) -> Vec<String> {
    set.iter().map(|a| l.name(a).to_string()).collect()
}

fn spectrum_json(name: &str, l: &BoundedLattice, s: &Spectrum) -> Value {
    json!({
        "lattice": name,
        "kind": s.kind,
        "points": s.points.iter().map(|p| p.names(l)).collect::<Vec<_>>(),
        "space": SpaceJson::from(&s.space),
        "supp": (0..l.len())
            .map(|a| json!([l.name(a), s.supp.supp(a).iter().map(|p| s.space.point(p)).collect::<Vec<_>>()]))
            .collect::<Vec<_>>(),
    })
}

fn require_json(format: Format, verb: &str) -> Result<(), Error> {
    match format {
        Format::Json => Ok(()),
        Format::Dot => Err(Error::Malformed(format!("`{verb}` has no DOT output"))),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let guard = cli.size_guard.map(SizeGuard).unwrap_or_default();
    let format = cli.format;
    match &cli.verb {
        Verb::Validate { lattice } => {
            let (file, l) = load_lattice(lattice)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_dot(&file.name, l.poset())));
            }
            let tensor = file.tensor_lattice()?;
            Ok(Outcome::json(
                &json!({
                    "name": file.name,
                    "elements": l.len(),
                    "bottom": l.name(l.bottom()),
                    "top": l.name(l.top()),
                    "covers": LatticeFile::from_lattice(&file.name, &l).leq,
                    "distributive": l.is_distributive(),
                    "join_irreducibles": names(&l, join_irreducibles(&l)),
                    "tensor": tensor.is_some(),
                }),
                true,
            ))
        }
        Verb::Ideals { lattice } => {
            let (file, l) = load_lattice(lattice)?;
            let idl = all_ideals(&l, guard)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_dot(&format!("Id({})", file.name), idl.lattice.poset())));
            }
            let ideals: Vec<Vec<String>> = idl.ideals.iter().map(|i| i.names(&l)).collect();
            Ok(Outcome::json(&json!({ "lattice": file.name, "ideals": ideals }), true))
        }
        Verb::Primes { lattice } => {
            require_json(format, "primes")?;
            let (file, l) = load_lattice(lattice)?;
            let primes: Vec<Vec<String>> = prime_ideals(&l).iter().map(|i| i.names(&l)).collect();
            Ok(Outcome::json(&json!({ "lattice": file.name, "prime_ideals": primes }), true))
        }
        Verb::Sp { lattice } | Verb::Spectrum { lattice } | Verb::Hochster { lattice } => {
            let (file, l) = load_lattice(lattice)?;
            let s = match &cli.verb {
                Verb::Sp { .. } => sp_space(&l, guard)?,
                Verb::Spectrum { .. } => spc_space(&l)?,
                _ => hochster_dual(&l)?,
            };
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_space_dot(&file.name, &s.space)?));
            }
            Ok(Outcome::json(&spectrum_json(&file.name, &l, &s), true))
        }
        Verb::SupportCheck { lattice, datum } => {
            require_json(format, "support-check")?;
            let (file, l) = load_lattice(lattice)?;
            let d = parse::<DatumFile>(&read(datum)?)?.datum(&l)?;
            let result = validate_support_datum(&l, &d);
            let holds = result.is_ok();
            Ok(Outcome::json(
                &json!({
                    "lattice": file.name,
                    "flavor": d.flavor,
                    "valid": holds,
                    "violation": result.err().map(|v| json!({ "detail": v, "message": v.to_string() })),
                }),
                holds,
            ))
        }
        Verb::Adjunction { lattice, space, flavor } => {
            require_json(format, "adjunction")?;
            let (file, l) = load_lattice(lattice)?;
            let x = parse::<SpaceJson>(&read(space)?)?.space()?;
            let flavor = Flavor::from(*flavor);
            let cert = check_adjunction(&file.name, &l, &x, flavor, guard)?;
            let finality = check_finality(&l, &x, flavor, guard)?;
            let holds = cert.bijection && finality.final_object;
            Ok(Outcome::json(&json!({ "adjunction": cert, "finality": finality }), holds))
        }
        Verb::Naturality { lattice, map, flavor } => {
            require_json(format, "naturality")?;
            let (file, l) = load_lattice(lattice)?;
            let (x, y, g) = parse::<MapFile>(&read(map)?)?.resolve()?;
            let cert = check_naturality(&l, &g, &x, &y, Flavor::from(*flavor), guard)?;
            let holds = cert.commutes;
            Ok(Outcome::json(&json!({ "lattice": file.name, "naturality": cert }), holds))
        }
        Verb::FramePoints { lattice } => {
            let (file, l) = load_lattice(lattice)?;
            let f = as_frame(l)?;
            let pt = points(&f, guard)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_space_dot(&format!("Pt({})", file.name), &pt.space)?));
            }
            let points: Vec<Value> = pt
                .points
                .iter()
                .enumerate()
                .map(|(i, phi)| {
                    let filter: lattik::BitSet = (0..f.len()).filter(|&a| phi.apply(a) == 1).collect();
                    json!({ "point": pt.space.point(i), "filter": names(&f, filter) })
                })
                .collect();
            let opens: Vec<Value> = (0..f.len())
                .map(|a| json!([f.name(a), pt.opens_of[a].iter().map(|p| pt.space.point(p)).collect::<Vec<_>>()]))
                .collect();
            Ok(Outcome::json(
                &json!({ "frame": file.name, "points": points, "space": SpaceJson::from(&pt.space), "opens": opens }),
                true,
            ))
        }
        Verb::Spatial { lattice } => {
            require_json(format, "spatial")?;
            let (file, l) = load_lattice(lattice)?;
            let f = as_frame(l)?;
            let spatial = is_spatial(&f, guard)?;
            let coherent = check_coherent(&f, guard)?;
            let holds = spatial.spatial;
            Ok(Outcome::json(&json!({ "frame": file.name, "spatial": spatial, "coherent": coherent }), holds))
        }
        Verb::Extend { lattice, frame, morphism } => {
            require_json(format, "extend")?;
            let (file, l) = load_lattice(lattice)?;
            let (frame_file, fl) = load_lattice(frame)?;
            let f = as_frame(fl)?;
            let map: BTreeMap<String, String> = parse(&read(morphism)?)?;
            let phi = LatticeMorphism { kind: MorphismKind::Blat, map: resolve_element_map(&l, &f, &map)? };
            let (idl, _) = ideal_frame(&l, guard)?;
            let psi = extend_morphism(&l, &idl, &f, &phi)?;
            let images: Vec<Value> = idl
                .ideals
                .iter()
                .enumerate()
                .map(|(i, ideal)| json!([ideal.names(&l), f.name(psi.apply(i))]))
                .collect();
            Ok(Outcome::json(
                &json!({ "lattice": file.name, "frame": frame_file.name, "extension": images }),
                true,
            ))
        }
        Verb::PtVsHochster { lattice } => {
            require_json(format, "pt-vs-hochster")?;
            let (file, l) = load_lattice(lattice)?;
            let c = pt_ideal_vs_hochster(&l, guard)?;
            let holds = c.homeomorphism && c.basis_matches && c.inverse_roundtrip;
            Ok(Outcome::json(&json!({ "lattice": file.name, "certificate": c }), holds))
        }
        Verb::IdVsOmega { lattice, unchecked } => {
            require_json(format, "id-vs-omega")?;
            let (file, l) = load_lattice(lattice)?;
            let c = if *unchecked { id_vs_omega_unchecked(&l, guard)? } else { id_vs_omega_dual(&l, guard)? };
            let holds = c.isomorphism && c.inverse_roundtrip;
            Ok(Outcome::json(&json!({ "lattice": file.name, "certificate": c }), holds))
        }
        Verb::TensorValidate { lattice } => {
            require_json(format, "tensor-validate")?;
            let (name, t) = load_tensor(lattice)?;
            Ok(Outcome::json(
                &json!({
                    "lattice": name,
                    "valid": true,
                    "unit": t.base().name(t.unit()),
                    "commutative": t.is_commutative(),
                }),
                true,
            ))
        }
        Verb::Radicals { lattice } => {
            let (name, t) = load_tensor(lattice)?;
            let r = all_radical_tensor_ideals(&t, guard)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_dot(&format!("Rad({name})"), r.lattice.poset())));
            }
            let ideals: Vec<Vec<String>> = r.ideals.iter().map(|i| i.names(t.base())).collect();
            Ok(Outcome::json(&json!({ "lattice": name, "radical_ideals": ideals }), true))
        }
        Verb::Quotient { lattice } => {
            let (name, t) = load_tensor(lattice)?;
            let q = quotient_lattice(&t)?;
            let qname = format!("L({name})");
            if format == Format::Dot {
                return Ok(Outcome::ok(dot::export_dot(&qname, q.lattice.poset())));
            }
            let l = t.base();
            let holds = q.join_witness.is_none() && q.meet_witness.is_none();
            let pair = |w: Option<(usize, usize)>| w.map(|(a, b)| [l.name(a), l.name(b)]);
            Ok(Outcome::json(
                &json!({
                    "quotient": LatticeFile::from_lattice(&qname, &q.lattice),
                    "classes": q.classes.iter().map(|c| c.names(l)).collect::<Vec<_>>(),
                    "projection": (0..l.len())
                        .map(|a| json!([l.name(a), q.lattice.name(q.projection[a])]))
                        .collect::<Vec<_>>(),
                    "join_formula_fails_at": pair(q.join_witness),
                    "meet_formula_fails_at": pair(q.meet_witness),
                }),
                holds,
            ))
        }
        Verb::TensorLemma { lattice } => {
            require_json(format, "tensor-lemma")?;
            let (name, t) = load_tensor(lattice)?;
            let c = check_tensor_lemma(&t);
            let holds = c.holds;
            Ok(Outcome::json(&json!({ "lattice": name, "certificate": c }), holds))
        }
        Verb::Classify { lattice } => {
            require_json(format, "classify")?;
            let (name, t) = load_tensor(lattice)?;
            let c = check_classification(&t, guard)?;
            let holds = c.classified;
            Ok(Outcome::json(&json!({ "lattice": name, "certificate": c }), holds))
        }
        Verb::Corpus { max, verify, criterion, fuzz } => {
            require_json(format, "corpus")?;
            if !*verify {
                let entries = corpus::generate(*max)?;
                let files: Vec<LatticeFile> =
                    entries.iter().map(|e| LatticeFile::from_lattice(&e.name, &e.lattice)).collect();
                return Ok(Outcome::json(&files, true));
            }
            let cfg = SuiteConfig {
                max_lattice: *max,
                fuzz_count: *fuzz,
                seed: cli.seed,
                jobs: cli.jobs,
                guard,
                ..SuiteConfig::default()
            };
            match criterion {
                Some(c) => {
                    let r = run_criterion(*c, &cfg)?;
                    let holds = r.passed;
                    Ok(Outcome::json(&r, holds))
                }
                None => {
                    let r = run_suite(&cfg)?;
                    let holds = r.passed;
                    Ok(Outcome::json(&r, holds))
                }
            }
        }
        Verb::Dot { file } => {
            let text = read(file)?;
            let value: Value = parse(&text)?;
            if value.get("elements").is_some() {
                let f: LatticeFile = parse(&text)?;
                let l = f.lattice()?;
                Ok(Outcome::ok(dot::export_dot(&f.name, l.poset())))
            } else {
                let x = parse::<SpaceJson>(&text)?.space()?;
                let name = file.file_stem().and_then(|s| s.to_str()).unwrap_or("space");
                Ok(Outcome::ok(dot::export_space_dot(name, &x)?))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) if is_check_failure(&e) => {
            print!("{}", render(&json!({ "holds": false, "error": e.to_string() })));
            eprintln!("check failed: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
