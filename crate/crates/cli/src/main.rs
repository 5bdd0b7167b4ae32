//! `rbl2`: verify, construct, search and mutate structure documents.
//!
//! Exit status: 0 when every check passes, 1 when violations were found
//! (each printed as a `VIOLATION` line on stdout), 2 on usage, parse or
//! shape errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rbl2::algebra::{
    adjoint_representation, dual_representation, prelie_from_rb, semidirect_product,
    subadjacent_lie,
};
use rbl2::categorify::{roundtrip_hom, roundtrip_st};
use rbl2::crossed::{
    crossed_semidirect, crossed_to_strict, derived_crossed, prelie_crossed_to_lie_crossed,
    rb_crossed_to_prelie_crossed, strict_to_crossed,
};
use rbl2::format::{self, Document};
use rbl2::search::{self, SearchSpec, Site};
use rbl2::structure::{Kind, Structure};
use rbl2::tensor::LinearMap;
use rbl2::two_term::{compose_homs, compose_rb_homs, RbLInfinityHom, RbTriple, TwoTermRbLInfinity};
use rbl2::{catalog, par, scalar, Error, VerificationReport};

#[derive(Parser)]
#[command(
    name = "rbl2",
    version,
    about = "Exact verifier for Rota-Baxter Lie structures"
)]
struct Cli {
    /// Worker threads for verification and search (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verifier for the document's kind.
    Verify { file: PathBuf },
    /// Apply a construction to a document and write the result.
    Construct {
        op: Construction,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that extracting a 2-term structure from its Lie 2-algebra view
    /// returns the original data.
    Roundtrip { file: PathBuf },
    /// Enumerate Rota-Baxter operators with entries drawn from a finite set.
    SearchRb {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `-1,0,1`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: u64,
        /// Write the operator list here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Add a rational to one tensor entry (skew and alternating partners
    /// follow).
    Mutate {
        file: PathBuf,
        /// `tensor/i,j,...`; hom endpoints take a `source/` or `target/`
        /// prefix.
        #[arg(long)]
        site: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compose two homomorphisms: `f` first, then `g`.
    Compose {
        f: PathBuf,
        g: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write every catalog entry as `<name>.json` into a directory.
    Catalog { dir: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// rb-lie to pre-lie: `x * y = [Rx, y]`.
    Prelie,
    /// pre-lie to lie: commutator bracket.
    Subadjacent,
    /// representation to its dual.
    Dual,
    /// rb-lie to its adjoint representation.
    Adjoint,
    /// representation to the semidirect rb-lie algebra.
    Semidirect,
    CrossedToStrict,
    StrictToCrossed,
    RbToPrelieCm,
    PrelieToLieCm,
    /// crossed-rb to the descendent crossed-lie module; also checks that
    /// `(t0, t1)` is a crossed-module homomorphism.
    DerivedCm,
    CmSemidirect,
}

enum Failure {
    /// Exit 1: the listed checks failed.
    Violations(VerificationReport),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariantBroken { report, .. } => Failure::Violations(report),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    match par::with_workers(jobs, move || run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("rbl2: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Verify { file } => {
            let doc = load(&file)?;
            clean(doc.structure.verify()?)
        }
        Command::Construct { op, files, out } => {
            let [file] = files.as_slice() else {
                return Err(Failure::Usage(format!(
                    "construct takes one input document, got {}",
                    files.len()
                )));
            };
            let doc = load(file)?;
            clean(doc.structure.verify()?)?;
            let result = construct(op, doc.structure)?;
            emit(&Document::new(result), out.as_deref())
        }
        Command::Roundtrip { file } => {
            let doc = load(&file)?;
            clean(roundtrip(doc.structure)?)
        }
        Command::SearchRb {
            file,
            coeffs,
            budget,
            out,
        } => {
            let target = match load(&file)?.structure {
                Structure::Lie(a) => a,
                Structure::RbLie(a) => a.base,
                other => return Err(wrong_kind("search-rb", other.kind())),
            };
            let spec = SearchSpec::new(target, search::parse_coeffs(&coeffs)?).with_budget(budget);
            let found = search::enumerate_rb_operators(&spec)?;
            let text: String = found
                .iter()
                .map(|a| search::operator_line(&a.r) + "\n")
                .collect();
            write_text(&text, out.as_deref())
        }
        Command::Mutate {
            file,
            site,
            delta,
            out,
        } => {
            let doc = load(&file)?;
            let site: Site = site.parse()?;
            let delta = scalar::parse(&delta)?;
            let structure = search::mutate(&doc.structure, &site, &delta)?;
            emit(
                &Document {
                    structure,
                    labels: doc.labels,
                },
                out.as_deref(),
            )
        }
        Command::Compose { f, g, out } => {
            let f = load(&f)?.structure;
            let g = load(&g)?.structure;
            let composed: Structure = match (f, g) {
                (Structure::RbHom(f), Structure::RbHom(g)) => compose_rb_homs(&g, &f)?.into(),
                (Structure::Hom(f), Structure::Hom(g)) => compose_homs(&g, &f)?.into(),
                (f, g) => {
                    return Err(Failure::Usage(format!(
                        "compose needs two hom or two rb-hom documents, got {} and {}",
                        f.kind().tag(),
                        g.kind().tag()
                    )))
                }
            };
            clean(composed.verify()?)?;
            emit(&Document::new(composed), out.as_deref())
        }
        Command::Catalog { dir } => {
            std::fs::create_dir_all(&dir)?;
            for entry in catalog::catalog()? {
                format::save(dir.join(format!("{}.json", entry.name)), &entry.doc)?;
            }
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    format::load(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn clean(report: VerificationReport) -> Outcome {
    if report.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violations(report))
    }
}

fn wrong_kind(what: &str, kind: Kind) -> Failure {
    Failure::Usage(format!(
        "{what} does not accept a `{}` document",
        kind.tag()
    ))
}

fn construct(op: Construction, input: Structure) -> Result<Structure, Failure> {
    use Construction as C;
    use Structure as S;
    let kind = input.kind();
    Ok(match (op, input) {
        (C::Prelie, S::RbLie(a)) => prelie_from_rb(&a)?.into(),
        (C::Subadjacent, S::PreLie(p)) => subadjacent_lie(&p)?.into(),
        (C::Dual, S::Representation(r)) => dual_representation(&r)?.into(),
        (C::Adjoint, S::RbLie(a)) => adjoint_representation(&a)?.into(),
        (C::Semidirect, S::Representation(r)) => semidirect_product(&r)?.into(),
        (C::CrossedToStrict, S::CrossedRb(c)) => crossed_to_strict(&c)?.into(),
        (C::StrictToCrossed, S::RbTwoTerm(g)) => strict_to_crossed(&g)?.into(),
        (C::RbToPrelieCm, S::CrossedRb(c)) => rb_crossed_to_prelie_crossed(&c)?.into(),
        (C::PrelieToLieCm, S::CrossedPreLie(p)) => prelie_crossed_to_lie_crossed(&p)?.into(),
        (C::DerivedCm, S::CrossedRb(c)) => {
            let (derived, hom_report) = derived_crossed(&c)?;
            clean(hom_report)?;
            derived.into()
        }
        (C::CmSemidirect, S::CrossedRb(c)) => crossed_semidirect(&c)?.into(),
        (op, _) => {
            let name = op.to_possible_value().map(|v| v.get_name().to_string());
            return Err(wrong_kind(&name.unwrap_or_default(), kind));
        }
    })
}

/// Plain 2-term structures and homs are embedded with zero operators.
fn roundtrip(input: Structure) -> Result<VerificationReport, Failure> {
    let with_zero = |linf: rbl2::two_term::TwoTermLInfinity| {
        let rb = RbTriple::zero(linf.dim0(), linf.dim1());
        TwoTermRbLInfinity { linf, rb }
    };
    Ok(match input {
        Structure::RbTwoTerm(g) => roundtrip_st(&g)?,
        Structure::TwoTerm(l) => roundtrip_st(&with_zero(l))?,
        Structure::RbHom(h) => roundtrip_hom(&h)?,
        Structure::Hom(h) => {
            let phi3 = LinearMap::zero(h.target.dim1(), h.source.dim0());
            roundtrip_hom(&RbLInfinityHom {
                source: with_zero(h.source),
                target: with_zero(h.target),
                maps: h.maps,
                phi3,
            })?
        }
        other => return Err(wrong_kind("roundtrip", other.kind())),
    })
}

fn emit(doc: &Document, out: Option<&Path>) -> Outcome {
    write_text(&format::write_document(doc)?, out)
}

fn write_text(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
