use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hombi_core::constructions::{
    coboundary_from_r, coboundary_hom_lie_from_r, derived, dualize, opposite, perturb,
    to_hom_lie_bialgebra, twist_by_morphism, OppositeVariant,
};
use hombi_core::document::{parse_map, parse_r, Document};
use hombi_core::quiver::{parse_quiver, parse_quiver_morphism, quiver_twist, path_bialgebra};
use hombi_core::report::Report;
use hombi_core::structures::{EpsHomBialgebra, HomAlgebra, Structure};
use hombi_core::suites::{identity_suites, verify};
use hombi_core::Error;

#[derive(Parser)]
#[command(name = "hombi", version, about = "Exact checks and constructions for Hom-bialgebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the primary output here instead of stdout (documents are always JSON).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check for the document's declared kind.
    Verify { file: PathBuf },
    /// Build a new structure from an existing one.
    #[command(subcommand)]
    Construct(Construct),
    /// Run the identity suites on an eps_hom_bialgebra document.
    Report { file: PathBuf },
    /// Path bialgebras of quivers.
    #[command(subcommand)]
    Quiver(QuiverCmd),
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Path bialgebra of an acyclic quiver, optionally twisted by a quiver endomorphism.
    Build(QuiverBuild),
}

#[derive(Args, Clone)]
struct QuiverBuild {
    qfile: PathBuf,
    #[arg(long)]
    morphism: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// (f∘μ, Δ∘f, f) for an untwisted structure and endomorphism f.
    Twist {
        file: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        r: Option<PathBuf>,
    },
    /// The n-th derived structure.
    Derive {
        file: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// The dual structure.
    Dual { file: PathBuf },
    /// Negate μ or Δ, or swap to (μ^op, Δ^op).
    Opposite {
        file: PathBuf,
        #[arg(long, value_parser = ["neg-mu", "neg-delta", "op"])]
        variant: String,
    },
    /// Δ = [−, r]_* on the document's algebra, r from --r or the document.
    CoboundaryFromR {
        file: PathBuf,
        #[arg(long)]
        r: Option<PathBuf>,
    },
    /// Δ + [−, r]_*, when the perturbation condition holds.
    Perturb {
        file: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Commutator bracket and cocommutator cobracket.
    HomLie { file: PathBuf },
    /// Same as `quiver build`.
    QuiverBuild(QuiverBuild),
}

/// A failure with its exit code: 2 for unusable input, 1 for everything else.
struct Failure {
    code: u8,
    error: Error,
    report: Option<Report>,
}

impl Failure {
    fn input(error: Error) -> Self {
        Self { code: 2, error, report: None }
    }

    fn semantic(error: Error) -> Self {
        let report = match &error {
            Error::NotAMorphism(r) => Some((**r).clone()),
            _ => None,
        };
        Self { code: 1, error, report }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| {
        Failure::input(Error::Document(format!("cannot read {}: {e}", path.display())))
    })
}

fn load(path: &Path) -> Result<Document, Failure> {
    Document::parse(&read(path)?).map_err(Failure::input)
}

fn load_bialgebra(path: &Path) -> Result<(Document, EpsHomBialgebra), Failure> {
    let doc = load(path)?;
    match &doc.structure {
        Structure::Bialgebra(b) => {
            let b = b.clone();
            Ok((doc, b))
        }
        other => Err(Failure::input(Error::KindMismatch(format!(
            "expected eps_hom_bialgebra, found {}",
            other.kind()
        )))),
    }
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn render_report(doc: &Document, report: &Report, format: Format) -> String {
    let result = if report.passed() { "pass" } else { "fail" };
    match format {
        Format::Text => format!(
            "name: {}\nkind: {}\n{report}result: {result}\n",
            doc.name,
            doc.structure.kind()
        ),
        Format::Json => {
            let v = json!({
                "name": doc.name,
                "kind": doc.structure.kind(),
                "result": result,
                "checks": report.to_json(),
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
    }
}

fn cmd_verify(file: &Path, format: Format) -> Outcome {
    let doc = load(file)?;
    let report = verify(&doc.structure);
    let code = if report.passed() { 0 } else { 1 };
    Ok((render_report(&doc, &report, format), code))
}

fn cmd_report(file: &Path, format: Format) -> Outcome {
    let (doc, b) = load_bialgebra(file)?;
    let checks = verify(&doc.structure);
    if !checks.passed() {
        return Ok((render_report(&doc, &checks, format), 1));
    }
    let suites = identity_suites(&b).map_err(Failure::semantic)?;
    let code = if suites.passed() { 0 } else { 1 };
    Ok((render_report(&doc, &suites, format), code))
}

fn bialgebra_doc(parent: &Document, step: &str, b: EpsHomBialgebra) -> Document {
    parent.derive(step, Structure::Bialgebra(b))
}

fn construct(cmd: &Construct) -> Result<Document, Failure> {
    let semantic = Failure::semantic;
    Ok(match cmd {
        Construct::Twist { file, morphism, r } => {
            let (doc, b) = load_bialgebra(file)?;
            let f = parse_map(&read(morphism)?, b.dim()).map_err(Failure::input)?;
            let r = r
                .as_deref()
                .map(|p| read(p).and_then(|t| parse_r(&t, b.dim()).map_err(Failure::input)))
                .transpose()?;
            let out = twist_by_morphism(&b, &f, r.as_ref()).map_err(semantic)?;
            bialgebra_doc(&doc, &format!("twist({})", file_stem(morphism)), out)
        }
        Construct::Derive { file, n } => {
            let (doc, b) = load_bialgebra(file)?;
            let out = derived(&b, *n).map_err(semantic)?;
            bialgebra_doc(&doc, &format!("derive({n})"), out)
        }
        Construct::Dual { file } => {
            let (doc, b) = load_bialgebra(file)?;
            bialgebra_doc(&doc, "dual", dualize(&b))
        }
        Construct::Opposite { file, variant } => {
            let (doc, b) = load_bialgebra(file)?;
            let v = OppositeVariant::ALL
                .into_iter()
                .find(|v| v.name() == variant)
                .expect("clap restricts the value");
            bialgebra_doc(&doc, &format!("opposite({variant})"), opposite(&b, v))
        }
        Construct::CoboundaryFromR { file, r } => {
            let doc = load(file)?;
            let (alg, doc_r): (HomAlgebra, _) = match &doc.structure {
                Structure::Algebra(a) => (a.clone(), None),
                Structure::Bialgebra(b) => (b.algebra().clone(), b.r().cloned()),
                other => {
                    return Err(Failure::input(Error::KindMismatch(format!(
                        "expected hom_algebra or eps_hom_bialgebra, found {}",
                        other.kind()
                    ))))
                }
            };
            let r = match r {
                Some(p) => parse_r(&read(p)?, alg.dim()).map_err(Failure::input)?,
                None => doc_r.ok_or_else(|| Failure::input(Error::MissingR))?,
            };
            let out = coboundary_from_r(&alg, &r).map_err(semantic)?;
            bialgebra_doc(&doc, "coboundary-from-r", out.bialgebra)
        }
        Construct::Perturb { file, r } => {
            let (doc, b) = load_bialgebra(file)?;
            let r = parse_r(&read(r)?, b.dim()).map_err(Failure::input)?;
            let outcome = perturb(&b, &r).map_err(semantic)?;
            match outcome.result {
                Some(out) => bialgebra_doc(&doc, "perturb", out),
                None => {
                    return Err(semantic(Error::Inconsistent(format!(
                        "perturbation condition fails at basis vector {}",
                        outcome.witness.expect("witness on failure")
                    ))))
                }
            }
        }
        Construct::HomLie { file } => {
            let (doc, b) = load_bialgebra(file)?;
            let lie = match b.r() {
                Some(r) if r.is_antisymmetric() => coboundary_hom_lie_from_r(&b),
                _ => to_hom_lie_bialgebra(&b),
            }
            .map_err(semantic)?;
            doc.derive("hom-lie", Structure::LieBialgebra(lie))
        }
        Construct::QuiverBuild(args) => quiver_build(args)?,
    })
}

fn quiver_build(args: &QuiverBuild) -> Result<Document, Failure> {
    let q = parse_quiver(&read(&args.qfile)?).map_err(Failure::input)?;
    q.topological_order().map_err(Failure::input)?;
    let name = format!("path bialgebra of {}", file_stem(&args.qfile));
    Ok(match &args.morphism {
        None => {
            let b = path_bialgebra(&q).map_err(Failure::semantic)?;
            Document::new(name, Structure::Bialgebra(b))
        }
        Some(m) => {
            let morph = parse_quiver_morphism(&read(m)?, &q, &q).map_err(Failure::input)?;
            let b = quiver_twist(&q, &morph).map_err(Failure::semantic)?;
            let mut doc = Document::new(name, Structure::Bialgebra(b));
            doc.provenance = Some(format!("twist({})", file_stem(m)));
            doc
        }
    })
}

/// Builds, verifies, and renders a constructed document. An output that
/// fails its checks is never emitted.
fn cmd_construct(cmd: &Construct, format: Format, out: Option<&Path>) -> Outcome {
    let doc = construct(cmd)?;
    let report = verify(&doc.structure);
    if !report.passed() {
        return Ok((render_report(&doc, &report, format), 1));
    }
    if let Some(path) = out {
        fs::write(path, doc.to_json_string()).map_err(|e| {
            Failure::input(Error::Document(format!("cannot write {}: {e}", path.display())))
        })?;
        let summary = match format {
            Format::Text => format!("wrote {}\n{}", path.display(), doc.to_text()),
            Format::Json => doc.to_json_string(),
        };
        return Ok((summary, 0));
    }
    Ok((
        match format {
            Format::Text => doc.to_text(),
            Format::Json => doc.to_json_string(),
        },
        0,
    ))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { file } => cmd_verify(file, cli.format),
        Command::Report { file } => cmd_report(file, cli.format),
        Command::Construct(c) => cmd_construct(c, cli.format, cli.out.as_deref()),
        Command::Quiver(QuiverCmd::Build(args)) => {
            cmd_construct(&Construct::QuiverBuild(args.clone()), cli.format, cli.out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let constructs = matches!(cli.command, Command::Construct(_) | Command::Quiver(_));
            match (&cli.out, constructs) {
                // Construct commands already wrote the document; echo the summary.
                (Some(_), true) => print!("{text}"),
                (Some(path), false) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                (None, _) => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(f) => {
            match cli.format {
                Format::Text => {
                    eprintln!("error: {}", f.error);
                    if let Some(r) = &f.report {
                        eprint!("{r}");
                    }
                }
                Format::Json => {
                    let mut v = json!({ "error": f.error.to_string(), "exit_code": f.code });
                    if let Some(r) = &f.report {
                        v["checks"] = r.to_json();
                    }
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
                }
            }
            ExitCode::from(f.code)
        }
    }
}
