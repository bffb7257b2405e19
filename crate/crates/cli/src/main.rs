use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mutvis_core::enumeration::{dual_spectrum_auto, visibility_polynomial};
use mutvis_core::io::{digest, parse_edge_list, write_edge_list_with_comments, ResultDocument, ResultKind};
use mutvis_core::poly::{closed_form, ClosedFormFamily};
use mutvis_core::verify::{run_all, Status};
use mutvis_core::visibility::{is_total_visibility_set_fast, is_visibility_set};
use mutvis_core::{construct, EnumerationError, EnumerationLimits, Family, Graph, Provenance, Variant};

#[derive(Parser)]
#[command(name = "mutvis", version, about = "Mutual-visibility sets, polynomials and dual spectra of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counting polynomial of one visibility variant
    Poly {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "mv")]
        variant: Variant,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dual visibility spectrum
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tests whether a vertex set is a visibility set
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "mv")]
        variant: Variant,
        /// 0-indexed comma-separated vertices; empty for the empty set
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Structural invariants: diameter, geodeticity, simplicial and bypass vertices
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Writes a named construction as an edge list
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Runs the full reproduction suite and prints a pass/fail table
    VerifyPaper {
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    family: Option<String>,
    #[arg(long, value_delimiter = ',', requires = "family")]
    params: Vec<usize>,
    /// Edge-list file
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest vertex count for exhaustive enumeration
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    #[arg(long)]
    lemma_assisted: bool,
    #[arg(long)]
    workers: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> EnumerationLimits {
        let mut l = EnumerationLimits::default();
        if let Some(n) = self.max_n {
            l.max_exhaustive_n = n;
        }
        if let Some(w) = self.workers {
            l.worker_count = w.max(1);
        }
        l.allow_lemma_assisted = self.lemma_assisted;
        l
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Structured,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        let code = if e.is_resource_limit() { EXIT_RESOURCE } else { EXIT_USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Loaded {
    identity: String,
    family: Option<Family>,
    graph: Graph,
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    if let Some(name) = &source.family {
        let family = Family::parse(name, &source.params).map_err(Failure::usage)?;
        let c = construct(&family).map_err(Failure::usage)?;
        return Ok(Loaded {
            identity: format!("family:{family}"),
            family: Some(family),
            graph: c.graph,
        });
    }
    let path = source.input.as_ref().expect("clap requires a source");
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let graph = parse_edge_list(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        identity: format!("sha256:{}", digest(&text)),
        family: None,
        graph,
    })
}

fn emit(doc: &ResultDocument, out: &OutputArgs) {
    match out.output {
        Output::Text => print!("{}", doc.to_text()),
        Output::Structured => println!("{}", doc.to_json()),
    }
}

/// Closed form for families that have one, used once exhaustive search is out of reach.
fn closed_form_for(family: Option<&Family>, variant: Variant) -> Option<mutvis_core::CountPolynomial> {
    match family? {
        Family::Path(n) => closed_form(variant, ClosedFormFamily::Path, *n).ok(),
        Family::CompleteBipartite(a, b) if a == b => closed_form(variant, ClosedFormFamily::Knn, *a).ok(),
        _ => None,
    }
}

fn cmd_poly(source: &Source, variant: Variant, limits: &EnumerationLimits, dual_kind: bool) -> Result<ResultDocument, Failure> {
    let started = Instant::now();
    let input = load(source)?;
    let (p, provenance) = if variant == Variant::Dual {
        match dual_spectrum_auto(&input.graph, limits) {
            Ok(r) => r,
            Err(EnumerationError::GraphTooLarge { .. }) if closed_form_for(input.family.as_ref(), variant).is_some() => {
                (closed_form_for(input.family.as_ref(), variant).unwrap(), Provenance::ClosedForm)
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        match visibility_polynomial(&input.graph, variant, limits) {
            Ok(p) => (p, Provenance::Exhaustive),
            Err(EnumerationError::GraphTooLarge { .. }) if closed_form_for(input.family.as_ref(), variant).is_some() => {
                (closed_form_for(input.family.as_ref(), variant).unwrap(), Provenance::ClosedForm)
            }
            Err(EnumerationError::GraphTooLarge { n, limit }) => {
                return Err(Failure {
                    code: EXIT_RESOURCE,
                    message: format!("graph has {n} vertices, above the exhaustive limit of {limit}; raise --max-n"),
                })
            }
            Err(e) => return Err(e.into()),
        }
    };
    let kind = if dual_kind { ResultKind::Spectrum } else { ResultKind::Polynomial };
    let mut doc = ResultDocument::new(input.identity, kind, provenance);
    doc.variant = Some(variant.name().to_string());
    doc.coefficients = Some(p.to_decimal_strings());
    doc.value = Some(json!(p.to_string()));
    doc.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(doc)
}

fn parse_set(text: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Failure::usage(format!("invalid vertex {tok:?} in --set")))?;
        if v >= n {
            return Err(Failure::usage(format!("vertex {v} out of range for a graph on {n} vertices")));
        }
        out.push(v);
    }
    Ok(out)
}

fn cmd_check(source: &Source, variant: Variant, set: &str) -> Result<ResultDocument, Failure> {
    let started = Instant::now();
    let input = load(source)?;
    let g = &input.graph;
    let x = g.set_of(parse_set(set, g.n())?);
    let holds = is_visibility_set(g, &x, variant);
    let mut doc = ResultDocument::new(input.identity, ResultKind::Predicate, Provenance::Exhaustive);
    doc.variant = Some(variant.name().to_string());
    doc.value = Some(json!(holds));
    let mut report = json!({ "set": x.to_vec() });
    if variant == Variant::Total {
        report["naive"] = json!(holds);
        report["distance_two"] = json!(is_total_visibility_set_fast(g, &x));
    }
    doc.report = Some(report);
    doc.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(doc)
}

fn cmd_analyze(source: &Source) -> Result<ResultDocument, Failure> {
    let started = Instant::now();
    let input = load(source)?;
    let g = &input.graph;
    let geodetic = g.is_geodetic();
    let simplicial = g.simplicial_vertices();
    let mut report = json!({
        "n": g.n(),
        "m": g.m(),
        "diameter": g.diameter(),
        "geodetic": geodetic,
        "simplicial": simplicial.to_vec(),
        "bypass": g.bypass_vertices().to_vec(),
    });
    if geodetic {
        report["mu_t"] = json!(simplicial.len());
    }
    let mut doc = ResultDocument::new(input.identity, ResultKind::Report, Provenance::Exhaustive);
    doc.report = Some(report);
    doc.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(doc)
}

fn cmd_construct(name: &str, params: &[usize], out: &OutputArgs) -> Result<(), Failure> {
    let family = Family::parse(name, params).map_err(Failure::usage)?;
    let c = construct(&family).map_err(Failure::usage)?;
    let header = format!("{family}: {} vertices, {} edges", c.graph.n(), c.graph.m());
    let text = write_edge_list_with_comments(&c.graph, [header.as_str()]);
    match out.output {
        Output::Text => print!("{text}"),
        Output::Structured => {
            let mut doc = ResultDocument::new(format!("family:{family}"), ResultKind::Report, Provenance::Exhaustive);
            doc.report = Some(json!({
                "n": c.graph.n(),
                "m": c.graph.m(),
                "names": c.names,
                "convex_cover": c.convex_cover.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                "edge_list": text,
            }));
            println!("{}", doc.to_json());
        }
    }
    Ok(())
}

fn cmd_verify(limits: &EnumerationLimits, out: &OutputArgs) -> u8 {
    let started = Instant::now();
    let reports = run_all(limits);
    let failed = reports.iter().filter(|r| r.status() == Status::Fail).count();
    match out.output {
        Output::Text => {
            for r in &reports {
                println!("{}", r.line());
            }
            println!(
                "{} of {} criteria failed ({:.1}s)",
                failed,
                reports.len(),
                started.elapsed().as_secs_f64()
            );
        }
        Output::Structured => {
            let mut doc = ResultDocument::new("verify-paper", ResultKind::Report, Provenance::Exhaustive);
            doc.value = Some(json!(failed == 0));
            doc.report = Some(json!(reports
                .iter()
                .map(|r| json!({
                    "id": r.id,
                    "title": r.title,
                    "status": r.status(),
                    "elapsed_s": r.elapsed_s,
                    "time_bound_s": r.time_bound_s,
                    "checks": r.checks,
                }))
                .collect::<Vec<_>>()));
            doc.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            println!("{}", doc.to_json());
        }
    }
    if failed == 0 {
        0
    } else {
        EXIT_FAIL
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Poly { source, variant, limits, out } => {
            emit(&cmd_poly(&source, variant, &limits.limits(), false)?, &out)
        }
        Command::Spectrum { source, limits, out } => {
            emit(&cmd_poly(&source, Variant::Dual, &limits.limits(), true)?, &out)
        }
        Command::Check { source, variant, set, out } => emit(&cmd_check(&source, variant, &set)?, &out),
        Command::Analyze { source, out } => emit(&cmd_analyze(&source)?, &out),
        Command::Construct { family, params, out } => cmd_construct(&family, &params, &out)?,
        Command::VerifyPaper { limits, out } => return Ok(cmd_verify(&limits.limits(), &out)),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
