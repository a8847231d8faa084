use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use fwdix_core::bounds::{bound_report, enumerative_min_index, min_index_closed_forms};
use fwdix_core::families::{
    generate, load_manifest, verify_all, write_report_csv, Family, FamilySpec, Verdict,
    VerifyLimits,
};
use fwdix_core::graph::{DegreeConstraint, EnumerationConfig};
use fwdix_core::solver::{heuristic_index, HeuristicConfig};
use fwdix_core::{
    exact_index, load_profile, Error, Graph, Mode, Objective, Routing, SearchLimits, SolveResult,
    Status,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_REFUTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "fwdix",
    version,
    about = "Vertex- and edge-forwarding indices of graphs"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as a graph file.
    Gen(GenArgs),
    /// Compute a forwarding index.
    Solve(SolveArgs),
    /// Per-vertex and per-edge loads of a routing, as CSV.
    Loads(LoadsArgs),
    /// Catalogued bounds that apply to a graph, as JSON.
    Bounds(GraphArg),
    /// Check catalogued family claims against the solver.
    Verify(VerifyArgs),
    /// Minimum index over all connected graphs of a given order and degree.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// Comma-separated parameters.
    #[arg(long, value_delimiter = ',', required = true)]
    params: Vec<usize>,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ModeArg {
    Minimal,
    General,
    Auto,
}

#[derive(Args)]
struct Budget {
    /// Search node budget.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl Budget {
    fn limits(&self) -> Result<SearchLimits> {
        let mut limits = SearchLimits::default();
        if let Some(n) = self.max_nodes {
            limits.max_nodes = n;
        }
        if let Some(s) = self.time_limit {
            let d =
                Duration::try_from_secs_f64(s).map_err(|e| usage(format!("--time-limit: {e}")))?;
            limits.time_budget = Some(d);
        }
        Ok(limits)
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    index: Objective,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    #[command(flatten)]
    budget: Budget,
    /// Write the best routing found here.
    #[arg(long)]
    routing_out: Option<PathBuf>,
}

#[derive(Args)]
struct LoadsArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    routing: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON list of family specs.
    #[arg(long)]
    manifest: PathBuf,
    /// Write the CSV report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("degree").required(true).args(["max_degree", "min_degree"])))]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    index: Objective,
    /// Write the witness graph here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

/// Marks an error as the caller's fault (exit code 2).
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn input_error(e: Error) -> anyhow::Error {
    match e {
        Error::Io(_) => e.into(),
        other => usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<Usage>().is_some() {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Gen(a) => gen(a, json),
        Command::Solve(a) => solve(a, json),
        Command::Loads(a) => loads(a, json),
        Command::Bounds(a) => bounds(a),
        Command::Verify(a) => verify(a, json),
        Command::Enumerate(a) => enumerate(a, json),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn gen(a: GenArgs, json: bool) -> Result<u8> {
    let family: Family = a.family.parse().map_err(input_error)?;
    let spec = FamilySpec::new(family, &a.params);
    let g = generate(&spec).map_err(input_error)?;
    let Some(out) = a.out else {
        println!("{}", g.to_json());
        return Ok(0);
    };
    g.save(&out)
        .with_context(|| format!("writing {}", out.display()))?;
    if json {
        let v =
            json!({"name": spec.label(), "vertices": g.n(), "edges": g.edge_count(), "out": out});
        println!("{v}");
    } else {
        println!(
            "{}: {} vertices, {} edges -> {}",
            spec.label(),
            g.n(),
            g.edge_count(),
            out.display()
        );
    }
    Ok(0)
}

/// Orders up to which `--mode auto` solves exactly, from `FWDIX_LIMITS`
/// (`general=7,minimal=10`).
fn auto_thresholds() -> Result<(usize, usize)> {
    let mut general = 7;
    let mut minimal = 10;
    let Ok(text) = std::env::var("FWDIX_LIMITS") else {
        return Ok((general, minimal));
    };
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("FWDIX_LIMITS: expected key=value, got {part:?}")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("FWDIX_LIMITS: {key} needs an order, got {value:?}")))?;
        match key.trim() {
            "general" => general = value,
            "minimal" => minimal = value,
            other => return Err(usage(format!("FWDIX_LIMITS: unknown key {other:?}"))),
        }
    }
    Ok((general, minimal))
}

fn solve(a: SolveArgs, json: bool) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let limits = a.budget.limits()?;
    let mode = match a.mode {
        ModeArg::General => Some(Mode::General),
        ModeArg::Minimal => Some(Mode::Minimal),
        ModeArg::Auto => {
            let (general, minimal) = auto_thresholds()?;
            if g.n() <= general {
                Some(Mode::General)
            } else if g.n() <= minimal {
                Some(Mode::Minimal)
            } else {
                None
            }
        }
    };
    let mut result = match mode {
        None => SolveResult::bound_only(&g, a.index, Mode::Minimal),
        Some(mode) => match exact_index(&g, a.index, mode, limits) {
            Ok(r) => r,
            Err(Error::TooLarge { resources, max }) => {
                eprintln!("warning: {resources} resources exceed the exact solver's {max}; reporting a heuristic routing");
                let config = HeuristicConfig {
                    mode,
                    ..Default::default()
                };
                heuristic_index(&g, a.index, config)
            }
            Err(e) => return Err(input_error(e)),
        },
    };
    if let (Some(path), Some(cert)) = (&a.routing_out, &result.certificate) {
        cert.save(&g, path)
            .with_context(|| format!("writing {}", path.display()))?;
        result.certificate_file = Some(path.display().to_string());
    }
    if a.routing_out.is_some() && result.certificate.is_none() {
        eprintln!("warning: no routing to write (bound only)");
    }
    if json {
        println!("{}", result.to_json());
    } else {
        let index = match a.index {
            Objective::Vertex => "xi",
            Objective::Edge => "pi",
        };
        let suffix = if result.mode == Mode::Minimal {
            "_m"
        } else {
            ""
        };
        println!(
            "{index}{suffix} {} {}",
            describe(&result),
            g.name().unwrap_or("")
        );
        println!("value {}, status {}", result.value, result.status);
        println!("lower bound {}, nodes {}", result.lower_bound, result.nodes);
    }
    Ok(if result.status == Status::UpperBound {
        EXIT_BUDGET
    } else {
        0
    })
}

fn describe(r: &SolveResult) -> String {
    match r.status {
        Status::Optimal => format!("= {}", r.value),
        Status::UpperBound => format!("in [{}, {}]", r.lower_bound, r.value),
        Status::LowerBoundOnly => format!(">= {}", r.lower_bound),
    }
}

fn loads(a: LoadsArgs, json: bool) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let text = std::fs::read_to_string(&a.routing)
        .with_context(|| format!("reading {}", a.routing.display()))?;
    let r = Routing::from_json(&text, g.n())
        .map_err(|e| usage(format!("{}: {e}", a.routing.display())))?;
    let profile = load_profile(&g, &r).map_err(input_error)?;
    let stdout = io::stdout();
    if json {
        serde_json::to_writer_pretty(stdout.lock(), &profile)?;
        println!();
    } else {
        profile.write_csv(&g, stdout.lock())?;
    }
    eprintln!("xi {} pi {}", profile.xi, profile.pi);
    Ok(0)
}

fn bounds(a: GraphArg) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    println!("{}", bound_report(&g).to_json());
    Ok(0)
}

fn verify(a: VerifyArgs, json: bool) -> Result<u8> {
    let specs = load_manifest(&a.manifest).map_err(|e| match e {
        Error::Io(e) => anyhow::Error::new(e).context(format!("reading {}", a.manifest.display())),
        other => usage(format!("{}: {other}", a.manifest.display())),
    })?;
    let limits = VerifyLimits {
        search: a.budget.limits()?,
        ..Default::default()
    };
    let records = verify_all(&specs, limits);
    for rec in &records {
        if let Some(e) = &rec.error {
            eprintln!("{}: {e}", rec.spec.label());
        }
        for c in rec.checks.iter().filter(|c| c.verdict == Verdict::Skipped) {
            eprintln!(
                "{} {}: {}",
                rec.spec.label(),
                c.claim.citation,
                c.reason.as_deref().unwrap_or("")
            );
        }
    }
    match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            write_report_csv(&records, &mut w)?;
            w.flush()?;
        }
        None if json => {
            serde_json::to_writer_pretty(io::stdout().lock(), &records)?;
            println!();
        }
        None => write_report_csv(&records, io::stdout().lock())?,
    }
    let count = |v: Verdict| {
        records
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| c.verdict == v)
            .count()
    };
    eprintln!(
        "{} confirmed, {} refuted, {} bound-consistent, {} skipped",
        count(Verdict::Confirmed),
        count(Verdict::Refuted),
        count(Verdict::BoundConsistent),
        count(Verdict::Skipped),
    );
    Ok(if records.iter().any(|r| r.refuted()) {
        EXIT_REFUTED
    } else {
        0
    })
}

fn enumerate(a: EnumerateArgs, json: bool) -> Result<u8> {
    let constraint = match (a.max_degree, a.min_degree) {
        (Some(d), None) => DegreeConstraint::MaxDegree(d),
        (None, Some(d)) => DegreeConstraint::MinDegree(d),
        _ => return Err(usage("give exactly one of --max-degree and --min-degree")),
    };
    let config = EnumerationConfig {
        limit: 8,
        dedup: true,
    };
    let min = enumerative_min_index(a.n, constraint, a.index, config, a.budget.limits()?)
        .map_err(input_error)?;
    if let Some(path) = &a.out {
        min.witness
            .save(path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let catalog = min_index_closed_forms(a.n, constraint)
        .ok()
        .map(|f| match a.index {
            Objective::Vertex => f.xi,
            Objective::Edge => f.pi,
        });
    if json {
        let v = json!({
            "n": a.n,
            "constraint": constraint_text(constraint),
            "index": a.index,
            "minimum": min.value,
            "exact": min.exact,
            "graphs": min.graphs,
            "witness": min.witness.to_file(),
            "catalog": catalog,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        let proven = if min.exact {
            ""
        } else {
            " (budget ran out; not proven minimal)"
        };
        println!(
            "minimum {} {} over {} graphs with n={}, {}{proven}",
            a.index,
            min.value,
            min.graphs,
            a.n,
            constraint_text(constraint)
        );
        let edges: Vec<String> = min
            .witness
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        println!("witness {}", edges.join(" "));
        if let Some(c) = catalog {
            let range = match c.upper {
                Some(u) if u == c.lower => u.to_string(),
                Some(u) => format!("{}..{u}", c.lower),
                None => format!("{}..", c.lower),
            };
            println!("catalog {range} ({})", c.citations.join(", "));
        }
    }
    Ok(if min.exact { 0 } else { EXIT_BUDGET })
}

fn constraint_text(c: DegreeConstraint) -> String {
    match c {
        DegreeConstraint::MaxDegree(d) => format!("max degree {d}"),
        DegreeConstraint::MinDegree(d) => format!("min degree {d}"),
        DegreeConstraint::Any => "any degree".into(),
    }
}
