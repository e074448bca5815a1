use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use longcycle::cycle::{Cycle, CycleContext};
use longcycle::discharge::run_discharging;
use longcycle::embed::{parse_any, write_planar_code, EmbeddedGraph, Essential4};
use longcycle::extend::{long_cycle_observed, Certificate, CertificateKind, Event};
use longcycle::gen::{self, Filter};
use longcycle::{layout, oracle, Error};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "longcycle", version, about = "Long cycles in essentially 4-connected planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the embedding and report 3- and essential 4-connectivity.
    Validate(Input),
    /// Find a long cycle with its certificate.
    Find(FindArgs),
    /// Exact circumference by exhaustive search.
    Oracle(OracleArgs),
    /// Write a catalog graph, a kleetope, or a filtered planar_code file.
    Gen(GenArgs),
    /// Discharging audit of a given cycle, or of every context the driver visits.
    Audit(AuditArgs),
}

#[derive(Args)]
struct Input {
    /// Rotation text or planar_code; the format is sniffed.
    file: Option<PathBuf>,
    /// Run on every file in a directory instead.
    #[arg(long, value_name = "DIR", conflicts_with = "file")]
    all: Option<PathBuf>,
}

#[derive(Args)]
struct FindArgs {
    #[command(flatten)]
    input: Input,
    /// Include every audited context in the output.
    #[arg(long)]
    audit: bool,
    /// Print JSON instead of one summary line per graph.
    #[arg(long)]
    json: bool,
    /// Draw the graph with the cycle highlighted.
    #[arg(long, value_name = "OUT")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: Input,
    /// Search nodes before giving up.
    #[arg(long, env = "LONGCYCLE_BUDGET", default_value_t = 50_000_000)]
    budget: u64,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
struct GenArgs {
    #[arg(long, group = "source", value_name = "NAME")]
    catalog: Option<String>,
    /// Insert a vertex into every face of the named catalog graph.
    #[arg(long, group = "source", value_name = "NAME")]
    kleetope: Option<String>,
    #[arg(long, group = "source", value_name = "FILE")]
    ingest: Option<PathBuf>,
    /// e4c, 3c or 4ct.
    #[arg(long, default_value = "e4c", requires = "ingest")]
    filter: String,
    /// Keep a seeded sample of this many ingested graphs.
    #[arg(long, requires = "ingest")]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    file: PathBuf,
    /// Cycle as vertex ids, e.g. "cycle: 0 1 2 3"; without it the driver's
    /// contexts are audited.
    #[arg(long)]
    cycle: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
struct RunSummary {
    name: String,
    n: usize,
    length: usize,
    bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    strengthened_bound: Option<usize>,
    certificate: String,
    steps: usize,
    millis: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct FindOutput {
    summary: RunSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    audits: Vec<serde_json::Value>,
}

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MalformedInput { .. }
        | Error::NotSimple(_)
        | Error::AsymmetricAdjacency { .. }
        | Error::EulerViolation { .. }
        | Error::Disconnected
        | Error::BadHeader
        | Error::TruncatedRecord { .. }
        | Error::Io(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), err: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(e) => exit_code(e),
            None if err.downcast_ref::<std::io::Error>().is_some() => 2,
            None => 1,
        };
        Failure { code, err }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_graphs(path: &Path) -> Result<Vec<EmbeddedGraph>, Error> {
    parse_any(&fs::read(path)?)
}

/// `(name, graph or parse error)` for the single file or every file in
/// the directory, in name order.
fn load(input: &Input) -> anyhow::Result<Vec<(String, Result<EmbeddedGraph, Error>)>> {
    let files = match (&input.file, &input.all) {
        (Some(f), None) => vec![f.clone()],
        (None, Some(dir)) => {
            let mut fs: Vec<PathBuf> = fs::read_dir(dir)
                .with_context(|| format!("reading {}", dir.display()))?
                .map(|e| e.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            fs.retain(|p| p.is_file());
            fs.sort();
            fs
        }
        _ => bail!("give a FILE or --all DIR"),
    };
    let mut out = Vec::new();
    for f in files {
        let stem = f.file_name().unwrap_or_default().to_string_lossy().into_owned();
        match read_graphs(&f) {
            Ok(gs) if gs.len() == 1 => out.push((stem, Ok(gs.into_iter().next().unwrap()))),
            Ok(gs) => out.extend(gs.into_iter().enumerate().map(|(i, g)| (format!("{stem}#{i}"), Ok(g)))),
            Err(e) => out.push((stem, Err(e))),
        }
    }
    Ok(out)
}

/// Highest exit code over all per-graph results, `0` if none failed.
fn worst(codes: impl IntoIterator<Item = u8>) -> u8 {
    codes.into_iter().max().unwrap_or(0)
}

fn validate(input: &Input) -> anyhow::Result<u8> {
    let mut codes = Vec::new();
    for (name, g) in load(input)? {
        let g = match g {
            Ok(g) => g,
            Err(e) => {
                println!("{name}: invalid: {e}");
                codes.push(exit_code(&e));
                continue;
            }
        };
        print!("{name}: n={} e={} f={}", g.n(), g.edge_count(), g.faces().len());
        match g.is_3_connected() {
            Ok(true) => {}
            Ok(false) | Err(_) => {
                println!(" not 3-connected");
                codes.push(1);
                continue;
            }
        }
        print!(" 3-connected");
        match g.essential_4_connectivity()? {
            Essential4::Ok => println!(" essentially-4-connected"),
            Essential4::Witness(s) => {
                println!(" not essentially 4-connected: separator {:?} leaves components {:?}", s.vertices, s.components);
                codes.push(1);
            }
        }
    }
    Ok(worst(codes))
}

fn summarize(name: &str, g: &EmbeddedGraph, result: &Result<(Cycle, Certificate), Error>, millis: f64) -> RunSummary {
    let n = g.n();
    let (length, certificate, steps, error) = match result {
        Ok((c, cert)) => {
            let kind = serde_json::to_value(cert.kind).unwrap();
            (c.len(), kind.as_str().unwrap_or("?").to_string(), cert.steps.len(), None)
        }
        Err(e) => (0, "error".to_string(), 0, Some(e.to_string())),
    };
    RunSummary {
        name: name.to_string(),
        n,
        length,
        bound: longcycle::theorem_bound(n),
        strengthened_bound: (n >= 16).then(|| longcycle::strengthened_bound(n)),
        certificate,
        steps,
        millis,
        error,
    }
}

fn find_one(name: &str, g: &EmbeddedGraph, args: &FindArgs, svg_path: Option<PathBuf>) -> (FindOutput, u8) {
    let mut audits = Vec::new();
    let start = Instant::now();
    let result = long_cycle_observed(g, &mut |e| {
        if let (true, Event::Audited { ctx, report }) = (args.audit, e) {
            audits.push(serde_json::json!({ "context": ctx.dump(), "report": report }));
        }
    });
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let summary = summarize(name, g, &result, millis);
    let mut code = result.as_ref().err().map_or(0, exit_code);
    if let (Some(path), Ok((c, _))) = (svg_path, &result) {
        if let Err(e) = fs::write(&path, layout::render_svg(g, Some(c))) {
            eprintln!("{}: {e}", path.display());
            code = code.max(2);
        }
    }
    let certificate = result.ok().map(|(_, cert)| cert);
    (FindOutput { summary, certificate, audits }, code)
}

fn find(args: &FindArgs) -> anyhow::Result<u8> {
    let graphs = load(&args.input)?;
    let many = graphs.len() > 1;
    let svg_for = |i: usize| {
        args.svg.as_ref().map(|p| {
            if !many {
                return p.clone();
            }
            let stem = p.file_stem().unwrap_or_default().to_string_lossy();
            p.with_file_name(format!("{stem}-{i}.svg"))
        })
    };
    let results: Vec<(Option<FindOutput>, String, u8)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, (name, g))| match g {
            Ok(g) => {
                let (out, code) = find_one(name, g, args, svg_for(i));
                (Some(out), name.clone(), code)
            }
            Err(e) => (None, format!("{name}: invalid: {e}"), exit_code(e)),
        })
        .collect();
    let mut stdout = std::io::stdout().lock();
    let mut codes = Vec::new();
    let mut json = Vec::new();
    for (out, text, code) in results {
        codes.push(code);
        match out {
            None => {
                if args.json {
                    json.push(serde_json::json!({ "name": text, "error": text }));
                } else {
                    writeln!(stdout, "{text}")?;
                }
            }
            Some(out) if args.json => json.push(serde_json::to_value(&out)?),
            Some(out) => {
                let s = &out.summary;
                match &s.error {
                    Some(e) => writeln!(stdout, "{}: n={} error: {e}", s.name, s.n)?,
                    None => writeln!(
                        stdout,
                        "{}: n={} length={} bound={}{} certificate={} steps={} time={:.2}ms",
                        s.name,
                        s.n,
                        s.length,
                        s.bound,
                        s.strengthened_bound.map(|b| format!(" strengthened={b}")).unwrap_or_default(),
                        s.certificate,
                        s.steps,
                        s.millis
                    )?,
                }
                for a in &out.audits {
                    writeln!(stdout, "  audit {}", serde_json::to_string(a)?)?;
                }
            }
        }
    }
    if args.json {
        let value = if many || args.input.all.is_some() { serde_json::Value::Array(json) } else { json.remove(0) };
        writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
    }
    Ok(worst(codes))
}

fn run_oracle(args: &OracleArgs) -> anyhow::Result<u8> {
    let graphs = load(&args.input)?;
    let results: Vec<(String, Result<oracle::OracleResult, Error>)> = graphs
        .into_par_iter()
        .map(|(name, g)| {
            let r = g.and_then(|g| oracle::circumference_bruteforce(&g, args.budget));
            (name, r)
        })
        .collect();
    let mut codes = Vec::new();
    for (name, r) in results {
        match r {
            Ok(r) => {
                let mut v = serde_json::to_value(&r)?;
                v["name"] = name.into();
                println!("{}", serde_json::to_string(&v)?);
                codes.push(0);
            }
            Err(e) => {
                println!("{}", serde_json::json!({ "name": name, "error": e.to_string() }));
                codes.push(exit_code(&e));
            }
        }
    }
    Ok(worst(codes))
}

fn write_out(out: &Option<PathBuf>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => Ok(std::io::stdout().lock().write_all(bytes)?),
    }
}

fn run_gen(args: &GenArgs) -> Outcome {
    if let Some(name) = &args.catalog {
        write_out(&args.out, gen::catalog(name)?.to_rotation_text().as_bytes())?;
    } else if let Some(name) = &args.kleetope {
        let g = gen::kleetope(&gen::catalog(name)?)?;
        write_out(&args.out, g.to_rotation_text().as_bytes())?;
    } else if let Some(path) = &args.ingest {
        let filter = Filter::parse(&args.filter).ok_or_else(|| Failure {
            code: 2,
            err: anyhow!("unknown filter {:?} (expected e4c, 3c or 4ct)", args.filter),
        })?;
        let (mut kept, summary) = gen::ingest_filtered(path, filter)?;
        if let Some(k) = args.sample {
            kept = gen::sample_members(&kept, k, args.seed);
        }
        eprintln!("read {} graphs, kept {}, wrote {}", summary.read, summary.kept, kept.len());
        write_out(&args.out, &write_planar_code(&kept)?)?;
    }
    Ok(())
}

fn audit(args: &AuditArgs) -> Outcome {
    let graphs = read_graphs(&args.file)?;
    let [g] = graphs.as_slice() else {
        return Err(Failure { code: 2, err: anyhow!("audit takes a file with exactly one graph") });
    };
    let Some(text) = &args.cycle else {
        let result = long_cycle_observed(g, &mut |e| {
            if let Event::Audited { ctx, report } = e {
                let v = serde_json::json!({ "context": ctx.dump(), "report": report });
                println!("{v}");
            }
        });
        let (c, cert) = result?;
        let kind = if cert.kind == CertificateKind::Discharging { "discharging" } else { "no audit needed" };
        eprintln!("final cycle of length {} ({kind})", c.len());
        return Ok(());
    };
    let text = if text.trim_start().starts_with("cycle:") { text.clone() } else { format!("cycle: {text}") };
    let c = Cycle::parse_text(g, &text).map_err(|e| Failure { code: 2, err: e.into() })?;
    let ctx = CycleContext::build(g, &c)?;
    let report = run_discharging(&ctx)?;
    let v = serde_json::json!({ "context": ctx.dump(), "report": report });
    println!("{}", serde_json::to_string_pretty(&v).map_err(anyhow::Error::from)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Outcome = match &cli.command {
        Command::Validate(i) => validate(i).map_err(Failure::from).and_then(code_to_outcome),
        Command::Find(a) => find(a).map_err(Failure::from).and_then(code_to_outcome),
        Command::Oracle(a) => run_oracle(a).map_err(Failure::from).and_then(code_to_outcome),
        Command::Gen(a) => run_gen(a),
        Command::Audit(a) => audit(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            if !err.to_string().is_empty() {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(code)
        }
    }
}

/// Per-graph failures were already printed; only the status is left.
fn code_to_outcome(code: u8) -> Outcome {
    match code {
        0 => Ok(()),
        code => Err(Failure { code, err: anyhow!("") }),
    }
}
