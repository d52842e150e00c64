//! `grover`: periodicity analysis of Grover walks on small graphs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 exact-arithmetic budget exceeded.

mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_core::families::{census, make_family, FamilySpec, DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP};
use grover_core::graph::io::{format_graph, read_graph_file};
use grover_core::graph::{classify, Graph};
use grover_core::linalg::charpoly_exact;
use grover_core::periodicity::{degree_condition_filter, find_period, integrality_filter, PeriodConfig, PeriodError};
use grover_core::walk::{build_transition_matrix, spectral_map_check};
use serde_json::{json, Value};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "grover", version, about = "Exact periodicity analysis of Grover walks on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph given as a file or a family spec.
    Analyze(AnalyzeArgs),
    /// Tabulate every odd-unicyclic class up to a vertex count.
    Census(CensusArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Write the graph file of a family member.
    Gen(GenArgs),
}

#[derive(Args, Clone)]
struct PeriodFlags {
    /// Largest exponent tried by the exhaustive stage.
    #[arg(long, default_value_t = 10_000)]
    k_max: u64,
    /// Tolerance for matching eigenvalues to rational angles.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Largest denominator accepted for a rational angle.
    #[arg(long, default_value_t = 512)]
    q_max: u64,
    /// Cap on the total bits of the exact entries of any power of U.
    #[arg(long, default_value_t = 1_000_000)]
    bit_budget: u64,
}

impl PeriodFlags {
    fn config(&self) -> PeriodConfig {
        PeriodConfig {
            k_max: self.k_max,
            tol: self.tol,
            q_max: self.q_max,
            bit_budget: self.bit_budget,
            ..PeriodConfig::default()
        }
    }
}

#[derive(Args, Clone)]
struct OutputFlags {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON (analyze and census always do).
    #[arg(long)]
    json: bool,
    /// Leave wall-clock timing out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph file: a header line `n m` followed by `m` lines `u v`.
    file: Option<PathBuf>,
    /// Family spec such as `cycle:5` or `twotail:3,2`.
    #[arg(long)]
    family: Option<FamilySpec>,
    /// Residual tolerance of the spectral-map check.
    #[arg(long, default_value_t = 1e-8)]
    map_tol: f64,
    #[command(flatten)]
    period: PeriodFlags,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_n: usize,
    #[command(flatten)]
    period: PeriodFlags,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Table1,
    SpectralMap,
    Identities,
    Chebyshev,
    MainTheorem,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Vertex bound for enumerating suites (defaults per suite).
    #[arg(long)]
    max_n: Option<usize>,
    /// Cycle lengths, as `a..b` or `a,b,c`.
    #[arg(long, value_parser = parse_list)]
    k: Option<IntList>,
    /// Path or tail parameters, as `a..b` or `a,b,c`.
    #[arg(long, value_parser = parse_list)]
    r: Option<IntList>,
    #[arg(long, default_value_t = 1e-8)]
    map_tol: f64,
    /// Eigenvector residual tolerance of the Chebyshev suite.
    #[arg(long, default_value_t = 1e-10)]
    residual_tol: f64,
    #[command(flatten)]
    period: PeriodFlags,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilySpec,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone)]
struct IntList(Vec<usize>);

/// `a..b` (inclusive), `a,b,c`, or a single number.
fn parse_list(s: &str) -> Result<IntList, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(IntList((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(IntList)
}

enum Failure {
    Usage(String),
    Budget(String),
    Verify,
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_timing(mut v: Value, start: Instant, flags: &OutputFlags) -> Value {
    if !flags.no_timing {
        v["timing"] = json!({ "seconds": start.elapsed().as_secs_f64() });
    }
    v
}

fn load_graph(file: &Option<PathBuf>, family: &Option<FamilySpec>) -> Result<Graph, Failure> {
    match (file, family) {
        (Some(path), None) => read_graph_file(path).map_err(|e| Failure::Usage(e.to_string())),
        (None, Some(spec)) => make_family(*spec).map_err(|e| Failure::Usage(e.to_string())),
        _ => Err(Failure::Usage("give exactly one of a graph file or --family".into())),
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let g = load_graph(&args.file, &args.family)?;
    let classification = classify(&g);
    let cp = charpoly_exact(&build_transition_matrix(&g).matrix).expect("T is square");
    let failing = integrality_filter(&cp);
    let degree_condition = classification.decomposition().map(|d| report::to_value(&degree_condition_filter(d, &g)));
    let period = find_period(&g, &args.period.config());
    if let Err(PeriodError::BudgetExceeded { .. }) = &period {
        return Err(Failure::Budget(period.unwrap_err().to_string()));
    }
    let spectral_map = spectral_map_check(&g, args.map_tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let doc = json!({
        "graph": report::graph_json(&g),
        "classification": report::classification_json(&classification),
        "charpoly": report::charpoly_json(&cp),
        "integrality": { "passes": failing.is_empty(), "failing": failing },
        "degree_condition": degree_condition,
        "period": report::period_json(&period),
        "spectral_map": report::spectral_map_json(&spectral_map),
    });
    emit(&report::render(with_timing(doc, start, &args.output)), &args.output.out)
}

fn run_census(args: &CensusArgs) -> Result<(), Failure> {
    let start = Instant::now();
    if args.max_n > MAX_ENUMERATION_CAP {
        return Err(Failure::Usage(format!("--max-n {} exceeds the hard cap {MAX_ENUMERATION_CAP}", args.max_n)));
    }
    if args.max_n > DEFAULT_ENUMERATION_CAP {
        eprintln!("warning: --max-n {} is above the default cap {DEFAULT_ENUMERATION_CAP}; this may take a long time", args.max_n);
    }
    let records = census(args.max_n, MAX_ENUMERATION_CAP, &args.period.config()).map_err(|e| Failure::Usage(e.to_string()))?;
    let odd: Vec<Value> = records
        .iter()
        .filter_map(|r| r.odd_period().map(|p| json!({ "graph": report::graph_json(&r.graph), "period": p })))
        .collect();
    let budget_hits = records
        .iter()
        .filter(|r| matches!(r.period, Err(PeriodError::BudgetExceeded { .. })))
        .count();
    let doc = json!({
        "max_n": args.max_n,
        "k_max": args.period.k_max,
        "records": records.iter().map(report::census_record_json).collect::<Vec<_>>(),
        "summary": {
            "classes": records.len(),
            "odd_periodic": odd,
            "budget_exceeded": budget_hits,
        },
    });
    emit(&report::render(with_timing(doc, start, &args.output)), &args.output.out)?;
    if budget_hits > 0 {
        return Err(Failure::Budget(format!("{budget_hits} records exceeded the bit budget")));
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let opts = verify::SuiteOptions {
        config: args.period.config(),
        max_n: args.max_n,
        cap: MAX_ENUMERATION_CAP,
        ks: args.k.clone().map(|l| l.0),
        rs: args.r.clone().map(|l| l.0),
        map_tol: args.map_tol,
        residual_tol: args.residual_tol,
    };
    let (name, result) = match args.suite {
        Suite::Table1 => ("table1", verify::table1(&opts)),
        Suite::SpectralMap => ("spectral-map", verify::spectral_map(&opts)),
        Suite::Identities => ("identities", verify::identities(&opts)),
        Suite::Chebyshev => ("chebyshev", verify::chebyshev(&opts)),
        Suite::MainTheorem => ("main-theorem", verify::main_theorem(&opts)),
    };
    let result = result.map_err(Failure::Usage)?;
    let failed: Vec<&verify::Case> = result.cases.iter().filter(|c| !c.passed).collect();
    let text = if args.output.json {
        let cases: Vec<Value> = result
            .cases
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        let doc = json!({
            "suite": name,
            "passed": result.passed(),
            "cases": cases,
            "failed": failed.len(),
            "summary": result.summary,
        });
        report::render(with_timing(doc, start, &args.output))
    } else {
        let mut s = String::new();
        for c in &failed {
            s.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
        }
        let verdict = if result.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{verdict} {name}: {} of {} cases passed", result.cases.len() - failed.len(), result.cases.len()));
        if let Some(r) = result.summary.get("max_residual") {
            s.push_str(&format!(", max residual {:e}", r.as_f64().unwrap_or(f64::NAN)));
        }
        if !args.output.no_timing {
            s.push_str(&format!(" ({:.2}s)", start.elapsed().as_secs_f64()));
        }
        s.push('\n');
        s
    };
    emit(&text, &args.output.out)?;
    if result.budget_exceeded {
        return Err(Failure::Budget("exact powers exceeded the bit budget".into()));
    }
    if result.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn gen(args: &GenArgs) -> Result<(), Failure> {
    let g = make_family(args.family).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&format_graph(&g), &args.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Census(a) => run_census(a),
        Command::Verify(a) => run_verify(a),
        Command::Gen(a) => gen(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
