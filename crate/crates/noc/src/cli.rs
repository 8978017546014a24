//! The `noc` command line: thin adapters over the library modules.
//!
//! Graph arguments accept the naming grammar (`2K2`, `P4vK2`, `K4-e`) or raw
//! graph6 behind a `g6:` prefix. Exit codes: 0 clean, 1 violations found,
//! 2 operational errors (bad flags, malformed input, solver caps).

use crate::c5;
use crate::catalog;
use crate::classify::{self, KnowledgeBase};
use crate::graph::Graph;
use crate::graph6;
use crate::harness::{self, RunOptions};
use crate::names;
use crate::solver;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser, Debug)]
#[command(
    name = "noc",
    about = "Near-optimal colourability of (H1,H2)-free graph families: \
             classify pairs, materialize witnesses, verify bounds over graph6 corpora",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide near-optimal colourability for a forbidden pair
    Classify(ClassifyArgs),
    /// Exact invariants (chi, omega, perfectness) per input graph
    Solve(SolveArgs),
    /// Emit a witness-family member or a named graph as graph6
    Gen(GenArgs),
    /// Keep only the pattern-free graphs of a graph6 stream
    Filter(FilterArgs),
    /// Sweep a corpus for violations of chi <= max(c, omega)
    Verify(VerifyArgs),
    /// Decompose each input graph around an induced C5 or antihole
    Decompose(DecomposeArgs),
    /// Check the C5 structural claims over a corpus
    Claims(ClaimsArgs),
    /// Print the derived constant for (2K2, P4vKn)-free families
    Constant(ConstantArgs),
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// First forbidden pattern (expression or g6:...)
    #[arg(long)]
    h1: String,
    /// Second forbidden pattern (expression or g6:...)
    #[arg(long)]
    h2: String,
    /// Extra knowledge-base entries (tab-separated file), appended to the
    /// built-in ones
    #[arg(long)]
    kb: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Comma-separated list from: chi, omega, perfect
    #[arg(long, value_delimiter = ',', required = true)]
    what: Vec<SolveWhat>,
    /// Input file of graph6 lines, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SolveWhat {
    Chi,
    Omega,
    Perfect,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Witness family (x, y, antihole) or "named"
    #[arg(long)]
    family: GenFamily,
    /// Family index: X_k, Y_k, or the antihole on 2k+1 vertices
    #[arg(long)]
    param: Option<usize>,
    /// Graph expression, for --family named
    #[arg(long)]
    name: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenFamily {
    X,
    Y,
    Antihole,
    Named,
}

#[derive(Args, Debug)]
struct FilterArgs {
    /// Comma-separated forbidden patterns (expressions or g6:...)
    #[arg(long, value_delimiter = ',', required = true)]
    free: Vec<String>,
    #[arg(long, default_value = "-")]
    input: String,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated forbidden patterns (expressions or g6:...)
    #[arg(long, value_delimiter = ',')]
    free: Vec<String>,
    /// The constant c in chi <= max(c, omega)
    #[arg(long)]
    constant: u64,
    #[arg(long, default_value = "-")]
    input: String,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
    /// Keep per-record rows in the report
    #[arg(long)]
    records: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    /// Join-shape parameter n for the claim/bound checks
    #[arg(long)]
    n: Option<usize>,
    /// What to decompose around
    #[arg(long, value_enum, default_value_t = DecomposeKind::C5)]
    kind: DecomposeKind,
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DecomposeKind {
    C5,
    Antihole,
}

#[derive(Args, Debug)]
struct ClaimsArgs {
    /// Join-shape parameter n in (2K2, P4vKn)
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Debug)]
struct ConstantArgs {
    /// Join-shape parameter n in (2K2, P4vKn)
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct RunFlags {
    /// Per-record solver budget in seconds (0 disables)
    #[arg(long, default_value_t = 10)]
    budget_secs: u64,
    /// Worker threads (overrides NOC_THREADS; default all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Include elapsed-time fields in reports
    #[arg(long)]
    timings: bool,
}

impl RunFlags {
    fn options(&self, keep_records: bool) -> RunOptions {
        RunOptions {
            record_budget: (self.budget_secs > 0).then(|| Duration::from_secs(self.budget_secs)),
            workers: self.workers,
            keep_records,
            timings: self.timings,
        }
    }
}

/// One operational failure, rendered to stderr with exit code 2.
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

/// Parses argv and runs; returns the process exit code.
pub fn run_from_args() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("noc: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Filter(a) => cmd_filter(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Claims(a) => cmd_claims(a),
        Command::Constant(a) => cmd_constant(a),
    }
}

/// Naming grammar, or raw graph6 behind `g6:`.
fn parse_graph_arg(s: &str) -> Result<Graph, CliError> {
    match s.strip_prefix("g6:") {
        Some(code) => Ok(graph6::decode(code).map_err(|e| CliError(format!("{s:?}: {e}")))?),
        None => Ok(names::parse(s).map_err(|e| CliError(format!("{s:?}: {e}")))?),
    }
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = std::fs::File::open(path).map_err(|e| CliError(format!("{path}: {e}")))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn cmd_classify(a: ClassifyArgs) -> CliResult {
    let h1 = parse_graph_arg(&a.h1)?;
    let h2 = parse_graph_arg(&a.h2)?;
    let mut kb = KnowledgeBase::builtin();
    if let Some(path) = &a.kb {
        let mut text = String::new();
        std::fs::File::open(path)
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?
            .read_to_string(&mut text)?;
        kb.extend(KnowledgeBase::parse(&text)?);
    }
    let verdict = classify::classify(&h1, &h2, &kb);
    if a.json {
        println!("{}", serde_json::to_string_pretty(&verdict)?);
    } else {
        println!("{verdict}");
    }
    Ok(0)
}

fn cmd_solve(a: SolveArgs) -> CliResult {
    let input = open_input(&a.input)?;
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::decode(&line).map_err(|e| CliError(format!("line {}: {e}", i + 1)))?;
        let mut row = serde_json::Map::new();
        row.insert("graph6".into(), line.trim_end().into());
        for what in &a.what {
            match what {
                SolveWhat::Omega => {
                    row.insert("omega".into(), solver::clique_number(&g).0.into());
                }
                SolveWhat::Chi => {
                    let (chi, _) = solver::chromatic_number(&g)
                        .map_err(|e| CliError(format!("line {}: {e}", i + 1)))?;
                    row.insert("chi".into(), chi.into());
                }
                SolveWhat::Perfect => {
                    let perfect = solver::is_perfect_small(&g)
                        .map_err(|e| CliError(format!("line {}: {e}", i + 1)))?;
                    row.insert("perfect".into(), perfect.into());
                }
            }
        }
        rows.push(serde_json::Value::Object(row));
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        for row in rows {
            let obj = row.as_object().expect("row is an object");
            let fields: Vec<String> = obj
                .iter()
                .filter(|(k, _)| k != &"graph6")
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!(
                "{}\t{}",
                obj["graph6"].as_str().expect("graph6 is a string"),
                fields.join("\t")
            );
        }
    }
    Ok(0)
}

fn cmd_gen(a: GenArgs) -> CliResult {
    let g = match a.family {
        GenFamily::Named => {
            let name = a
                .name
                .as_deref()
                .ok_or(CliError("--family named needs --name".into()))?;
            parse_graph_arg(name)?
        }
        family => {
            let k = a
                .param
                .ok_or(CliError("--family x|y|antihole needs --param".into()))?;
            match family {
                GenFamily::X => catalog::x_family(k)?,
                GenFamily::Y => catalog::y_family(k)?,
                GenFamily::Antihole => {
                    if k < 2 {
                        return Err(CliError(
                            "antihole index must be at least 2 (order 2k+1 >= 5)".into(),
                        ));
                    }
                    catalog::odd_antihole(2 * k + 1)?
                }
                GenFamily::Named => unreachable!(),
            }
        }
    };
    println!("{}", graph6::encode(&g));
    Ok(0)
}

fn parse_patterns(exprs: &[String]) -> Result<(Vec<Graph>, Vec<String>), CliError> {
    let mut graphs = Vec::new();
    for e in exprs {
        graphs.push(parse_graph_arg(e)?);
    }
    Ok((graphs, exprs.to_vec()))
}

fn cmd_filter(a: FilterArgs) -> CliResult {
    let (patterns, _) = parse_patterns(&a.free)?;
    let input = open_input(&a.input)?;
    let stdout = std::io::stdout();
    let stats = harness::filter_stream(input, &patterns, &a.run.options(false), stdout.lock())?;
    for m in &stats.malformed_lines {
        eprintln!("noc: line {}: {}", m.line_no, m.message);
    }
    eprintln!(
        "noc: scanned {} kept {} filtered {} malformed {}",
        stats.scanned,
        stats.kept,
        stats.filtered,
        stats.malformed_lines.len()
    );
    Ok(if stats.malformed_lines.is_empty() { 0 } else { 2 })
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    let (patterns, pattern_names) = parse_patterns(&a.free)?;
    let input = open_input(&a.input)?;
    let report = harness::verify_family(
        input,
        &a.input,
        &patterns,
        &pattern_names,
        a.constant,
        &a.run.options(a.records),
    )?;
    if let Some(path) = &a.report {
        let mut f = std::fs::File::create(path)
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        writeln!(f, "{}", serde_json::to_string_pretty(&report)?)?;
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        let t = &report.totals;
        println!(
            "verify: constant={} scanned={} kept={} filtered={} malformed={} \
             violations={} skipped={}",
            report.constant, t.scanned, t.kept, t.filtered, t.malformed, t.violations, t.skipped
        );
        if let Some(worst) = &report.worst {
            if let harness::RecordOutcome::Solved { omega, chi, .. } = worst.outcome {
                println!(
                    "worst: {} omega={omega} chi={chi} (line {})",
                    worst.graph6, worst.line_no
                );
            }
        }
    }
    Ok(report.exit_code())
}

fn cmd_decompose(a: DecomposeArgs) -> CliResult {
    let input = open_input(&a.input)?;
    let mut outputs: Vec<serde_json::Value> = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::decode(&line).map_err(|e| CliError(format!("line {}: {e}", i + 1)))?;
        let value = match a.kind {
            DecomposeKind::C5 => match crate::iso::find_induced_c5(&g) {
                Some(q) => {
                    let part = c5::decompose_c5(&g, q).expect("search returned an induced C5");
                    let mut v = serde_json::to_value(&part)?;
                    if let Some(n) = a.n {
                        let report = c5::check_claims(&g, &part, n);
                        v["claims"] = serde_json::to_value(&report)?;
                    }
                    v
                }
                None => serde_json::json!({ "graph6": line.trim_end(), "no_c5": true }),
            },
            DecomposeKind::Antihole => {
                let n = a
                    .n
                    .ok_or(CliError("--kind antihole needs --n".into()))?;
                match c5::find_antihole(&g) {
                    Some(q) => serde_json::to_value(c5::decompose_antihole(&g, &q, n)?)?,
                    None => serde_json::json!({ "graph6": line.trim_end(), "no_antihole": true }),
                }
            }
        };
        outputs.push(value);
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&outputs)?);
    } else {
        for v in outputs {
            println!("{v}");
        }
    }
    Ok(0)
}

fn cmd_claims(a: ClaimsArgs) -> CliResult {
    let input = open_input(&a.input)?;
    let sweep = harness::sweep_claims(input, a.n, &a.run.options(false))?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&sweep)?);
    } else {
        println!(
            "claims: n={} scanned={} qualifying={} c5-instances={} passed={} failed={}",
            sweep.n,
            sweep.scanned,
            sweep.qualifying,
            sweep.c5_instances,
            sweep.checks_passed,
            sweep.checks_failed
        );
        for f in &sweep.failures {
            println!("failed: {} q={:?}", f.graph6, f.q);
        }
    }
    Ok(if sweep.checks_failed > 0 {
        1
    } else if sweep.malformed > 0 {
        2
    } else {
        0
    })
}

fn cmd_constant(a: ConstantArgs) -> CliResult {
    let c = classify::noc_constant(a.n)?;
    if a.json {
        let v = serde_json::json!({
            "n": c.n,
            "thresholds": c.thresholds,
            "antihole_bound": c.antihole_bound.to_string(),
            "constant": c.constant.to_string(),
            "derivation": c.derivation(),
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("n = {}", c.n);
        println!(
            "thresholds t(1..={}) = {:?}",
            c.n, c.thresholds
        );
        println!("antihole clique bound B({}) = {}", c.n, c.antihole_bound);
        println!("constant c({}) = {}", c.n, c.constant);
        println!("derivation: {}", c.derivation());
    }
    Ok(0)
}
