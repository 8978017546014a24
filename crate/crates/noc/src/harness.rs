//! Stream-oriented verification over graph6 corpora: filter by forbidden
//! patterns, solve each survivor exactly, and report violations of a
//! claimed bound chi <= max(c, omega).
//!
//! The harness never generates graphs; corpora come from standard
//! enumeration tools as graph6 lines on stdin or in files. Records are
//! processed in parallel but re-emitted in input order, and reports omit
//! timing fields unless asked, so identical inputs give byte-identical
//! reports regardless of worker count.

use crate::c5;
use crate::graph::Graph;
use crate::graph6;
use crate::iso;
use crate::solver::{self, Limits};
use rayon::prelude::*;
use serde::Serialize;
use std::io::BufRead;
use std::time::{Duration, Instant};

/// A graph6 line that failed to decode; the run continues past it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    pub line_no: usize,
    pub message: String,
}

/// Outcome of solving one surviving graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum RecordOutcome {
    Solved {
        omega: usize,
        chi: usize,
        violation: bool,
    },
    /// The solver cap or time budget stopped the solve; never counted as a
    /// pass.
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub line_no: usize,
    pub graph6: String,
    pub constant: u64,
    #[serde(flatten)]
    pub outcome: RecordOutcome,
    /// Milliseconds; populated only when timings are requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationRecord {
    pub fn violation(&self) -> bool {
        matches!(
            self.outcome,
            RecordOutcome::Solved { violation: true, .. }
        )
    }

    /// How far past the bound the record lands (for "worst record").
    fn excess(&self) -> i64 {
        match self.outcome {
            RecordOutcome::Solved { omega, chi, .. } => {
                chi as i64 - (self.constant.max(omega as u64)) as i64
            }
            RecordOutcome::Skipped { .. } => i64::MIN,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub scanned: usize,
    pub kept: usize,
    pub filtered: usize,
    pub malformed: usize,
    pub violations: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub input: String,
    pub patterns: Vec<String>,
    pub constant: u64,
    pub totals: Totals,
    pub worst: Option<VerificationRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<VerificationRecord>>,
    pub malformed_lines: Vec<MalformedLine>,
    /// Milliseconds; populated only when timings are requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl RunReport {
    /// 0 = clean, 1 = violations found, 2 = operational trouble
    /// (malformed lines or skipped records).
    pub fn exit_code(&self) -> i32 {
        if self.totals.violations > 0 {
            1
        } else if self.totals.malformed > 0 || self.totals.skipped > 0 {
            2
        } else {
            0
        }
    }
}

/// Options shared by the streaming entry points.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Per-record solver budget; None disables the deadline.
    pub record_budget: Option<Duration>,
    /// Worker threads; None uses the `NOC_THREADS` variable or all cores.
    pub workers: Option<usize>,
    /// Keep per-record rows in the report.
    pub keep_records: bool,
    /// Emit elapsed fields (breaks byte-identical reports across runs).
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            record_budget: Some(Duration::from_secs(10)),
            workers: None,
            keep_records: false,
            timings: false,
        }
    }
}

fn build_pool(workers: Option<usize>) -> rayon::ThreadPool {
    let threads = workers
        .or_else(|| {
            std::env::var("NOC_THREADS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0); // rayon: 0 means default
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// A decoded input line: (line number, raw text, graph).
type InputLine = (usize, String, Graph);

/// Reads graph6 lines, decoding each; blank lines are ignored.
fn read_lines(input: impl BufRead) -> std::io::Result<(Vec<InputLine>, Vec<MalformedLine>)> {
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        match graph6::decode(&line) {
            Ok(g) => good.push((line_no, line.trim_end().to_string(), g)),
            Err(e) => bad.push(MalformedLine {
                line_no,
                message: e.to_string(),
            }),
        }
    }
    Ok((good, bad))
}

/// Statistics from one filtering pass.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FilterStats {
    pub scanned: usize,
    pub kept: usize,
    pub filtered: usize,
    pub malformed_lines: Vec<MalformedLine>,
}

/// Copies exactly the pattern-free input lines to `out`, in input order.
pub fn filter_stream(
    input: impl BufRead,
    patterns: &[Graph],
    opts: &RunOptions,
    mut out: impl std::io::Write,
) -> std::io::Result<FilterStats> {
    let (good, malformed_lines) = read_lines(input)?;
    let pool = build_pool(opts.workers);
    let keep: Vec<bool> = pool.install(|| {
        good.par_iter()
            .map(|(_, _, g)| iso::is_free(g, patterns))
            .collect()
    });
    let mut stats = FilterStats {
        scanned: good.len() + malformed_lines.len(),
        malformed_lines,
        ..Default::default()
    };
    for ((_, line, _), keep) in good.iter().zip(keep) {
        if keep {
            writeln!(out, "{line}")?;
            stats.kept += 1;
        } else {
            stats.filtered += 1;
        }
    }
    Ok(stats)
}

/// Runs the falsification sweep: every pattern-free graph in the stream is
/// solved exactly and checked against chi <= max(constant, omega).
pub fn verify_family(
    input: impl BufRead,
    input_name: &str,
    patterns: &[Graph],
    pattern_names: &[String],
    constant: u64,
    opts: &RunOptions,
) -> std::io::Result<RunReport> {
    let start = Instant::now();
    let (good, malformed_lines) = read_lines(input)?;
    let pool = build_pool(opts.workers);

    let rows: Vec<(bool, Option<VerificationRecord>)> = pool.install(|| {
        good.par_iter()
            .map(|(line_no, line, g)| {
                if !iso::is_free(g, patterns) {
                    return (false, None);
                }
                let rec_start = Instant::now();
                let limits = Limits {
                    deadline: opts.record_budget.map(|b| rec_start + b),
                    ..Limits::default()
                };
                let outcome = match solve_record(g, constant, &limits) {
                    Ok(o) => o,
                    Err(e) => RecordOutcome::Skipped {
                        reason: e.to_string(),
                    },
                };
                let elapsed_ms = opts
                    .timings
                    .then(|| rec_start.elapsed().as_millis() as u64);
                (
                    true,
                    Some(VerificationRecord {
                        line_no: *line_no,
                        graph6: line.clone(),
                        constant,
                        outcome,
                        elapsed_ms,
                    }),
                )
            })
            .collect()
    });

    let mut totals = Totals {
        scanned: good.len() + malformed_lines.len(),
        malformed: malformed_lines.len(),
        ..Default::default()
    };
    let mut records = Vec::new();
    for (kept, rec) in rows {
        match rec {
            Some(rec) => {
                totals.kept += 1;
                match rec.outcome {
                    RecordOutcome::Solved { violation, .. } => {
                        if violation {
                            totals.violations += 1;
                        }
                    }
                    RecordOutcome::Skipped { .. } => totals.skipped += 1,
                }
                records.push(rec);
            }
            None => {
                debug_assert!(!kept);
                totals.filtered += 1;
            }
        }
    }
    let worst = records
        .iter()
        .max_by_key(|r| (r.excess(), std::cmp::Reverse(r.line_no)))
        .cloned();
    Ok(RunReport {
        input: input_name.to_string(),
        patterns: pattern_names.to_vec(),
        constant,
        totals,
        worst,
        records: opts.keep_records.then_some(records),
        malformed_lines,
        wall_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

fn solve_record(
    g: &Graph,
    constant: u64,
    limits: &Limits,
) -> Result<RecordOutcome, solver::SolverError> {
    let (omega, _) = solver::clique_number_within(g, limits)?;
    let (chi, _) = solver::chromatic_number_within(g, limits)?;
    Ok(RecordOutcome::Solved {
        omega,
        chi,
        violation: (chi as u64) > constant.max(omega as u64),
    })
}

// ---------------------------------------------------------------------------
// Claim sweeps
// ---------------------------------------------------------------------------

/// Aggregate outcome of running the C5 claim checks over a corpus.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ClaimSweep {
    pub n: usize,
    pub scanned: usize,
    pub malformed: usize,
    /// Graphs that are (2K2, P4 v Kn)-free.
    pub qualifying: usize,
    /// Qualifying graphs with no induced C5 (nothing to check).
    pub without_c5: usize,
    /// (graph, C5) pairs checked.
    pub c5_instances: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
    /// Reports for every failing instance; empty means the claims held.
    pub failures: Vec<c5::ClaimReport>,
}

/// For each (2K2, P4 v Kn)-free graph in the stream containing an induced
/// C5, checks the structural claims on every induced C5, deterministically.
pub fn sweep_claims(
    input: impl BufRead,
    n: usize,
    opts: &RunOptions,
) -> std::io::Result<ClaimSweep> {
    let (good, malformed_lines) = read_lines(input)?;
    let patterns = [
        crate::catalog::two_k2(),
        crate::catalog::p4_join_k(n).expect("pattern construction"),
    ];
    let pool = build_pool(opts.workers);

    struct PerGraph {
        qualifying: bool,
        had_c5: bool,
        reports: Vec<c5::ClaimReport>,
    }
    let rows: Vec<PerGraph> = pool.install(|| {
        good.par_iter()
            .map(|(_, _, g)| {
                if !iso::is_free(g, &patterns) {
                    return PerGraph {
                        qualifying: false,
                        had_c5: false,
                        reports: Vec::new(),
                    };
                }
                let cycles = c5::all_induced_c5s(g);
                let reports = cycles
                    .into_iter()
                    .map(|q| {
                        let p = c5::decompose_c5(g, q).expect("enumerated C5 is induced");
                        c5::check_claims(g, &p, n)
                    })
                    .collect::<Vec<_>>();
                PerGraph {
                    qualifying: true,
                    had_c5: !reports.is_empty(),
                    reports,
                }
            })
            .collect()
    });

    let mut sweep = ClaimSweep {
        n,
        scanned: good.len() + malformed_lines.len(),
        malformed: malformed_lines.len(),
        ..Default::default()
    };
    for row in rows {
        if !row.qualifying {
            continue;
        }
        sweep.qualifying += 1;
        if !row.had_c5 {
            sweep.without_c5 += 1;
        }
        for report in row.reports {
            sweep.c5_instances += 1;
            if report.all_hold() {
                sweep.checks_passed += 1;
            } else {
                sweep.checks_failed += 1;
                sweep.failures.push(report);
            }
        }
    }
    Ok(sweep)
}
