//! Command-line front end over the library's analysis entry points.
//!
//! The binary exposes five subcommands:
//!
//! * `analyze <graph>` — walk-matrix report for one graph, as JSON;
//! * `compare <graph> <graph>` — cospectrality, isomorphism, and the
//!   transfer unitary with its level, as JSON;
//! * `snf <matrix>` — elementary divisors of a Gaussian-integer matrix,
//!   plus a unimodularity check of the transform pair;
//! * `census <n>` — the summary row for `n` vertices, with optional CSV or
//!   JSON artifacts and built-in verification of the level statements;
//! * `find-mates <n>` — every spectrum shared by two or more classes.
//!
//! Invariants:
//! - output schemas are stable: scripts may parse stdout;
//! - exact quantities print as Gaussian-integer literals, never floats;
//! - exit codes: 0 success, 1 for a failed verification, 2 for usage,
//!   parse, or input errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{self, Census, CensusOptions};
use crate::exactla::{self, det, parse_matrix, snf};
use crate::genspec::{self, Side};
use crate::mixedgraph::{parse_graph, MixedGraph};

/// Exact spectral analysis of mixed graphs over the Gaussian integers.
#[derive(Debug, Parser)]
#[command(name = "hermspec", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the walk-matrix report of one graph as JSON.
    Analyze {
        /// Graph file: an `n=<count>` header, then `u - v`, `u > v`, `u < v` lines.
        path: PathBuf,
    },
    /// Compare two graphs: cospectrality, isomorphism, transfer unitary.
    Compare {
        /// First graph file.
        path_g: PathBuf,
        /// Second graph file; must have the same vertex count.
        path_h: PathBuf,
    },
    /// Print the elementary divisors of a Gaussian-integer matrix.
    Snf {
        /// Matrix file: one row per line, comma-separated Gaussian literals.
        path: PathBuf,
    },
    /// Summarize the self-converse census on `n` vertices.
    Census {
        /// Vertex count, between 2 and 6.
        n: usize,
        /// Worker threads for the scan (default: HERMSPEC_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit the long 4^15-code scan at n=6.
        #[arg(long)]
        allow_long: bool,
        /// Write an artifact file here as well.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Row format on stdout, and artifact format for --out.
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// List every generalized spectrum shared by two or more classes.
    FindMates {
        /// Vertex count, between 2 and 6.
        n: usize,
        /// Worker threads for the scan (default: HERMSPEC_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit the long 4^15-code scan at n=6.
        #[arg(long)]
        allow_long: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

// --- dispatch -------------------------------------------------------------------

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Analyze { path } => analyze(path),
        Command::Compare { path_g, path_h } => compare(path_g, path_h),
        Command::Snf { path } => snf_command(path),
        Command::Census { n, jobs, allow_long, out, format } => {
            census_command(*n, *jobs, *allow_long, out.as_deref(), *format)
        }
        Command::FindMates { n, jobs, allow_long } => find_mates(*n, *jobs, *allow_long),
    };
    match outcome {
        Ok(()) => 0,
        Err(CliError::Violation(message)) => {
            eprintln!("hermspec: verification failed: {message}");
            1
        }
        Err(CliError::Usage(message)) => {
            eprintln!("hermspec: {message}");
            2
        }
    }
}

/// Failures split by exit code: bad input versus a failed verification.
enum CliError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1.
    Violation(String),
}

impl From<crate::mixedgraph::Error> for CliError {
    fn from(e: crate::mixedgraph::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<genspec::Error> for CliError {
    fn from(e: genspec::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<exactla::Error> for CliError {
    fn from(e: exactla::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<census::Error> for CliError {
    fn from(e: census::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Prints one line to stdout, exiting quietly if the pipe has closed.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<MixedGraph, CliError> {
    let text = read_file(path)?;
    parse_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Worker-count default: `--jobs`, else `HERMSPEC_JOBS`, else all cores.
fn job_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("HERMSPEC_JOBS").ok().and_then(|v| v.parse().ok())
    })
    .filter(|&j| j >= 1)
    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

// --- subcommands ----------------------------------------------------------------

fn analyze(path: &Path) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let mut report = genspec::report_json(&g);
    let self_converse = g.is_self_converse()?.is_some();
    report["self_converse"] = serde_json::Value::Bool(self_converse);
    emit(serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}

fn compare(path_g: &Path, path_h: &Path) -> Result<(), CliError> {
    let g = read_graph(path_g)?;
    let h = read_graph(path_h)?;
    let cospectral = genspec::r_cospectral(&g, &h)?;
    let isomorphic = g.isomorphic(&h)?.is_some();
    let mut verdict = serde_json::json!({
        "r_cospectral": cospectral,
        "isomorphic": isomorphic,
    });
    if cospectral {
        match genspec::transfer_unitary(&g, &h) {
            Ok(transfer) => {
                let n = g.n();
                let entries: Vec<Vec<String>> = (0..n)
                    .map(|r| (0..n).map(|c| transfer.u.get(r, c).to_string()).collect())
                    .collect();
                let small = transfer.level.is_one()
                    || transfer.level == crate::gaussint::GaussInt::new(1, 1);
                verdict["unitary"] = serde_json::json!(entries);
                verdict["level"] = serde_json::Value::String(transfer.level.to_string());
                verdict["level_in_{1,1+i}"] = serde_json::Value::Bool(small);
            }
            Err(genspec::Error::SingularWalk(side)) => {
                verdict["unitary"] = serde_json::Value::String("undetermined".into());
                let which = match side {
                    Side::First => path_g,
                    Side::Second => path_h,
                };
                verdict["singular_walk_matrix"] =
                    serde_json::Value::String(which.display().to_string());
            }
            Err(e) => return Err(e.into()),
        }
    }
    emit(serde_json::to_string_pretty(&verdict).expect("verdict serializes"));
    Ok(())
}

fn snf_command(path: &Path) -> Result<(), CliError> {
    let text = read_file(path)?;
    let m = parse_matrix(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let result = snf(&m)?;
    let divisors: Vec<String> = result.d.iter().map(|d| d.to_string()).collect();
    emit(divisors.join(","));
    let unimodular = det(&result.v1)?.norm() == 1u32.into() && det(&result.v2)?.norm() == 1u32.into();
    emit(format_args!("unimodular: {unimodular}"));
    if !unimodular {
        return Err(CliError::Violation("transform matrices are not unimodular".into()));
    }
    Ok(())
}

fn census_command(
    n: usize,
    jobs: Option<usize>,
    allow_long: bool,
    out: Option<&Path>,
    format: OutputFormat,
) -> Result<(), CliError> {
    let options = CensusOptions { jobs: job_count(jobs), allow_long };
    let census = Census::compute(n, &options)?;
    let row = census.table_row();
    match format {
        OutputFormat::Csv => {
            emit(format_args!(
                "{},{:.3},{:.3}",
                row.class_count, row.dgs_fraction, row.condition_fraction
            ));
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": row.n,
                "classes": row.class_count,
                "dgs_fraction": format!("{:.3}", row.dgs_fraction),
                "condition_fraction": format!("{:.3}", row.condition_fraction),
            });
            emit(serde_json::to_string_pretty(&value).expect("row serializes"));
        }
    }
    if let Some(path) = out {
        match format {
            OutputFormat::Csv => census::export_csv(&[row], path)?,
            OutputFormat::Json => census::export_json(census.buckets(), path)?,
        }
    }
    let theorem = census.verify_main_theorem();
    if !theorem.all_clear() {
        return Err(CliError::Violation(format!(
            "level checks found violations at n={n}: {theorem:?}"
        )));
    }
    let conjecture = census.verify_conjecture();
    if !conjecture.all_clear() {
        return Err(CliError::Violation(format!(
            "{} condition-satisfying classes share a spectrum at n={n}",
            conjecture.counterexamples.len()
        )));
    }
    Ok(())
}

fn find_mates(n: usize, jobs: Option<usize>, allow_long: bool) -> Result<(), CliError> {
    let options = CensusOptions { jobs: job_count(jobs), allow_long };
    let census = Census::compute(n, &options)?;
    let mates: Vec<_> = census
        .buckets()
        .iter()
        .filter(|bucket| bucket.members.len() > 1)
        .cloned()
        .collect();
    let value = census::buckets_json(&mates);
    emit(serde_json::to_string_pretty(&value).expect("buckets serialize"));
    Ok(())
}
