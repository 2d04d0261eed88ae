//! `statesurf`: link invariants from PD codes.
//!
//! Reads one PD line per link from a file or stdin, computes the requested
//! invariants, and writes JSON records (one per line) or CSV rows. The
//! `census` subcommand adds a summary of the built-in cross-checks.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use statesurf_cli::record::{
    csv_row, evaluate, summarize, CensusReport, ErrorKind, InvariantRecord, Limits, Task,
    CSV_HEADER, SCHEMA_VERSION,
};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "statesurf",
    about = "State-surface and Jones-polynomial invariants of links from PD codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Input file of PD lines; reads stdin when omitted. Lines starting
    /// with `#` are comments.
    file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Exit non-zero on the first input error or hypothesis violation.
    #[arg(long)]
    strict: bool,
    /// Crossing limit for both the bracket (default 24) and the branching
    /// search (default 16).
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Worker threads for multi-line inputs (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Assert the alternating non-torus hypothesis for crosscap bounds.
    #[arg(long)]
    assert_nontorus: bool,
    /// Assert the hyperbolic alternating hypothesis for volume bounds.
    #[arg(long)]
    assert_hyperbolic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and classify each line.
    Validate(CommonArgs),
    /// Jones polynomial and its coefficient statistics.
    Jones(CommonArgs),
    /// Special-state surfaces, closed-surface genus, geometry flags.
    Surfaces(CommonArgs),
    /// Maximal-chi search: chi_max, crosscap and genus (alternating links).
    Crosscap(CommonArgs),
    /// Crosscap and volume bounds from the Jones coefficients.
    Bounds(CommonArgs),
    /// Everything above, plus the built-in cross-checks.
    All(CommonArgs),
    /// Batch run over a multi-line file with a cross-check summary.
    Census(CommonArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, task, census) = match &cli.command {
        Command::Validate(a) => (a, Task::Validate, false),
        Command::Jones(a) => (a, Task::Jones, false),
        Command::Surfaces(a) => (a, Task::Surfaces, false),
        Command::Crosscap(a) => (a, Task::Crosscap, false),
        Command::Bounds(a) => (a, Task::Bounds, false),
        Command::All(a) => (a, Task::All, false),
        Command::Census(a) => (a, Task::All, true),
    };

    let text = match read_input(args) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("statesurf: {e}");
            return ExitCode::from(1);
        }
    };

    let mut limits = Limits {
        assert_nontorus: args.assert_nontorus,
        assert_hyperbolic: args.assert_hyperbolic,
        ..Limits::default()
    };
    if let Some(n) = args.max_crossings {
        limits.bracket_crossings = n;
        limits.search_crossings = n;
    }
    if let Ok(v) = std::env::var("STATESURF_MAX_BRANCHES") {
        match v.parse() {
            Ok(n) => limits.max_branches = n,
            Err(_) => {
                eprintln!("statesurf: STATESURF_MAX_BRANCHES must be an integer");
                return ExitCode::from(1);
            }
        }
    }

    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .expect("thread pool");
    let records: Vec<InvariantRecord> = pool.install(|| {
        lines
            .par_iter()
            .map(|&(line, pd)| evaluate(line, pd, task, &limits))
            .collect()
    });

    if let Err(e) = write_output(&records, args.format, census) {
        eprintln!("statesurf: {e}");
        return ExitCode::from(1);
    }
    for rec in &records {
        if let Some(err) = &rec.error {
            eprintln!("statesurf: line {}: {err}", rec.line);
        }
    }

    exit_code(&records, args.strict, census)
}

fn read_input(args: &CommonArgs) -> std::io::Result<String> {
    match &args.file {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(
    records: &[InvariantRecord],
    format: Format,
    census: bool,
) -> Result<(), Box<dyn std::error::Error>> {
    match format {
        Format::Json if census => {
            let report = CensusReport {
                schema: SCHEMA_VERSION,
                records: records.to_vec(),
                summary: summarize(records),
            };
            println!("{}", serde_json::to_string(&report)?);
        }
        Format::Json => {
            for rec in records {
                println!("{}", serde_json::to_string(rec)?);
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(CSV_HEADER)?;
            for rec in records {
                w.write_record(csv_row(rec))?;
            }
            w.flush()?;
            if census {
                let s = summarize(records);
                eprintln!(
                    "census: {} lines, {} ok, {} errors; bracket {}/{}, identities {}/{}, bounds {}/{}",
                    s.lines,
                    s.ok,
                    s.errors,
                    s.bracket_expansion.passed,
                    s.bracket_expansion.checked,
                    s.coefficient_identities.passed,
                    s.coefficient_identities.checked,
                    s.crosscap_bounds.passed,
                    s.crosscap_bounds.checked
                );
            }
        }
    }
    Ok(())
}

fn exit_code(records: &[InvariantRecord], strict: bool, census: bool) -> ExitCode {
    let has = |kind: ErrorKind| records.iter().any(|r| r.error_kind == Some(kind));
    if census && !strict {
        // Per-line errors are part of the report.
        return ExitCode::SUCCESS;
    }
    if has(ErrorKind::Parse) || has(ErrorKind::Limit) {
        return ExitCode::from(1);
    }
    if strict && has(ErrorKind::Hypothesis) {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
