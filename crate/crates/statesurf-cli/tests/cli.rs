//! End-to-end tests of the `statesurf` binary: output schemas, exit codes,
//! error isolation in batch mode, round-tripping, and determinism under
//! parallelism.

use statesurf_cli::record::{CensusReport, InvariantRecord};
use std::io::Write;
use std::process::{Command, Output};

const FIG8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_statesurf"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("spawn statesurf");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout_records(out: &Output) -> Vec<InvariantRecord> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("record json"))
        .collect()
}

#[test]
fn jones_subcommand_reports_the_polynomial() {
    let out = run(&["jones"], FIG8);
    assert!(out.status.success());
    let recs = stdout_records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].jones.as_deref(), Some("t^-2 - t^-1 + 1 - t + t^2"));
    let stats = recs[0].jones_stats.as_ref().unwrap();
    assert_eq!((stats.beta, stats.beta_prime), (Some(-1), Some(-1)));
    assert_eq!(stats.span, 4.0);
}

#[test]
fn crosscap_subcommand_reports_the_surface_data() {
    let out = run(&["crosscap"], FIG8);
    assert!(out.status.success());
    let rec = &stdout_records(&out)[0];
    assert_eq!(rec.crosscap, Some(2));
    assert_eq!(rec.genus, Some(1));
    assert_eq!(rec.chi_max, Some(-1));
}

#[test]
fn validate_rejects_bad_arcs_naming_the_label() {
    // Arcs 8 and 9 each appear once; the smallest offender is reported.
    let out = run(&["validate"], "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,9]");
    assert_eq!(out.status.code(), Some(1));
    let rec = &stdout_records(&out)[0];
    let msg = rec.error.as_deref().unwrap();
    assert!(
        msg.contains("arc label 8"),
        "error should name the arc: {msg}"
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn hypothesis_violations_exit_zero_unless_strict() {
    let nonalt = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";
    let out = run(&["crosscap"], nonalt);
    assert!(out.status.success());
    let rec = &stdout_records(&out)[0];
    assert!(rec.crosscap.is_none());
    assert!(rec.error.as_deref().unwrap().contains("alternating"));

    let strict = run(&["crosscap", "--strict"], nonalt);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn census_isolates_per_line_errors() {
    let input = format!("{FIG8}\nX[1,2,3]\nunknot\n# comment\n\nX[1,1,2,2]\n");
    let out = run(&["census"], &input);
    assert!(out.status.success());
    let report: CensusReport =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(report.records.len(), 4);
    assert_eq!(report.summary.errors, 1);
    assert_eq!(report.summary.ok, 3);
    assert_eq!(report.summary.bracket_expansion.passed, 3);
    // Line numbers refer to the input file, comments included.
    assert_eq!(report.records[2].line, 3);
}

#[test]
fn census_of_empty_file_is_empty() {
    let out = run(&["census"], "");
    assert!(out.status.success());
    let report: CensusReport =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert!(report.records.is_empty());
    assert_eq!(report.summary.lines, 0);
}

#[test]
fn emitted_json_round_trips_byte_identically() {
    let out = run(&["all"], FIG8);
    let line = String::from_utf8_lossy(&out.stdout);
    let line = line.trim();
    let rec: InvariantRecord = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), line);
}

fn normalized_census(out: &Output) -> CensusReport {
    let mut report: CensusReport =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    for rec in &mut report.records {
        rec.timings.parse_ms = 0.0;
        rec.timings.compute_ms = 0.0;
    }
    report
}

#[test]
fn census_output_is_independent_of_parallelism() {
    let input = format!(
        "{FIG8}\nX[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\nunknot\nX[1,1,2,2]\nX[4,1,3,2] X[2,3,1,4]\n"
    );
    let a = run(&["census", "--jobs", "1"], &input);
    let b = run(&["census", "--jobs", "4"], &input);
    assert!(a.status.success() && b.status.success());
    // Identical records in identical order; only wall-clock timings differ.
    assert_eq!(normalized_census(&a), normalized_census(&b));
    let lines = |r: &CensusReport| r.records.iter().map(|x| x.line).collect::<Vec<_>>();
    assert_eq!(lines(&normalized_census(&a)), vec![1, 2, 3, 4, 5]);
}

#[test]
fn csv_output_has_the_documented_columns() {
    let out = run(&["all", "--format", "csv"], FIG8);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("line,input,error,crossings"));
    let row = lines.next().unwrap();
    assert!(row.contains("t^-2 - t^-1 + 1 - t + t^2"));
}

#[test]
fn crossing_limit_refuses_rather_than_truncates() {
    let out = run(&["jones", "--max-crossings", "3"], FIG8);
    assert_eq!(out.status.code(), Some(1));
    let rec = &stdout_records(&out)[0];
    assert!(rec.jones.is_none());
    assert!(rec.error.as_deref().unwrap().contains("limit"));
}

#[test]
fn branch_cap_env_var_is_honored() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_statesurf"))
        .args(["crosscap"])
        .env("STATESURF_MAX_BRANCHES", "1")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(FIG8.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let rec = &stdout_records(&out)[0];
    assert!(rec.error.as_deref().unwrap().contains("branch limit"));
}

#[test]
fn bounds_subcommand_annotates_applicability() {
    let out = run(&["bounds"], FIG8);
    let rec = &stdout_records(&out)[0];
    let bounds = rec.bounds.as_ref().unwrap();
    assert_eq!((bounds.crosscap_lower, bounds.crosscap_upper), (2, 2));
    assert!(!bounds.notes.is_empty());

    let out = run(
        &["bounds", "--assert-nontorus", "--assert-hyperbolic"],
        FIG8,
    );
    let rec = &stdout_records(&out)[0];
    let bounds = rec.bounds.as_ref().unwrap();
    // T = 2 still leaves the vanishing-lower-bound note.
    assert_eq!(bounds.notes.len(), 1);
    assert!(bounds.notes[0].contains("non-positive"));
    assert!((bounds.volume_lower - 0.0).abs() < 1e-9);
    assert!((bounds.volume_upper - 10.149).abs() < 1e-9);
}

#[test]
fn file_input_matches_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("links.pd");
    std::fs::write(&path, format!("{FIG8}\n")).unwrap();
    let from_file = Command::new(env!("CARGO_BIN_EXE_statesurf"))
        .args(["jones", path.to_str().unwrap()])
        .output()
        .unwrap();
    let from_stdin = run(&["jones"], &format!("{FIG8}\n"));
    let strip_timings = |out: &Output| {
        let mut rec: InvariantRecord =
            serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
        rec.timings.parse_ms = 0.0;
        rec.timings.compute_ms = 0.0;
        rec
    };
    assert_eq!(strip_timings(&from_file), strip_timings(&from_stdin));
}
