//! Machine-readable invariant records, one per input line.
//!
//! Fields are null (absent) exactly when the corresponding hypothesis or
//! guard fails for that line; the `error` field then carries the reason.
//! Serialization is deterministic, so parsing an emitted record and
//! re-serializing it reproduces the bytes.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use statesurf::adams_kindred::{ak_run, genus_alternating, AkConfig, AkError};
use statesurf::bounds::bounds_report;
use statesurf::diagram::LinkDiagram;
use statesurf::jones::{
    bracket_statesum, bracket_subgraph, coeff_identity_check, jones, jones_stats,
};
use statesurf::ribbon::turaev_genus;
use statesurf::state::{geometry_flags, special_states, surface_invariants, trace_circles};
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

/// How a line failed, for exit-code mapping.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// Unparseable or invalid PD input.
    Parse,
    /// Refused: crossing count exceeds the configured limit.
    Limit,
    /// A required hypothesis does not hold for this input.
    Hypothesis,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct PropertiesOut {
    pub crossings: usize,
    pub arcs: usize,
    pub components: usize,
    pub alternating: bool,
    pub reduced: bool,
    pub writhe: i64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct JonesStatsOut {
    pub beta: Option<i64>,
    pub beta_prime: Option<i64>,
    pub t_invariant: Option<i64>,
    pub span: f64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct SurfaceOut {
    pub state: String,
    pub circles: usize,
    pub chi: i64,
    pub orientable: bool,
    pub genus_or_crosscap: i64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct GeometryOut {
    pub ga_no_one_edge_loops: bool,
    pub ga_prime_is_tree: bool,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct BoundsOut {
    pub crosscap_lower: i64,
    pub crosscap_upper: i64,
    pub volume_lower: f64,
    pub volume_upper: f64,
    pub notes: Vec<String>,
}

/// Cross-checks recorded by `all` and `census` runs.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug, Default)]
pub struct ChecksOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket_expansion_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_identities_hold: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscap_within_bounds: Option<bool>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Timings {
    pub parse_ms: f64,
    pub compute_ms: f64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct InvariantRecord {
    pub schema: u32,
    pub line: usize,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<ErrorKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertiesOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones_stats: Option<JonesStatsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscap: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub turaev_genus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surfaces: Option<Vec<SurfaceOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometryOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksOut>,
    pub timings: Timings,
}

impl InvariantRecord {
    fn empty(line: usize, input: &str) -> InvariantRecord {
        InvariantRecord {
            schema: SCHEMA_VERSION,
            line,
            input: input.to_string(),
            error: None,
            error_kind: None,
            properties: None,
            jones: None,
            jones_stats: None,
            chi_max: None,
            crosscap: None,
            genus: None,
            turaev_genus: None,
            surfaces: None,
            geometry: None,
            bounds: None,
            checks: None,
            timings: Timings {
                parse_ms: 0.0,
                compute_ms: 0.0,
            },
        }
    }

    fn fail(&mut self, kind: ErrorKind, message: impl Into<String>) {
        // Keep the first error; later stages are skipped anyway.
        if self.error.is_none() {
            self.error = Some(message.into());
            self.error_kind = Some(kind);
        }
    }
}

/// Which invariants to compute for a line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Task {
    Validate,
    Jones,
    Surfaces,
    Crosscap,
    Bounds,
    All,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Cap on crossings for the exponential bracket/Jones computations.
    pub bracket_crossings: usize,
    /// Cap on crossings for the branching search.
    pub search_crossings: usize,
    pub max_branches: usize,
    pub assert_nontorus: bool,
    pub assert_hyperbolic: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bracket_crossings: 24,
            search_crossings: 16,
            max_branches: 1_000_000,
            assert_nontorus: false,
            assert_hyperbolic: false,
        }
    }
}

/// Compute the record for one input line.
pub fn evaluate(line: usize, input: &str, task: Task, limits: &Limits) -> InvariantRecord {
    let mut rec = InvariantRecord::empty(line, input);
    let t0 = Instant::now();
    let d = match LinkDiagram::parse(input) {
        Ok(d) => d,
        Err(e) => {
            rec.timings.parse_ms = t0.elapsed().as_secs_f64() * 1e3;
            rec.fail(ErrorKind::Parse, e.to_string());
            return rec;
        }
    };
    rec.timings.parse_ms = t0.elapsed().as_secs_f64() * 1e3;
    let t1 = Instant::now();

    let props = d.classify();
    rec.properties = Some(PropertiesOut {
        crossings: d.crossing_count(),
        arcs: d.arc_count(),
        components: d.component_count(),
        alternating: props.alternating,
        reduced: props.reduced,
        writhe: props.writhe,
    });

    let want_jones = matches!(task, Task::Jones | Task::Bounds | Task::All);
    let want_surfaces = matches!(task, Task::Surfaces | Task::All);
    let want_crosscap = matches!(task, Task::Crosscap | Task::All);
    let want_bounds = matches!(task, Task::Bounds | Task::All);
    let want_checks = matches!(task, Task::All);

    let mut checks = ChecksOut::default();

    if want_jones {
        if d.crossing_count() > limits.bracket_crossings {
            rec.fail(
                ErrorKind::Limit,
                format!(
                    "{} crossings exceed the bracket limit of {}",
                    d.crossing_count(),
                    limits.bracket_crossings
                ),
            );
        } else {
            let bracket = bracket_statesum(&d);
            match jones(&d) {
                Ok(j) => {
                    let st = jones_stats(&j);
                    rec.jones = Some(j.to_string());
                    rec.jones_stats = Some(JonesStatsOut {
                        beta: st.beta.to_i64(),
                        beta_prime: st.beta_prime.to_i64(),
                        t_invariant: st.t_invariant.to_i64(),
                        span: st.span_quarters as f64 / 4.0,
                    });
                    if want_bounds {
                        match bounds_report(
                            &st,
                            limits.assert_nontorus,
                            limits.assert_hyperbolic,
                            d.component_count(),
                        ) {
                            Ok(b) => {
                                rec.bounds = Some(BoundsOut {
                                    crosscap_lower: b.crosscap_lower,
                                    crosscap_upper: b.crosscap_upper,
                                    volume_lower: b.volume_lower,
                                    volume_upper: b.volume_upper,
                                    notes: b.applicability_notes,
                                });
                            }
                            Err(e) => rec.fail(ErrorKind::Hypothesis, e.to_string()),
                        }
                    }
                    if want_checks {
                        checks.bracket_expansion_agrees = Some(bracket_subgraph(&d) == bracket);
                        if props.alternating && props.reduced {
                            checks.coefficient_identities_hold = coeff_identity_check(&d)
                                .ok()
                                .map(|rep| rep.multiset_matches() && rep.holds());
                        }
                    }
                }
                Err(e) => rec.fail(ErrorKind::Parse, e.to_string()),
            }
        }
    }

    if want_surfaces {
        let states = special_states(&d);
        let mut out = Vec::new();
        for (name, s) in [
            ("all_a", &states.all_a),
            ("all_b", &states.all_b),
            ("seifert", &states.seifert),
        ] {
            let inv = surface_invariants(&d, s).expect("special states are total");
            let circles = trace_circles(&d, s)
                .expect("special states are total")
                .count();
            out.push(SurfaceOut {
                state: name.to_string(),
                circles,
                chi: inv.chi,
                orientable: inv.orientable,
                genus_or_crosscap: inv.genus_or_crosscap,
            });
        }
        rec.surfaces = Some(out);
        rec.turaev_genus = Some(turaev_genus(&d));
        let flags = geometry_flags(&d);
        rec.geometry = Some(GeometryOut {
            ga_no_one_edge_loops: flags.ga_no_one_edge_loops,
            ga_prime_is_tree: flags.ga_prime_is_tree,
        });
    }

    if want_crosscap {
        if d.crossing_count() > limits.search_crossings {
            rec.fail(
                ErrorKind::Limit,
                format!(
                    "{} crossings exceed the search limit of {}",
                    d.crossing_count(),
                    limits.search_crossings
                ),
            );
        } else if !props.alternating {
            // Exactness needs an alternating diagram. An explicit request is
            // a hypothesis violation; in a full sweep the fields stay null.
            if task == Task::Crosscap {
                rec.fail(ErrorKind::Hypothesis, AkError::NotAlternating.to_string());
            }
        } else {
            let config = AkConfig {
                max_branches: limits.max_branches,
            };
            match ak_run(&d, &config) {
                Ok(r) => {
                    rec.chi_max = Some(r.chi_max);
                    rec.crosscap = Some(r.crosscap);
                    rec.genus = genus_alternating(&d).ok().or(r.genus);
                    if want_checks {
                        if let Some(b) = &rec.bounds {
                            if d.component_count() == 1 {
                                checks.crosscap_within_bounds = Some(
                                    b.crosscap_lower <= r.crosscap
                                        && r.crosscap <= b.crosscap_upper,
                                );
                            }
                        }
                    }
                }
                Err(e) => rec.fail(ErrorKind::Limit, e.to_string()),
            }
        }
    }

    if want_checks {
        rec.checks = Some(checks);
    }
    rec.timings.compute_ms = t1.elapsed().as_secs_f64() * 1e3;
    rec
}

/// Summary block for census runs.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug, Default)]
pub struct CheckTally {
    pub checked: usize,
    pub passed: usize,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct CensusSummary {
    pub lines: usize,
    pub ok: usize,
    pub errors: usize,
    pub bracket_expansion: CheckTally,
    pub coefficient_identities: CheckTally,
    pub crosscap_bounds: CheckTally,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct CensusReport {
    pub schema: u32,
    pub records: Vec<InvariantRecord>,
    pub summary: CensusSummary,
}

pub fn summarize(records: &[InvariantRecord]) -> CensusSummary {
    let mut summary = CensusSummary {
        lines: records.len(),
        ok: records.iter().filter(|r| r.error.is_none()).count(),
        errors: records.iter().filter(|r| r.error.is_some()).count(),
        bracket_expansion: CheckTally::default(),
        coefficient_identities: CheckTally::default(),
        crosscap_bounds: CheckTally::default(),
    };
    for rec in records {
        if let Some(checks) = &rec.checks {
            for (flag, tally) in [
                (
                    checks.bracket_expansion_agrees,
                    &mut summary.bracket_expansion,
                ),
                (
                    checks.coefficient_identities_hold,
                    &mut summary.coefficient_identities,
                ),
                (checks.crosscap_within_bounds, &mut summary.crosscap_bounds),
            ] {
                if let Some(pass) = flag {
                    tally.checked += 1;
                    if pass {
                        tally.passed += 1;
                    }
                }
            }
        }
    }
    summary
}

/// Flat CSV row for a record; `None` fields become empty cells.
pub fn csv_row(rec: &InvariantRecord) -> Vec<String> {
    fn opt<T: ToString>(v: &Option<T>) -> String {
        v.as_ref().map(|x| x.to_string()).unwrap_or_default()
    }
    let p = rec.properties.as_ref();
    let st = rec.jones_stats.as_ref();
    let b = rec.bounds.as_ref();
    let g = rec.geometry.as_ref();
    vec![
        rec.line.to_string(),
        rec.input.clone(),
        rec.error.clone().unwrap_or_default(),
        p.map(|p| p.crossings.to_string()).unwrap_or_default(),
        p.map(|p| p.components.to_string()).unwrap_or_default(),
        p.map(|p| p.alternating.to_string()).unwrap_or_default(),
        p.map(|p| p.reduced.to_string()).unwrap_or_default(),
        p.map(|p| p.writhe.to_string()).unwrap_or_default(),
        rec.jones.clone().unwrap_or_default(),
        st.map(|s| opt(&s.beta)).unwrap_or_default(),
        st.map(|s| opt(&s.beta_prime)).unwrap_or_default(),
        st.map(|s| opt(&s.t_invariant)).unwrap_or_default(),
        st.map(|s| s.span.to_string()).unwrap_or_default(),
        opt(&rec.chi_max),
        opt(&rec.crosscap),
        opt(&rec.genus),
        opt(&rec.turaev_genus),
        g.map(|g| g.ga_no_one_edge_loops.to_string())
            .unwrap_or_default(),
        g.map(|g| g.ga_prime_is_tree.to_string())
            .unwrap_or_default(),
        b.map(|b| b.crosscap_lower.to_string()).unwrap_or_default(),
        b.map(|b| b.crosscap_upper.to_string()).unwrap_or_default(),
        b.map(|b| b.volume_lower.to_string()).unwrap_or_default(),
        b.map(|b| b.volume_upper.to_string()).unwrap_or_default(),
    ]
}

pub const CSV_HEADER: [&str; 23] = [
    "line",
    "input",
    "error",
    "crossings",
    "components",
    "alternating",
    "reduced",
    "writhe",
    "jones",
    "beta",
    "beta_prime",
    "t_invariant",
    "span",
    "chi_max",
    "crosscap",
    "genus",
    "turaev_genus",
    "ga_no_one_edge_loops",
    "ga_prime_is_tree",
    "crosscap_lower",
    "crosscap_upper",
    "volume_lower",
    "volume_upper",
];
