//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line with its measured time (run with `--nocapture` to see the
//! lines). Expected values are either fixed small cases checked by hand or
//! cross-checked against independent oracles implemented here.

use num_bigint::BigInt;
use num_traits::Signed;
use statesurf::adams_kindred::{ak_run, AkConfig};
use statesurf::bounds::{crosscap_bounds, volume_bounds};
use statesurf::corpus;
use statesurf::diagram::LinkDiagram;
use statesurf::jones::{
    bracket_statesum, bracket_subgraph, coeff_identity_check, jones, jones_stats, JonesStats,
};
use statesurf::ribbon::turaev_genus;
use statesurf::state::{state_graph, surface_invariants, KauffmanState, StateGraph};
use std::time::Instant;

fn report(criterion: u32, desc: &str, started: Instant, ok: bool, detail: String) {
    let ms = started.elapsed().as_secs_f64() * 1e3;
    let status = if ok { "PASS" } else { "FAIL" };
    println!("acceptance criterion {criterion:2} ({desc}): {status} [{ms:.1} ms]");
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn within(started: Instant, secs: f64) -> bool {
    started.elapsed().as_secs_f64() < secs
}

fn diagram(pd: &str) -> LinkDiagram {
    LinkDiagram::parse(pd).unwrap()
}

#[test]
fn criterion_01_figure_eight_jones() {
    let t0 = Instant::now();
    let j = jones(&diagram(corpus::FIGURE_EIGHT)).unwrap();
    let ok = j.to_string() == "t^-2 - t^-1 + 1 - t + t^2" && within(t0, 1.0);
    report(
        1,
        "figure-eight Jones polynomial, exact",
        t0,
        ok,
        format!("got {j}"),
    );
}

#[test]
fn criterion_02_figure_eight_surfaces() {
    let t0 = Instant::now();
    let d = diagram(corpus::FIGURE_EIGHT);
    let r = ak_run(&d, &AkConfig::default()).unwrap();
    let g = statesurf::adams_kindred::genus_alternating(&d).unwrap();
    let ok = r.crosscap == 2 && g == 1 && r.chi_max == -1 && within(t0, 1.0);
    report(
        2,
        "figure-eight crosscap 2, genus 1, chi_max -1",
        t0,
        ok,
        format!("crosscap={}, genus={g}, chi_max={}", r.crosscap, r.chi_max),
    );
}

#[test]
fn criterion_03_bracket_expansion_oracle() {
    let t0 = Instant::now();
    let diagrams = corpus::all_diagrams();
    let mut checked = 0;
    let mut non_alternating = 0;
    let mut fail = String::new();
    for (name, pd) in &diagrams {
        let d = diagram(pd);
        if d.crossing_count() > 10 {
            continue;
        }
        checked += 1;
        if !d.classify().alternating {
            non_alternating += 1;
        }
        if bracket_subgraph(&d) != bracket_statesum(&d) {
            fail = format!("bracket mismatch on {name}");
        }
    }
    let ok = fail.is_empty() && checked >= 10 && non_alternating >= 1 && within(t0, 30.0);
    report(
        3,
        "subgraph expansion equals state sum on the corpus",
        t0,
        ok,
        format!("{fail} ({checked} diagrams, {non_alternating} non-alternating)"),
    );
}

#[test]
fn criterion_04_coefficient_identities() {
    let t0 = Instant::now();
    let mut all_pair_a = true;
    let mut all_pair_b = true;
    let mut fail = String::new();
    for (name, pd) in corpus::alternating_diagrams() {
        match coeff_identity_check(&diagram(&pd)) {
            Ok(rep) => {
                if !rep.multiset_matches() {
                    fail = format!("{name}: {rep:?}");
                }
                all_pair_a &= rep.min_end_pairs_with_a();
                all_pair_b &= rep.min_end_pairs_with_b();
            }
            Err(e) => fail = format!("{name}: {e}"),
        }
    }
    let ok = fail.is_empty() && (all_pair_a || all_pair_b) && within(t0, 10.0);
    report(
        4,
        "extreme Jones coefficients match simplified state graphs",
        t0,
        ok,
        format!("{fail}; consistent pairing A={all_pair_a} B={all_pair_b}"),
    );
}

/// Independent bipartiteness oracle: a multigraph has an odd closed walk iff
/// it has an odd cycle, so check traces of odd powers of the adjacency
/// matrix (loops count on the diagonal).
fn odd_cycle_free(g: &StateGraph) -> bool {
    let n = g.vertices;
    if n == 0 {
        return true;
    }
    let mut adj = vec![vec![0i128; n]; n];
    for &(u, v, _) in &g.edges {
        if u == v {
            adj[u][u] += 1;
        } else {
            adj[u][v] += 1;
            adj[v][u] += 1;
        }
    }
    let mul = |a: &Vec<Vec<i128>>, b: &Vec<Vec<i128>>| {
        let mut c = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k] != 0 {
                    for j in 0..n {
                        c[i][j] += a[i][k] * b[k][j];
                    }
                }
            }
        }
        c
    };
    let mut power = adj.clone();
    for len in 1..=n {
        if len % 2 == 1 {
            let trace: i128 = (0..n).map(|i| power[i][i]).sum();
            if trace != 0 {
                return false;
            }
        }
        if len < n {
            power = mul(&power, &adj);
        }
    }
    true
}

#[test]
fn criterion_05_orientability_vs_odd_cycles() {
    let t0 = Instant::now();
    let mut states_checked = 0usize;
    let mut fail = String::new();
    for (name, pd) in corpus::all_diagrams() {
        let d = diagram(&pd);
        let n = d.crossing_count();
        if n > 8 {
            continue;
        }
        for mask in 0..1u64 << n {
            let s = KauffmanState::from_b_mask(n, mask);
            let g = state_graph(&d, &s).unwrap();
            let by_coloring = surface_invariants(&d, &s).unwrap().orientable;
            let by_odd_cycles = odd_cycle_free(&g);
            states_checked += 1;
            if by_coloring != by_odd_cycles {
                fail = format!("{name} mask {mask:b}: coloring={by_coloring}");
            }
        }
    }
    let ok = fail.is_empty() && within(t0, 60.0);
    report(
        5,
        "orientability by two-coloring equals odd-cycle detection",
        t0,
        ok,
        format!("{fail} ({states_checked} states)"),
    );
}

#[test]
fn criterion_06_branching_search_attains_the_maximum() {
    let t0 = Instant::now();
    let mut fail = String::new();
    for (name, pd) in corpus::alternating_diagrams() {
        let d = diagram(&pd);
        let n = d.crossing_count();
        if n > 10 {
            continue;
        }
        let r = ak_run(&d, &AkConfig::default()).unwrap();
        let best = (0..1u64 << n)
            .map(|mask| {
                statesurf::state::trace_circles(&d, &KauffmanState::from_b_mask(n, mask))
                    .unwrap()
                    .count() as i64
                    - n as i64
            })
            .max()
            .unwrap();
        if r.chi_max != best {
            fail = format!("{name}: search {} vs exhaustive {best}", r.chi_max);
        }
    }
    let ok = fail.is_empty() && within(t0, 60.0);
    report(
        6,
        "branching search matches exhaustive chi_max",
        t0,
        ok,
        fail,
    );
}

#[test]
fn criterion_07_turaev_genus_zero_for_alternating() {
    let t0 = Instant::now();
    let mut fail = String::new();
    for (name, pd) in corpus::alternating_diagrams() {
        let g = turaev_genus(&diagram(&pd));
        if g != 0 {
            fail = format!("{name}: genus {g}");
        }
    }
    report(
        7,
        "Turaev genus 0 on reduced alternating diagrams",
        t0,
        fail.is_empty(),
        fail,
    );
}

#[test]
fn criterion_08_jones_invariance() {
    let t0 = Instant::now();
    let mut fail = String::new();
    for pd in corpus::unknot_diagrams() {
        let j = jones(&diagram(&pd)).unwrap();
        if !j.is_one() {
            fail = format!("unknot diagram `{pd}` gave {j}");
        }
    }
    let variants = [
        corpus::FIGURE_EIGHT.to_string(),
        corpus::pd_with_kink(corpus::FIGURE_EIGHT, 1, true),
        corpus::pd_with_kink(corpus::FIGURE_EIGHT, 2, false),
    ];
    let polys: Vec<String> = variants
        .iter()
        .map(|pd| jones(&diagram(pd)).unwrap().to_string())
        .collect();
    if !(polys[0] == polys[1] && polys[1] == polys[2]) {
        fail = format!("figure-eight variants disagree: {polys:?}");
    }
    report(
        8,
        "Jones invariance across Reidemeister variants",
        t0,
        fail.is_empty(),
        fail,
    );
}

#[test]
fn criterion_09_crosscap_bound_containment() {
    let t0 = Instant::now();
    let mut fail = String::new();
    for (name, pd) in corpus::alternating_nontorus_knots() {
        let d = diagram(&pd);
        let st = jones_stats(&jones(&d).unwrap());
        let b = crosscap_bounds(&st).unwrap();
        let c = statesurf::adams_kindred::crosscap(&d, &AkConfig::default()).unwrap();
        if !(b.lower <= c && c <= b.upper) {
            fail = format!("{name}: crosscap {c} outside [{}, {}]", b.lower, b.upper);
        }
        if name == "4_1" && !(b.lower == 2 && b.upper == 2 && c == 2) {
            fail = format!("4_1 not pinned: [{}, {}], crosscap {c}", b.lower, b.upper);
        }
    }
    report(
        9,
        "crosscap lies within the Jones coefficient bounds",
        t0,
        fail.is_empty(),
        fail,
    );
}

#[test]
fn criterion_10_volume_bound_arithmetic() {
    let t0 = Instant::now();
    let stats_for = |t: i64| JonesStats {
        beta: BigInt::from(t),
        beta_prime: BigInt::from(0),
        t_invariant: BigInt::from(t).abs(),
        span_quarters: 16,
    };
    let (l, u) = volume_bounds(&stats_for(2)).unwrap();
    let mut ok = (l - 0.0).abs() < 1e-4 && (u - 10.149).abs() < 1e-4;
    let mut prev = volume_bounds(&stats_for(0)).unwrap();
    for t in 1..=20 {
        let cur = volume_bounds(&stats_for(t)).unwrap();
        ok &= cur.0 >= prev.0 && cur.1 >= prev.1;
        prev = cur;
    }
    report(
        10,
        "volume bounds: T=2 values and monotonicity",
        t0,
        ok,
        format!("T=2 gave ({l}, {u})"),
    );
}
