//! Bundled PD codes for well-known small links, plus diagram-rewriting
//! helpers (kink insertion and mirroring) used to generate Reidemeister
//! variants for invariance checking.

use crate::diagram::{ArcLabel, LinkDiagram};

pub const UNKNOT: &str = "unknot";
/// One-crossing unknot with a positive kink.
pub const UNKNOT_KINK_POS: &str = "X[1,1,2,2]";
/// One-crossing unknot with a negative kink.
pub const UNKNOT_KINK_NEG: &str = "X[1,2,2,1]";
/// Left-handed trefoil, 3_1.
pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
/// Figure-eight knot, 4_1.
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
/// Cinquefoil (2,5) torus knot, 5_1.
pub const CINQUEFOIL: &str = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
/// Three-twist knot, 5_2.
pub const THREE_TWIST: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
/// Stevedore knot, 6_1.
pub const STEVEDORE: &str =
    "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]";
pub const KNOT_6_2: &str =
    "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]";
pub const KNOT_6_3: &str =
    "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]";
/// Turk's-head knot 8_18, as the closure of the 3-strand braid with word
/// (s1 s2^-1)^4: an alternating diagram without 1-gons or bigons.
pub const KNOT_8_18: &str = "X[12,4,1,5] X[5,6,14,13] X[6,1,2,7] X[7,8,15,14] \
                             X[8,2,3,9] X[9,10,16,15] X[10,3,4,11] X[11,12,13,16]";
/// Hopf link, 2 components.
pub const HOPF_LINK: &str = "X[4,1,3,2] X[2,3,1,4]";
/// Trefoil diagram with one crossing switched: a non-alternating
/// 3-crossing diagram of the unknot.
pub const TREFOIL_SWITCHED: &str = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";

/// Reduced alternating knot diagrams, by name.
pub fn alternating_diagrams() -> Vec<(&'static str, String)> {
    vec![
        ("3_1", TREFOIL.to_string()),
        ("4_1", FIGURE_EIGHT.to_string()),
        ("5_1", CINQUEFOIL.to_string()),
        ("5_2", THREE_TWIST.to_string()),
        ("6_1", STEVEDORE.to_string()),
        ("6_2", KNOT_6_2.to_string()),
        ("6_3", KNOT_6_3.to_string()),
        ("8_18", KNOT_8_18.to_string()),
    ]
}

/// Alternating non-torus knots (3_1 and 5_1 are torus knots).
pub fn alternating_nontorus_knots() -> Vec<(&'static str, String)> {
    alternating_diagrams()
        .into_iter()
        .filter(|(name, _)| *name != "3_1" && *name != "5_1")
        .collect()
}

/// Non-alternating diagrams built from the base codes.
pub fn non_alternating_diagrams() -> Vec<(&'static str, String)> {
    vec![
        ("unknot-3c", TREFOIL_SWITCHED.to_string()),
        ("3_1+kink", pd_with_kink(TREFOIL, 1, true)),
        // A kink only breaks alternation on an arc whose head end passes
        // under; arc 2 arrives at slot 0 of its crossing.
        ("4_1-kink", pd_with_kink(FIGURE_EIGHT, 2, false)),
        ("unknot-3-kinks", three_kink_unknot()),
    ]
}

/// Unknot diagrams with 0 to 3 kinks.
pub fn unknot_diagrams() -> Vec<String> {
    vec![
        UNKNOT.to_string(),
        UNKNOT_KINK_POS.to_string(),
        UNKNOT_KINK_NEG.to_string(),
        two_kink_unknot(),
        three_kink_unknot(),
    ]
}

pub fn two_kink_unknot() -> String {
    pd_with_kink(UNKNOT_KINK_POS, 2, false)
}

pub fn three_kink_unknot() -> String {
    pd_with_kink(&two_kink_unknot(), 1, true)
}

/// Every bundled diagram, for whole-corpus sweeps.
pub fn all_diagrams() -> Vec<(&'static str, String)> {
    let mut out: Vec<(&'static str, String)> = vec![
        ("unknot", UNKNOT.to_string()),
        ("unknot+kink", UNKNOT_KINK_POS.to_string()),
        ("unknot-kink", UNKNOT_KINK_NEG.to_string()),
        ("unknot-2-kinks", two_kink_unknot()),
        ("hopf", HOPF_LINK.to_string()),
    ];
    out.extend(alternating_diagrams());
    out.extend(non_alternating_diagrams());
    out
}

/// Insert a Reidemeister-1 kink of the given sign on an arc, returning the
/// rewritten PD text. Panics on invalid input; intended for corpus codes.
pub fn pd_with_kink(pd: &str, arc: ArcLabel, positive: bool) -> String {
    let d = LinkDiagram::parse(pd).expect("valid PD text");
    let (head_cr, head_slot) = d.arc_head(arc).expect("arc present");
    let max = d.arc_labels().iter().max().copied().unwrap_or(0);
    let loop_arc = max + 1;
    let out_arc = max + 2;
    let mut tuples: Vec<[ArcLabel; 4]> = d.crossings().iter().map(|c| c.arcs).collect();
    // The arc keeps its tail half; its head half is relabelled.
    tuples[head_cr][head_slot] = out_arc;
    let kink = if positive {
        // Over-strand enters at slot 3.
        [loop_arc, loop_arc, out_arc, arc]
    } else {
        [loop_arc, arc, out_arc, loop_arc]
    };
    tuples.push(kink);
    tuples
        .iter()
        .map(|t| format!("X[{},{},{},{}]", t[0], t[1], t[2], t[3]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Mirror image: switch every crossing by re-rooting its tuple at the old
/// over-strand's incoming arc.
pub fn mirror_pd(pd: &str) -> String {
    let d = LinkDiagram::parse(pd).expect("valid PD text");
    if d.crossing_count() == 0 {
        return UNKNOT.to_string();
    }
    d.crossings()
        .iter()
        .map(|c| {
            let t = c.arcs;
            let r = if d.sign(c.id) > 0 {
                [t[3], t[0], t[1], t[2]]
            } else {
                [t[1], t[2], t[3], t[0]]
            };
            format!("X[{},{},{},{}]", r[0], r[1], r[2], r[3])
        })
        .collect::<Vec<_>>()
        .join(" ")
}
