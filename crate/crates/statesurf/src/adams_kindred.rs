//! Branching search for maximal-Euler-characteristic state surfaces of
//! alternating diagrams, and the exact crosscap number and genus derived
//! from it.
//!
//! The expansion step looks at the smallest complementary region of the
//! partial diagram. A 1-gon is closed into a state circle directly; at a
//! bigon stage one branch is created per bigon, resolving that bigon's
//! crossings so it becomes a state circle; a triangle stage picks the
//! minimal triangle and branches two ways, closing the triangle into a
//! circle or resolving every boundary crossing the opposite way. Regions are
//! recomputed after every resolution, so 1-gons and bigons created along the
//! way are picked up. Every branch ends at a crossing-free projection, i.e.
//! a total Kauffman state; the winners are the terminal states with the most
//! circles.

use crate::diagram::{LinkDiagram, PartialDiagram, Region, Res};
use crate::state::{seifert_state, surface_invariants, KauffmanState};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AkError {
    #[error("partial diagram has no crossings")]
    NoCrossings,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("branch limit of {0} expansions exceeded")]
    BranchLimitExceeded(usize),
    #[error("parity violation: {0}")]
    Parity(String),
}

#[derive(Clone, Copy, Debug)]
pub struct AkConfig {
    /// Hard cap on branch expansions; exceeding it is an error rather than a
    /// silently truncated (and therefore unreliable) answer.
    pub max_branches: usize,
}

impl Default for AkConfig {
    fn default() -> Self {
        AkConfig {
            max_branches: 1_000_000,
        }
    }
}

/// A terminal state achieving the maximal circle count.
#[derive(Clone, Debug)]
pub struct AkWinner {
    pub state: KauffmanState,
    pub orientable: bool,
}

#[derive(Clone, Debug)]
pub struct AkResult {
    pub max_circles: usize,
    pub chi_max: i64,
    pub winners: Vec<AkWinner>,
    /// Crosscap number per the case split: with a non-orientable winner,
    /// `2 - chi - k`; with only orientable winners, `3 - chi - k`.
    pub crosscap: i64,
    /// Genus, defined whenever an orientable winner exists.
    pub genus: Option<i64>,
    /// Exactness of the crosscap/genus claims requires alternating input.
    pub alternating_input: bool,
    pub branches_explored: usize,
}

/// Smallest region of the live diagram; ties broken by the lexicographically
/// smallest normalized boundary.
pub fn min_region(p: &PartialDiagram) -> Result<Region, AkError> {
    p.faces()
        .into_iter()
        .map(|r| (r.size(), r.normalized_boundary()))
        .min()
        .map(|(_, boundary)| Region { boundary })
        .ok_or(AkError::NoCrossings)
}

/// Resolution closing every corner of the region, making its boundary a
/// state circle: a corner between slots k and k+1 is closed by A when k is
/// even and by B when k is odd. Corners of one region at the same crossing
/// always agree.
fn closing_resolutions(region: &Region) -> BTreeMap<usize, Res> {
    let mut out = BTreeMap::new();
    for &(x, corner) in &region.boundary {
        let res = if corner % 2 == 0 { Res::A } else { Res::B };
        let prev = out.insert(x, res);
        debug_assert!(prev.is_none() || prev == Some(res), "mixed-parity corners");
    }
    out
}

fn apply(p: &PartialDiagram, resolutions: &BTreeMap<usize, Res>) -> PartialDiagram {
    let mut out = p.clone();
    for (&x, &res) in resolutions {
        out = out.smooth(x, res).expect("region crossing is live");
    }
    out
}

/// One expansion step on a partial diagram with at least one crossing.
/// Returns the empty vector on a crossing-free input.
pub fn ak_expand(p: &PartialDiagram) -> Vec<PartialDiagram> {
    let faces = p.faces();
    let Some(m) = faces.iter().map(Region::size).min() else {
        return Vec::new();
    };
    match m {
        1 => {
            let region = min_region(p).expect("faces nonempty");
            vec![apply(p, &closing_resolutions(&region))]
        }
        2 => {
            let mut bigons: Vec<Vec<(usize, u8)>> = faces
                .iter()
                .filter(|r| r.size() == 2)
                .map(Region::normalized_boundary)
                .collect();
            bigons.sort();
            bigons
                .into_iter()
                .map(|boundary| apply(p, &closing_resolutions(&Region { boundary })))
                .collect()
        }
        _ => {
            // Any connected 4-valent projection has a region of size <= 3.
            debug_assert_eq!(m, 3, "minimal region of size {m}");
            let region = min_region(p).expect("faces nonempty");
            let closing = closing_resolutions(&region);
            let opposite = closing
                .iter()
                .map(|(&x, &r)| (x, r.opposite()))
                .collect::<BTreeMap<_, _>>();
            vec![apply(p, &closing), apply(p, &opposite)]
        }
    }
}

/// Run the branching search to completion and apply the crosscap/genus case
/// split to the maximal terminal states.
pub fn ak_run(d: &LinkDiagram, config: &AkConfig) -> Result<AkResult, AkError> {
    let c = d.crossing_count();
    let mut terminals: BTreeMap<KauffmanState, usize> = BTreeMap::new();
    let mut seen: HashSet<Vec<Option<Res>>> = HashSet::new();
    let mut stack = vec![PartialDiagram::new(d)];
    let mut expansions = 0usize;
    while let Some(p) = stack.pop() {
        if p.is_complete() {
            let state = KauffmanState::from_log(p.resolution_log()).expect("complete log");
            let circles = p.free_circles();
            let prev = terminals.insert(state, circles);
            debug_assert!(prev.is_none_or(|v| v == circles));
            continue;
        }
        for child in ak_expand(&p) {
            expansions += 1;
            if expansions > config.max_branches {
                return Err(AkError::BranchLimitExceeded(config.max_branches));
            }
            if seen.insert(child.resolution_log().to_vec()) {
                stack.push(child);
            }
        }
    }

    let max_circles = *terminals
        .values()
        .max()
        .expect("at least one terminal state");
    let chi_max = max_circles as i64 - c as i64;
    let winners: Vec<AkWinner> = terminals
        .iter()
        .filter(|&(_, &v)| v == max_circles)
        .map(|(state, _)| {
            let inv = surface_invariants(d, state).expect("terminal state is total");
            debug_assert_eq!(inv.chi, chi_max);
            AkWinner {
                state: state.clone(),
                orientable: inv.orientable,
            }
        })
        .collect();

    let k = d.component_count() as i64;
    let any_nonorientable = winners.iter().any(|w| !w.orientable);
    let any_orientable = winners.iter().any(|w| w.orientable);
    let crosscap = if any_nonorientable {
        2 - chi_max - k
    } else {
        3 - chi_max - k
    };
    let genus = any_orientable.then(|| (2 - chi_max - k) / 2);

    Ok(AkResult {
        max_circles,
        chi_max,
        winners,
        crosscap,
        genus,
        alternating_input: d.classify().alternating,
        branches_explored: expansions,
    })
}

/// Crosscap number of an alternating link.
pub fn crosscap(d: &LinkDiagram, config: &AkConfig) -> Result<i64, AkError> {
    if !d.classify().alternating {
        return Err(AkError::NotAlternating);
    }
    Ok(ak_run(d, config)?.crosscap)
}

/// Genus of an alternating link: the Seifert state of an alternating diagram
/// realizes it.
pub fn genus_alternating(d: &LinkDiagram) -> Result<i64, AkError> {
    if !d.classify().alternating {
        return Err(AkError::NotAlternating);
    }
    let inv = surface_invariants(d, &seifert_state(d)).expect("Seifert state is total");
    let k = d.component_count() as i64;
    if !inv.orientable {
        return Err(AkError::Parity(
            "Seifert state surface is not orientable".into(),
        ));
    }
    if (inv.chi + k) % 2 != 0 {
        return Err(AkError::Parity(format!(
            "chi + k = {} is odd for a Seifert surface",
            inv.chi + k
        )));
    }
    Ok(1 - (inv.chi + k) / 2)
}
