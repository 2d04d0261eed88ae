//! Planar diagram codes and their combinatorial structure.
//!
//! A link diagram is given in PD notation: one token `X[a,b,c,d]` per
//! crossing, listing the four incident arc labels counterclockwise starting
//! at the incoming under-strand. The token `unknot` denotes the 0-crossing
//! diagram. Parsing validates arc pairing, connectivity and planarity (via
//! face tracing and the Euler formula), and derives strand components,
//! orientations and crossing signs.
//!
//! Slot `k` of a crossing is the position of the `k`-th entry of its tuple;
//! corner `k` is the region wedge between slots `k` and `k+1 (mod 4)`. The
//! A-resolution joins slots (0,1) and (2,3), the B-resolution joins (1,2)
//! and (3,0). A crossing is positive exactly when its over-strand enters at
//! slot 3.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use thiserror::Error;

/// Arc labels are arbitrary positive integers, each used exactly twice.
pub type ArcLabel = u32;

/// Resolution of a crossing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Res {
    A,
    B,
}

impl Res {
    pub fn opposite(self) -> Res {
        match self {
            Res::A => Res::B,
            Res::B => Res::A,
        }
    }

    /// Slot pairs joined by this resolution.
    pub(crate) fn cap_slot_pairs(self) -> [(usize, usize); 2] {
        match self {
            Res::A => [(0, 1), (2, 3)],
            Res::B => [(1, 2), (3, 0)],
        }
    }

    /// The slot reached from `slot` inside a crossing resolved this way.
    pub(crate) fn smoothing_partner(self, slot: usize) -> usize {
        match self {
            Res::A => slot ^ 1,           // 0<->1, 2<->3
            Res::B => [3, 2, 1, 0][slot], // 1<->2, 3<->0
        }
    }
}

/// A crossing with its PD tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub id: usize,
    pub arcs: [ArcLabel; 4],
}

/// A complementary region of the diagram on the projection sphere.
///
/// The boundary is the cyclic sequence of (crossing id, corner index) pairs
/// visited when walking the region; its length is the region size `m`. The
/// 0-crossing unknot has two regions with empty boundaries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Region {
    pub boundary: Vec<(usize, u8)>,
}

impl Region {
    pub fn size(&self) -> usize {
        self.boundary.len()
    }

    /// Lexicographically minimal rotation of the boundary, used as a
    /// deterministic tie-breaking key.
    pub fn normalized_boundary(&self) -> Vec<(usize, u8)> {
        let b = &self.boundary;
        if b.is_empty() {
            return Vec::new();
        }
        let mut best: Option<Vec<(usize, u8)>> = None;
        for start in 0..b.len() {
            let rot: Vec<_> = b[start..]
                .iter()
                .chain(b[..start].iter())
                .copied()
                .collect();
            if best.as_ref().is_none_or(|cur| rot < *cur) {
                best = Some(rot);
            }
        }
        best.unwrap()
    }
}

/// Classification data computed from a validated diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramProperties {
    pub connected: bool,
    pub alternating: bool,
    pub reduced: bool,
    pub component_count: usize,
    pub writhe: i64,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("arc label {label} used {count} times, expected exactly 2")]
    ArcPairingError { label: ArcLabel, count: usize },
    #[error("diagram is not planar (Euler check failed: V={v}, E={e}, F={f})")]
    NonPlanar { v: usize, e: usize, f: usize },
    #[error("diagram is not connected")]
    Disconnected,
    #[error("empty input (use the `unknot` token for the 0-crossing diagram)")]
    EmptyInput,
    #[error("arc orientations cannot be assigned consistently")]
    InconsistentOrientation,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SmoothError {
    #[error("crossing {0} is not present")]
    UnknownCrossing(usize),
}

#[derive(Clone, Copy, Default)]
pub struct ParseOptions {
    /// Interpret whitespace-only input as the 0-crossing unknot instead of
    /// rejecting it.
    pub empty_as_unknot: bool,
}

/// A validated link diagram.
///
/// Internally every arc end is a *port* `4*crossing + slot`, and `peer` is
/// the involution pairing the two ends of each arc. All derived data is
/// immutable after parsing; operations on diagrams are pure.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    crossingless_loops: usize,
    peer: Vec<usize>,
    /// Dense arc table, sorted by label.
    arc_labels: Vec<ArcLabel>,
    arc_of_port: Vec<usize>,
    /// Per dense arc: the port at which the arc arrives (its head).
    head_port: Vec<usize>,
    component_of_arc: Vec<usize>,
    component_count: usize,
    /// +1 where the over-strand enters at slot 3, -1 where it enters at slot 1.
    signs: Vec<i8>,
}

impl LinkDiagram {
    /// Parse a single PD line. Empty input is rejected; the 0-crossing
    /// unknot must be spelled with the explicit `unknot` token.
    pub fn parse(text: &str) -> Result<LinkDiagram, PdError> {
        Self::parse_with(text, ParseOptions::default())
    }

    pub fn parse_with(text: &str, opts: ParseOptions) -> Result<LinkDiagram, PdError> {
        let mut tuples: Vec<[ArcLabel; 4]> = Vec::new();
        let mut unknot_tokens = 0usize;
        for tok in text.split_whitespace() {
            if tok == "unknot" {
                unknot_tokens += 1;
            } else {
                tuples.push(parse_token(tok)?);
            }
        }
        if tuples.is_empty() && unknot_tokens == 0 {
            if opts.empty_as_unknot {
                unknot_tokens = 1;
            } else {
                return Err(PdError::EmptyInput);
            }
        }
        // A crossingless loop alongside anything else is a split diagram.
        if unknot_tokens > 1 || (unknot_tokens == 1 && !tuples.is_empty()) {
            return Err(PdError::Disconnected);
        }
        if unknot_tokens == 1 {
            return Ok(LinkDiagram {
                crossings: Vec::new(),
                crossingless_loops: 1,
                peer: Vec::new(),
                arc_labels: Vec::new(),
                arc_of_port: Vec::new(),
                head_port: Vec::new(),
                component_of_arc: Vec::new(),
                component_count: 1,
                signs: Vec::new(),
            });
        }
        Self::build(tuples)
    }

    fn build(tuples: Vec<[ArcLabel; 4]>) -> Result<LinkDiagram, PdError> {
        let n = tuples.len();
        let crossings: Vec<Crossing> = tuples
            .iter()
            .enumerate()
            .map(|(id, &arcs)| Crossing { id, arcs })
            .collect();

        // Arc pairing: each label on exactly two ports.
        let mut occurrences: BTreeMap<ArcLabel, Vec<usize>> = BTreeMap::new();
        for (x, t) in tuples.iter().enumerate() {
            for (s, &label) in t.iter().enumerate() {
                occurrences.entry(label).or_default().push(4 * x + s);
            }
        }
        for (&label, ports) in &occurrences {
            if ports.len() != 2 {
                return Err(PdError::ArcPairingError {
                    label,
                    count: ports.len(),
                });
            }
        }
        let arc_labels: Vec<ArcLabel> = occurrences.keys().copied().collect();
        let mut peer = vec![usize::MAX; 4 * n];
        let mut arc_of_port = vec![usize::MAX; 4 * n];
        for (idx, (_, ports)) in occurrences.iter().enumerate() {
            peer[ports[0]] = ports[1];
            peer[ports[1]] = ports[0];
            arc_of_port[ports[0]] = idx;
            arc_of_port[ports[1]] = idx;
        }

        // Connectivity of the underlying 4-valent graph.
        let mut reached = vec![false; n];
        let mut queue = vec![0usize];
        reached[0] = true;
        while let Some(x) = queue.pop() {
            for s in 0..4 {
                let y = peer[4 * x + s] / 4;
                if !reached[y] {
                    reached[y] = true;
                    queue.push(y);
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            return Err(PdError::Disconnected);
        }

        // Planarity: the rotation system must cellulate the sphere.
        let faces = trace_faces(n, &peer, None);
        let (v, e, f) = (n, 2 * n, faces.len());
        if v + f != e + 2 {
            return Err(PdError::NonPlanar { v, e, f });
        }

        // Strand components and orientations. Arrival-port orbits follow the
        // strand straight through each crossing; each circuit has two such
        // orbits, one per direction, and under-passages (slot 0 arrives,
        // slot 2 departs) pin the choice.
        let arc_count = arc_labels.len();
        let next_arrival = |q: usize| peer[4 * (q / 4) + (q % 4 + 2) % 4];
        let mut head_port = vec![usize::MAX; arc_count];
        let mut component_of_arc = vec![usize::MAX; arc_count];
        let mut component_count = 0usize;
        for a0 in 0..arc_count {
            if component_of_arc[a0] != usize::MAX {
                continue;
            }
            let comp = component_count;
            component_count += 1;
            let start = occurrences[&arc_labels[a0]][0];
            let mut orbit = Vec::new();
            let mut q = start;
            loop {
                orbit.push(q);
                component_of_arc[arc_of_port[q]] = comp;
                q = next_arrival(q);
                if q == start {
                    break;
                }
            }
            // Forward means "these are the true arrival ports".
            let mut forward_votes = 0usize;
            let mut reverse_votes = 0usize;
            for &p in &orbit {
                match p % 4 {
                    0 => forward_votes += 1,
                    2 => reverse_votes += 1,
                    _ => {}
                }
            }
            let forward = if forward_votes > 0 && reverse_votes > 0 {
                return Err(PdError::InconsistentOrientation);
            } else if forward_votes > 0 {
                true
            } else if reverse_votes > 0 {
                false
            } else {
                // Circuit passes over at every crossing; fall back to the arc
                // numbering, preferring the direction in which the successor
                // of the smallest label is smallest.
                let (pos, _) = orbit
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &p)| arc_labels[arc_of_port[p]])
                    .unwrap();
                let succ_fwd = arc_labels[arc_of_port[orbit[(pos + 1) % orbit.len()]]];
                let succ_rev =
                    arc_labels[arc_of_port[orbit[(pos + orbit.len() - 1) % orbit.len()]]];
                succ_fwd <= succ_rev
            };
            for &p in &orbit {
                let arrival = if forward { p } else { peer[p] };
                head_port[arc_of_port[arrival]] = arrival;
            }
        }

        // Per-crossing checks: under-strand runs slot 0 -> slot 2; the
        // over-strand arrives at exactly one of slots 1, 3.
        let mut signs = vec![0i8; n];
        for x in 0..n {
            let arrives = |s: usize| head_port[arc_of_port[4 * x + s]] == 4 * x + s;
            if !arrives(0) || arrives(2) {
                return Err(PdError::InconsistentOrientation);
            }
            signs[x] = match (arrives(1), arrives(3)) {
                (false, true) => 1,
                (true, false) => -1,
                _ => return Err(PdError::InconsistentOrientation),
            };
        }

        Ok(LinkDiagram {
            crossings,
            crossingless_loops: 0,
            peer,
            arc_labels,
            arc_of_port,
            head_port,
            component_of_arc,
            component_count,
            signs,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.arc_labels.len()
    }

    pub fn arc_labels(&self) -> &[ArcLabel] {
        &self.arc_labels
    }

    /// Number of crossing-free loop components (1 for the unknot diagram).
    pub fn crossingless_loops(&self) -> usize {
        self.crossingless_loops
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of_arc(&self, label: ArcLabel) -> Option<usize> {
        let idx = self.arc_labels.binary_search(&label).ok()?;
        Some(self.component_of_arc[idx])
    }

    /// Sign of a crossing: +1 where the over-strand enters at slot 3.
    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub(crate) fn peer(&self, port: usize) -> usize {
        self.peer[port]
    }

    pub(crate) fn arc_index_of_port(&self, port: usize) -> usize {
        self.arc_of_port[port]
    }

    pub(crate) fn arc_label_of_index(&self, idx: usize) -> ArcLabel {
        self.arc_labels[idx]
    }

    /// The (crossing, slot) where the arc arrives.
    pub fn arc_head(&self, label: ArcLabel) -> Option<(usize, usize)> {
        let idx = self.arc_labels.binary_search(&label).ok()?;
        let p = self.head_port[idx];
        Some((p / 4, p % 4))
    }

    /// The (crossing, slot) the arc departs from.
    pub fn arc_tail(&self, label: ArcLabel) -> Option<(usize, usize)> {
        let idx = self.arc_labels.binary_search(&label).ok()?;
        let p = self.peer[self.head_port[idx]];
        Some((p / 4, p % 4))
    }

    /// All complementary regions. The 0-crossing unknot reports its two
    /// disk faces as regions with empty boundary.
    pub fn faces(&self) -> Vec<Region> {
        if self.crossings.is_empty() {
            return vec![
                Region {
                    boundary: Vec::new(),
                },
                Region {
                    boundary: Vec::new(),
                },
            ];
        }
        trace_faces(self.crossing_count(), &self.peer, None)
    }

    pub fn classify(&self) -> DiagramProperties {
        // Alternating: every arc joins an under-passage to an over-passage.
        let alternating = (0..self.arc_count()).all(|a| {
            let p = self.head_port[a];
            let q = self.peer[p];
            (p % 4) % 2 != (q % 4) % 2
        });
        // Reduced: no region meets the same crossing twice. Same-region
        // corners at one crossing are always at opposite corners, which is
        // exactly a nugatory crossing.
        let reduced = self.faces().iter().all(|r| {
            let mut seen = HashSet::new();
            r.boundary.iter().all(|&(x, _)| seen.insert(x))
        });
        DiagramProperties {
            connected: true,
            alternating,
            reduced,
            component_count: self.component_count,
            writhe: self.writhe(),
        }
    }

    /// PD text for this diagram, normalized to `X[a,b,c,d]` tokens.
    pub fn to_pd_string(&self) -> String {
        if self.crossings.is_empty() {
            return "unknot".to_string();
        }
        self.crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

fn parse_token(tok: &str) -> Result<[ArcLabel; 4], PdError> {
    let err = || PdError::MalformedToken(tok.to_string());
    let inner = tok
        .strip_prefix("X[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(err)?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 4 {
        return Err(err());
    }
    let mut arcs = [0u32; 4];
    for (i, p) in parts.iter().enumerate() {
        let v: u32 = p.trim().parse().map_err(|_| err())?;
        if v == 0 {
            return Err(err());
        }
        arcs[i] = v;
    }
    Ok(arcs)
}

/// Face tracing on a rotation system. Out-darts are ports; from port `p` the
/// walk crosses the arc to `peer[p]` and turns to the next counterclockwise
/// slot. Each orbit is one region, recorded as (crossing, corner) pairs with
/// corner = arrival slot. With `live`, only listed crossings participate.
pub(crate) fn trace_faces(n: usize, peer: &[usize], live: Option<&[bool]>) -> Vec<Region> {
    let is_live = |x: usize| live.is_none_or(|l| l[x]);
    let mut visited = vec![false; 4 * n];
    let mut regions = Vec::new();
    for p0 in 0..4 * n {
        if visited[p0] || !is_live(p0 / 4) {
            continue;
        }
        let mut boundary = Vec::new();
        let mut p = p0;
        loop {
            visited[p] = true;
            let q = peer[p];
            debug_assert!(is_live(q / 4), "arc leads to a dead crossing");
            boundary.push((q / 4, (q % 4) as u8));
            p = 4 * (q / 4) + (q % 4 + 1) % 4;
            if p == p0 {
                break;
            }
        }
        regions.push(Region { boundary });
    }
    regions
}

/// A diagram in mid-resolution: some crossings smoothed away, with the
/// crossing-free circles produced so far counted in `free_circles`.
///
/// `smooth` is pure: it returns a new value and leaves the input unchanged.
#[derive(Clone, Debug)]
pub struct PartialDiagram {
    crossing_total: usize,
    live: Vec<bool>,
    peer: Vec<usize>,
    free_circles: usize,
    resolution_log: Vec<Option<Res>>,
}

impl PartialDiagram {
    pub fn new(d: &LinkDiagram) -> PartialDiagram {
        PartialDiagram {
            crossing_total: d.crossing_count(),
            live: vec![true; d.crossing_count()],
            peer: d.peer.clone(),
            free_circles: d.crossingless_loops,
            resolution_log: vec![None; d.crossing_count()],
        }
    }

    pub fn live_crossing_count(&self) -> usize {
        self.live.iter().filter(|&&l| l).count()
    }

    pub fn is_live(&self, crossing: usize) -> bool {
        crossing < self.crossing_total && self.live[crossing]
    }

    pub fn is_complete(&self) -> bool {
        self.live.iter().all(|&l| !l)
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Per original crossing: the resolution applied so far, if any.
    pub fn resolution_log(&self) -> &[Option<Res>] {
        &self.resolution_log
    }

    /// Replace `crossing` by the chosen resolution, merging or closing the
    /// incident arcs.
    pub fn smooth(&self, crossing: usize, res: Res) -> Result<PartialDiagram, SmoothError> {
        if !self.is_live(crossing) {
            return Err(SmoothError::UnknownCrossing(crossing));
        }
        let mut out = self.clone();
        for (s, t) in res.cap_slot_pairs() {
            let p = 4 * crossing + s;
            let q = 4 * crossing + t;
            let pp = out.peer[p];
            if pp == q {
                // The joined arc already ran between these two slots.
                out.free_circles += 1;
            } else {
                let qq = out.peer[q];
                out.peer[pp] = qq;
                out.peer[qq] = pp;
            }
        }
        out.live[crossing] = false;
        out.resolution_log[crossing] = Some(res);
        Ok(out)
    }

    /// Regions of the live part of the diagram.
    pub fn faces(&self) -> Vec<Region> {
        trace_faces(self.crossing_total, &self.peer, Some(&self.live))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parses_figure_eight() {
        let d = LinkDiagram::parse(corpus::FIGURE_EIGHT).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.arc_count(), 8);
        assert_eq!(d.component_count(), 1);
        // Signs found by following the strand: two positive then two negative
        // crossings in PD input order.
        assert_eq!(
            (0..4).map(|x| d.sign(x)).collect::<Vec<_>>(),
            vec![1, 1, -1, -1]
        );
    }

    #[test]
    fn parses_unknot_token_only() {
        let d = LinkDiagram::parse("unknot").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossingless_loops(), 1);
        assert_eq!(
            LinkDiagram::parse("unknot unknot").unwrap_err(),
            PdError::Disconnected
        );
        assert_eq!(
            LinkDiagram::parse("unknot X[1,1,2,2]").unwrap_err(),
            PdError::Disconnected
        );
    }

    #[test]
    fn empty_input_needs_the_flag() {
        assert_eq!(LinkDiagram::parse("").unwrap_err(), PdError::EmptyInput);
        let d = LinkDiagram::parse_with(
            "",
            ParseOptions {
                empty_as_unknot: true,
            },
        )
        .unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn rejects_bad_tokens_and_pairings() {
        assert!(matches!(
            LinkDiagram::parse("X[1,2,3]"),
            Err(PdError::MalformedToken(_))
        ));
        assert!(matches!(
            LinkDiagram::parse("Y[1,2,3,4]"),
            Err(PdError::MalformedToken(_))
        ));
        assert!(matches!(
            LinkDiagram::parse("X[1,0,2,2]"),
            Err(PdError::MalformedToken(_))
        ));
        // Arc 4 appears only once.
        assert_eq!(
            LinkDiagram::parse("X[1,1,2,3] X[2,3,4,5]").unwrap_err(),
            PdError::ArcPairingError { label: 4, count: 1 }
        );
    }

    #[test]
    fn rejects_virtual_diagram() {
        // The virtual Hopf link: a 1-crossing code whose rotation system
        // does not embed in the sphere.
        assert!(matches!(
            LinkDiagram::parse("X[1,2,1,2]"),
            Err(PdError::NonPlanar { .. })
        ));
    }

    #[test]
    fn rejects_disconnected() {
        let two_kinks = "X[1,1,2,2] X[3,3,4,4]";
        assert_eq!(
            LinkDiagram::parse(two_kinks).unwrap_err(),
            PdError::Disconnected
        );
    }

    #[test]
    fn kink_structure() {
        let d = LinkDiagram::parse("X[1,1,2,2]").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.sign(0), 1);
        let sizes: Vec<usize> = d.faces().iter().map(|r| r.size()).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2]);

        let neg = LinkDiagram::parse("X[1,2,2,1]").unwrap();
        assert_eq!(neg.sign(0), -1);
    }

    #[test]
    fn figure_eight_faces() {
        let d = LinkDiagram::parse(corpus::FIGURE_EIGHT).unwrap();
        let faces = d.faces();
        assert_eq!(faces.len(), 6); // F = 2 - V + E = 2 - 4 + 8
        let mut sizes: Vec<usize> = faces.iter().map(|r| r.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 3, 3, 3, 3]);
        assert_eq!(sizes.iter().sum::<usize>(), 16); // 4V
    }

    #[test]
    fn unknot_has_two_regions() {
        let d = LinkDiagram::parse("unknot").unwrap();
        assert_eq!(d.faces().len(), 2);
    }

    #[test]
    fn classify_examples() {
        let fig8 = LinkDiagram::parse(corpus::FIGURE_EIGHT).unwrap();
        let p = fig8.classify();
        assert!(p.connected && p.alternating && p.reduced);
        assert_eq!(p.component_count, 1);
        assert_eq!(p.writhe, 0);

        let kink = LinkDiagram::parse("X[1,1,2,2]").unwrap();
        let p = kink.classify();
        assert!(!p.reduced);
        assert_eq!(p.writhe, 1);

        let unknot = LinkDiagram::parse("unknot").unwrap();
        let p = unknot.classify();
        assert!(p.alternating);
        assert_eq!(p.writhe, 0);

        let switched = LinkDiagram::parse(corpus::TREFOIL_SWITCHED).unwrap();
        assert!(!switched.classify().alternating);
    }

    #[test]
    fn hopf_link_components() {
        let d = LinkDiagram::parse(corpus::HOPF_LINK).unwrap();
        assert_eq!(d.component_count(), 2);
        assert!(d.classify().alternating);
    }

    #[test]
    fn euler_formula_on_corpus() {
        for (name, pd) in corpus::all_diagrams() {
            let d = LinkDiagram::parse(&pd).unwrap_or_else(|e| panic!("{name}: {e}"));
            let v = d.crossing_count();
            if v == 0 {
                continue;
            }
            let f = d.faces().len();
            assert_eq!(v + f, 2 * v + 2, "Euler check for {name}");
            let corner_sum: usize = d.faces().iter().map(|r| r.size()).sum();
            assert_eq!(corner_sum, 4 * v, "corner sum for {name}");
        }
    }

    #[test]
    fn smooth_kink_both_ways() {
        let d = LinkDiagram::parse("X[1,1,2,2]").unwrap();
        let p = PartialDiagram::new(&d);
        let a = p.smooth(0, Res::A).unwrap();
        assert!(a.is_complete());
        assert_eq!(a.free_circles(), 2);
        let b = p.smooth(0, Res::B).unwrap();
        assert_eq!(b.free_circles(), 1);
        // The input is unchanged.
        assert_eq!(p.free_circles(), 0);
        assert!(p.is_live(0));
        assert!(matches!(
            a.smooth(0, Res::A),
            Err(SmoothError::UnknownCrossing(0))
        ));
    }

    #[test]
    fn smooth_order_independence() {
        let d = LinkDiagram::parse(corpus::FIGURE_EIGHT).unwrap();
        let state = [Res::A, Res::B, Res::A, Res::B];
        let orders: [[usize; 4]; 3] = [[0, 1, 2, 3], [3, 1, 0, 2], [2, 0, 3, 1]];
        let mut counts = Vec::new();
        for order in orders {
            let mut p = PartialDiagram::new(&d);
            for &x in &order {
                p = p.smooth(x, state[x]).unwrap();
            }
            assert!(p.is_complete());
            counts.push(p.free_circles());
        }
        assert!(counts.windows(2).all(|w| w[0] == w[1]));
    }
}
