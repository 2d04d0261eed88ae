//! Kauffman states, state circles, state graphs and state surfaces.
//!
//! A state assigns an A- or B-resolution to every crossing. Applying it to
//! the diagram produces disjoint state circles; the state graph has one
//! vertex per circle and one edge per crossing (the half-twisted band of the
//! state surface). The surface invariants follow: chi = circles - crossings,
//! and the surface is orientable exactly when the state graph is bipartite.

use crate::diagram::{ArcLabel, LinkDiagram, Res};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("state assigns {got} crossings, diagram has {expected}")]
    IncompleteState { got: usize, expected: usize },
}

/// A total assignment of resolutions, indexed by crossing id.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct KauffmanState {
    res: Vec<Res>,
}

impl KauffmanState {
    pub fn new(res: Vec<Res>) -> KauffmanState {
        KauffmanState { res }
    }

    pub fn all_a(crossings: usize) -> KauffmanState {
        KauffmanState {
            res: vec![Res::A; crossings],
        }
    }

    pub fn all_b(crossings: usize) -> KauffmanState {
        KauffmanState {
            res: vec![Res::B; crossings],
        }
    }

    /// State whose B-resolved crossings are the set bits of `mask`.
    pub fn from_b_mask(crossings: usize, mask: u64) -> KauffmanState {
        KauffmanState {
            res: (0..crossings)
                .map(|i| if mask >> i & 1 == 1 { Res::B } else { Res::A })
                .collect(),
        }
    }

    /// Total state from a completed resolution log, if every entry is set.
    pub fn from_log(log: &[Option<Res>]) -> Option<KauffmanState> {
        log.iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(KauffmanState::new)
    }

    pub fn len(&self) -> usize {
        self.res.len()
    }

    pub fn is_empty(&self) -> bool {
        self.res.is_empty()
    }

    pub fn res(&self, crossing: usize) -> Res {
        self.res[crossing]
    }

    pub fn resolutions(&self) -> &[Res] {
        &self.res
    }

    pub fn count_b(&self) -> usize {
        self.res.iter().filter(|&&r| r == Res::B).count()
    }

    fn check(&self, d: &LinkDiagram) -> Result<(), StateError> {
        if self.res.len() != d.crossing_count() {
            return Err(StateError::IncompleteState {
                got: self.res.len(),
                expected: d.crossing_count(),
            });
        }
        Ok(())
    }
}

/// The three distinguished states of a diagram.
#[derive(Clone, Debug)]
pub struct SpecialStates {
    pub all_a: KauffmanState,
    pub all_b: KauffmanState,
    pub seifert: KauffmanState,
}

/// The circles obtained by applying a state to a diagram.
#[derive(Clone, Debug)]
pub struct CircleSet {
    circle_count: usize,
    circle_of_port: Vec<usize>,
    membership: BTreeMap<ArcLabel, usize>,
}

impl CircleSet {
    pub fn count(&self) -> usize {
        self.circle_count
    }

    /// Map from arc label to the index of the circle the arc lies on.
    pub fn membership(&self) -> &BTreeMap<ArcLabel, usize> {
        &self.membership
    }

    pub fn circle_of_arc(&self, label: ArcLabel) -> Option<usize> {
        self.membership.get(&label).copied()
    }

    pub(crate) fn circle_of_port(&self, port: usize) -> usize {
        self.circle_of_port[port]
    }
}

/// Multigraph with one vertex per state circle and one edge per crossing.
/// Loops and parallel edges are kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateGraph {
    pub vertices: usize,
    /// (circle, circle, crossing id) per edge.
    pub edges: Vec<(usize, usize, usize)>,
}

impl StateGraph {
    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v, _)| u == v)
    }
}

/// Result of collapsing parallel non-loop edges of a state graph. Loops are
/// retained: a loop is not a duplicate edge between a pair of vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleStateGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl SimpleStateGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len() + self.loops.len()
    }

    pub fn chi(&self) -> i64 {
        self.vertices as i64 - self.edge_count() as i64
    }

    pub fn is_tree(&self) -> bool {
        if !self.loops.is_empty() || self.edge_count() + 1 != self.vertices {
            return false;
        }
        // Acyclic with v - 1 edges, so tree iff connected.
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.vertices
    }
}

/// Euler characteristic, boundary data and orientability of a state surface.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurfaceInvariants {
    pub chi: i64,
    /// Boundary components = components of the underlying link.
    pub boundary_components: usize,
    pub orientable: bool,
    /// Genus for orientable surfaces, crosscap number otherwise.
    pub genus_or_crosscap: i64,
}

/// Diagrammatic criteria read off the all-A state graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeometryFlags {
    /// No 1-edge loops in the all-A state graph: sufficient for the all-A
    /// surface to be pi_1-injective in the link exterior.
    pub ga_no_one_edge_loops: bool,
    /// The simple all-A graph is a tree: holds iff the exterior fibers over
    /// the circle with the all-A surface as fiber.
    pub ga_prime_is_tree: bool,
}

/// Circles produced by resolving every crossing per the state.
pub fn trace_circles(d: &LinkDiagram, s: &KauffmanState) -> Result<CircleSet, StateError> {
    s.check(d)?;
    let n = d.crossing_count();
    let mut circle_of_port = vec![usize::MAX; 4 * n];
    let mut membership = BTreeMap::new();
    let mut count = 0usize;
    for p0 in 0..4 * n {
        if circle_of_port[p0] != usize::MAX {
            continue;
        }
        let mut p = p0;
        loop {
            let x = p / 4;
            let q = 4 * x + s.res(x).smoothing_partner(p % 4);
            circle_of_port[p] = count;
            circle_of_port[q] = count;
            membership.insert(d.arc_label_of_index(d.arc_index_of_port(p)), count);
            membership.insert(d.arc_label_of_index(d.arc_index_of_port(q)), count);
            p = d.peer(q);
            if p == p0 {
                break;
            }
        }
        count += 1;
    }
    // Crossing-free loop components are circles of every state.
    count += d.crossingless_loops();
    Ok(CircleSet {
        circle_count: count,
        circle_of_port,
        membership,
    })
}

/// State graph: one edge per crossing, joining the circles its two smoothing
/// arcs lie on.
pub fn state_graph(d: &LinkDiagram, s: &KauffmanState) -> Result<StateGraph, StateError> {
    let circles = trace_circles(d, s)?;
    let edges = (0..d.crossing_count())
        .map(|x| {
            let [(s1, _), (s2, _)] = s.res(x).cap_slot_pairs();
            let u = circles.circle_of_port(4 * x + s1);
            let v = circles.circle_of_port(4 * x + s2);
            (u, v, x)
        })
        .collect();
    Ok(StateGraph {
        vertices: circles.count(),
        edges,
    })
}

/// The orientation-respecting state: A at positive crossings, B at negative.
pub fn seifert_state(d: &LinkDiagram) -> KauffmanState {
    KauffmanState::new(
        (0..d.crossing_count())
            .map(|x| if d.sign(x) > 0 { Res::A } else { Res::B })
            .collect(),
    )
}

pub fn special_states(d: &LinkDiagram) -> SpecialStates {
    let n = d.crossing_count();
    SpecialStates {
        all_a: KauffmanState::all_a(n),
        all_b: KauffmanState::all_b(n),
        seifert: seifert_state(d),
    }
}

/// Two-colorability of the state graph; any loop is an odd cycle.
pub fn is_bipartite(g: &StateGraph) -> bool {
    let mut adj = vec![Vec::new(); g.vertices];
    for &(u, v, _) in &g.edges {
        if u == v {
            return false;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![None; g.vertices];
    for start in 0..g.vertices {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = color[u].unwrap();
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn surface_invariants(
    d: &LinkDiagram,
    s: &KauffmanState,
) -> Result<SurfaceInvariants, StateError> {
    let g = state_graph(d, s)?;
    let chi = g.vertices as i64 - d.crossing_count() as i64;
    let k = d.component_count() as i64;
    let orientable = is_bipartite(&g);
    let genus_or_crosscap = if orientable {
        debug_assert!((chi + k) % 2 == 0, "orientable surface with odd chi + k");
        (2 - chi - k) / 2
    } else {
        2 - chi - k
    };
    Ok(SurfaceInvariants {
        chi,
        boundary_components: k as usize,
        orientable,
        genus_or_crosscap,
    })
}

/// Collapse parallel non-loop edges; keep loops.
pub fn simplify_graph(g: &StateGraph) -> SimpleStateGraph {
    let mut pairs = std::collections::BTreeSet::new();
    let mut loops = Vec::new();
    for &(u, v, _) in &g.edges {
        if u == v {
            loops.push(u);
        } else {
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    SimpleStateGraph {
        vertices: g.vertices,
        edges: pairs.into_iter().collect(),
        loops,
    }
}

pub fn geometry_flags(d: &LinkDiagram) -> GeometryFlags {
    let ga =
        state_graph(d, &KauffmanState::all_a(d.crossing_count())).expect("all-A state is total");
    GeometryFlags {
        ga_no_one_edge_loops: !ga.has_loop(),
        ga_prime_is_tree: simplify_graph(&ga).is_tree(),
    }
}
