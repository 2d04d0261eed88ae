//! The all-A state graph as a ribbon graph, and the closed surface it
//! cellulates.
//!
//! Tracing the all-A circles gives each circle a cyclic order of crossing
//! passages; collapsing circles to vertices turns that order into a rotation
//! system for the all-A graph. The circle traversal directions are then
//! normalized so that the two passages of every crossing enter at diagonal
//! slots, which makes every band attach without a twist. Face-tracing the
//! resulting ribbon graph (or any spanning subgraph of it) counts boundary
//! circles without ever revisiting the link diagram.

use crate::diagram::{LinkDiagram, Res};
use crate::state::{state_graph, KauffmanState, StateGraph};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RibbonError {
    #[error("edge {0} is not an edge of the ribbon graph")]
    EdgeNotPresent(usize),
}

/// The all-A ribbon graph of a diagram.
///
/// Half-edge `2x` is the band end of crossing `x` on its (0,1) smoothing arc
/// and `2x+1` the end on its (2,3) arc; partners are `h ^ 1`. Rotations list
/// half-edges counterclockwise around each circle vertex in a globally
/// consistent orientation.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    edge_count: usize,
    rotations: Vec<Vec<usize>>,
    /// half-edge -> (circle, position in its rotation)
    location: Vec<(usize, usize)>,
    graph: StateGraph,
}

/// The canonical cellulation of the closed surface spanned by a diagram:
/// one 0-cell per crossing, the arcs as 1-cells, and one 2-cell per all-A or
/// all-B state circle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TuraevCellulation {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

/// Build the all-A ribbon graph with its induced rotation system.
pub fn build_ribbon(d: &LinkDiagram) -> RibbonGraph {
    let n = d.crossing_count();
    let graph = state_graph(d, &KauffmanState::all_a(n)).expect("all-A state is total");

    // Trace each all-A circle, recording crossing passages as (crossing,
    // entry slot). The initial direction of each trace is arbitrary.
    let mut circles: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut used = vec![false; 4 * n];
    for p0 in 0..4 * n {
        if used[p0] {
            continue;
        }
        let mut passages = Vec::new();
        let mut p = p0;
        loop {
            let x = p / 4;
            let s = p % 4;
            passages.push((x, s));
            let q = 4 * x + Res::A.smoothing_partner(s);
            used[p] = true;
            used[q] = true;
            p = d.peer(q);
            if p == p0 {
                break;
            }
        }
        circles.push(passages);
    }

    // Normalize directions: at each crossing the two caps must be entered at
    // slots of equal parity (diagonal across the band). Reversing a circle
    // flips the entry parity of every passage on it, so this is a parity
    // 2-coloring over the circle set. A consistent choice always exists for
    // rotation systems arising from planar diagrams.
    let mut cap_info: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // crossing -> (circle, parity)
    for (ci, passages) in circles.iter().enumerate() {
        for &(x, s) in passages {
            cap_info[x].push((ci, s % 2));
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; circles.len()];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); circles.len()];
    for info in &cap_info {
        debug_assert_eq!(info.len(), 2);
        let (c1, p1) = info[0];
        let (c2, p2) = info[1];
        let rel = p1 ^ p2;
        adj[c1].push((c2, rel));
        adj[c2].push((c1, rel));
    }
    for start in 0..circles.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let fu = flip[u].unwrap();
            for &(v, rel) in &adj[u] {
                let want = fu ^ (rel == 1);
                match flip[v] {
                    None => {
                        flip[v] = Some(want);
                        stack.push(v);
                    }
                    Some(fv) => {
                        assert_eq!(fv, want, "circle orientations cannot be reconciled");
                    }
                }
            }
        }
    }

    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(circles.len());
    for (ci, passages) in circles.iter().enumerate() {
        let mut rot: Vec<usize> = passages
            .iter()
            .map(|&(x, s)| 2 * x + if s >= 2 { 1 } else { 0 })
            .collect();
        if flip[ci] == Some(true) {
            rot.reverse();
        }
        rotations.push(rot);
    }
    // Crossing-free loops become isolated vertices.
    for _ in 0..d.crossingless_loops() {
        rotations.push(Vec::new());
    }

    let mut location = vec![(usize::MAX, usize::MAX); 2 * n];
    for (ci, rot) in rotations.iter().enumerate() {
        for (pos, &h) in rot.iter().enumerate() {
            location[h] = (ci, pos);
        }
    }

    RibbonGraph {
        edge_count: n,
        rotations,
        location,
        graph,
    }
}

impl RibbonGraph {
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Cyclic half-edge order around each circle vertex.
    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// The underlying all-A state graph.
    pub fn state_graph(&self) -> &StateGraph {
        &self.graph
    }

    /// Boundary circles of the spanning ribbon subgraph on the given edges.
    /// Edges are crossing ids; duplicates are ignored.
    pub fn subgraph_faces(&self, edges: &[usize]) -> Result<usize, RibbonError> {
        let mut included = vec![false; self.edge_count];
        for &e in edges {
            if e >= self.edge_count {
                return Err(RibbonError::EdgeNotPresent(e));
            }
            included[e] = true;
        }
        Ok(self.faces_with(&included))
    }

    /// Face count for the subgraph whose edges are the set bits of `mask`.
    pub fn faces_mask(&self, mask: u64) -> usize {
        let included: Vec<bool> = (0..self.edge_count).map(|e| mask >> e & 1 == 1).collect();
        self.faces_with(&included)
    }

    fn faces_with(&self, included: &[bool]) -> usize {
        // Face walk: land on a half-edge; if its band is present, cross to
        // the partner; either way continue to the next half-edge around the
        // current vertex. Isolated vertices each bound one circle.
        let next = |h: usize| -> usize {
            let g = if included[h / 2] { h ^ 1 } else { h };
            let (ci, pos) = self.location[g];
            self.rotations[ci][(pos + 1) % self.rotations[ci].len()]
        };
        let mut seen = vec![false; 2 * self.edge_count];
        let mut faces = self.rotations.iter().filter(|r| r.is_empty()).count();
        for h0 in 0..2 * self.edge_count {
            if seen[h0] {
                continue;
            }
            let mut h = h0;
            loop {
                seen[h] = true;
                h = next(h);
                if h == h0 {
                    break;
                }
            }
            faces += 1;
        }
        faces
    }
}

pub fn turaev_cellulation(d: &LinkDiagram) -> TuraevCellulation {
    let n = d.crossing_count();
    let va = crate::state::trace_circles(d, &KauffmanState::all_a(n))
        .expect("all-A state is total")
        .count();
    let vb = crate::state::trace_circles(d, &KauffmanState::all_b(n))
        .expect("all-B state is total")
        .count();
    let chi = (va + vb) as i64 - n as i64;
    debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
    TuraevCellulation {
        vertices: n,
        edges: 2 * n,
        faces: va + vb,
        genus: ((2 - chi) / 2) as usize,
    }
}

/// Genus of the closed orientable surface on which the diagram is alternating;
/// zero exactly for alternating diagrams of connected links.
pub fn turaev_genus(d: &LinkDiagram) -> usize {
    turaev_cellulation(d).genus
}
