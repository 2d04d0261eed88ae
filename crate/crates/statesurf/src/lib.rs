//! Invariants of links computed from planar diagram codes.
//!
//! The pipeline runs from PD text to: Kauffman states, state circles and
//! state graphs; state-surface Euler characteristics, orientability, genus
//! and crosscap numbers (exact for alternating links, via a branching search
//! over small complementary regions); the Kauffman bracket by direct state
//! sum and, independently, by a spanning-subgraph expansion over the all-A
//! ribbon graph; the Jones polynomial with exact integer coefficients; and
//! two-sided bounds on crosscap number and hyperbolic volume read off the
//! extreme Jones coefficients.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so the whole API is safe to use concurrently
//! without coordination.

pub mod adams_kindred;
pub mod bounds;
pub mod corpus;
pub mod diagram;
pub mod jones;
pub mod poly;
pub mod ribbon;
pub mod state;

pub use adams_kindred::{ak_run, crosscap, genus_alternating, AkConfig, AkError, AkResult};
pub use bounds::{bounds_report, crosscap_bounds, volume_bounds, BoundsError, BoundsReport};
pub use diagram::{
    Crossing, DiagramProperties, LinkDiagram, ParseOptions, PartialDiagram, PdError, Region, Res,
};
pub use jones::{
    bracket_statesum, bracket_subgraph, coeff_identity_check, jones, jones_stats, JonesError,
    JonesPolynomial, JonesStats,
};
pub use poly::Laurent;
pub use ribbon::{build_ribbon, turaev_cellulation, turaev_genus, RibbonGraph, TuraevCellulation};
pub use state::{
    geometry_flags, is_bipartite, seifert_state, simplify_graph, special_states, state_graph,
    surface_invariants, trace_circles, CircleSet, GeometryFlags, KauffmanState, StateGraph,
    SurfaceInvariants,
};
