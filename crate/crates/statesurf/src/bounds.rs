//! Two-sided bounds on crosscap number and hyperbolic volume from the
//! extreme Jones coefficients.
//!
//! With `T = |beta| + |beta'|` and `s` the degree span of the Jones
//! polynomial, an alternating non-torus knot satisfies
//! `ceil(T/3) + 1 <= C(K) <= min(T + 1, floor(s/2))`, and a hyperbolic
//! alternating link satisfies
//! `(v_oct / 2) (T - 2) <= vol <= 10 v_tet (T - 1)`.
//! Neither hypothesis is decidable from the diagram alone, so callers assert
//! them via flags and unasserted results carry applicability notes.

use crate::jones::JonesStats;
use num_traits::ToPrimitive;
use thiserror::Error;

/// Volume of the regular ideal octahedron, to the precision used throughout.
pub const V_OCT: f64 = 3.6638;
/// Volume of the regular ideal tetrahedron, to the same precision.
pub const V_TET: f64 = 1.0149;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("degree span {0} is negative")]
    NonIntegerSpan(i64),
    #[error("coefficient statistic does not fit in 64 bits")]
    CoefficientOverflow,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CrosscapBounds {
    pub lower: i64,
    pub upper: i64,
}

#[derive(Clone, PartialEq, Debug)]
pub struct BoundsReport {
    pub crosscap_lower: i64,
    pub crosscap_upper: i64,
    pub volume_lower: f64,
    pub volume_upper: f64,
    pub applicability_notes: Vec<String>,
}

fn t_value(st: &JonesStats) -> Result<i64, BoundsError> {
    st.t_invariant
        .to_i64()
        .ok_or(BoundsError::CoefficientOverflow)
}

/// `(ceil(T/3) + 1, min(T + 1, floor(s/2)))`.
pub fn crosscap_bounds(st: &JonesStats) -> Result<CrosscapBounds, BoundsError> {
    if st.span_quarters < 0 {
        return Err(BoundsError::NonIntegerSpan(st.span_quarters));
    }
    let t = t_value(st)?;
    let lower = (t + 2).div_euclid(3) + 1;
    // floor(s/2) with s carried in quarter t-units.
    let upper = (t + 1).min(st.span_quarters.div_euclid(8));
    Ok(CrosscapBounds { lower, upper })
}

/// `((v_oct/2)(T - 2), 10 v_tet (T - 1))`, reported as-is even when the
/// lower bound is non-positive.
pub fn volume_bounds(st: &JonesStats) -> Result<(f64, f64), BoundsError> {
    let t = t_value(st)? as f64;
    Ok((V_OCT / 2.0 * (t - 2.0), 10.0 * V_TET * (t - 1.0)))
}

/// Full report with applicability annotations.
pub fn bounds_report(
    st: &JonesStats,
    asserts_alternating_nontorus: bool,
    asserts_hyperbolic_alternating: bool,
    components: usize,
) -> Result<BoundsReport, BoundsError> {
    let cc = crosscap_bounds(st)?;
    let (vl, vu) = volume_bounds(st)?;
    let mut notes = Vec::new();
    if !asserts_alternating_nontorus {
        notes.push(
            "crosscap bounds require an alternating non-torus knot; not asserted".to_string(),
        );
    }
    if !asserts_hyperbolic_alternating {
        notes.push("volume bounds require a hyperbolic alternating link; not asserted".to_string());
    }
    if components > 1 {
        notes.push(format!(
            "{components}-component link: coefficients read on the half-integer degree grid"
        ));
    }
    if vl <= 0.0 {
        notes.push("volume lower bound is non-positive at this T".to_string());
    }
    Ok(BoundsReport {
        crosscap_lower: cc.lower,
        crosscap_upper: cc.upper,
        volume_lower: vl,
        volume_upper: vu,
        applicability_notes: notes,
    })
}
