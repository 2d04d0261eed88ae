//! Kauffman bracket and Jones polynomial.
//!
//! The bracket is computed two independent ways: the direct state sum over
//! all resolutions of the diagram, and the spanning-subgraph expansion over
//! the all-A ribbon graph. The two must agree exactly on every diagram; the
//! test suites enforce this. Normalizing by the writhe and substituting
//! `A = q^-1` with `q = t^(1/4)` gives the Jones polynomial.

use crate::diagram::LinkDiagram;
use crate::poly::Laurent;
use crate::ribbon::build_ribbon;
use crate::state::{simplify_graph, state_graph, trace_circles, KauffmanState};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;
use thiserror::Error;

/// Bracket polynomials live in `Z[A, A^-1]`.
pub type BracketPoly = Laurent<'A'>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("Jones exponents break the knot/link parity pattern (residues mod 4: {residues:?}, expected {expected})")]
    ExponentParity { residues: Vec<i64>, expected: i64 },
    #[error("diagram is not reduced alternating")]
    HypothesisViolated,
}

fn delta_powers(max: usize) -> Vec<BracketPoly> {
    // delta = -A^2 - A^-2, the loop value of the bracket.
    let delta = BracketPoly::from_terms([(2, -1), (-2, -1)]);
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(BracketPoly::one());
    for i in 1..=max {
        let next = &pows[i - 1] * &delta;
        pows.push(next);
    }
    pows
}

/// Kauffman bracket as the sum over all 2^c states of
/// `A^(#A - #B) * (-A^2 - A^-2)^(circles - 1)`.
pub fn bracket_statesum(d: &LinkDiagram) -> BracketPoly {
    let n = d.crossing_count();
    assert!(n < 64, "state sum over 2^{n} states is not tractable");
    let pows = delta_powers(n + d.crossingless_loops() + 1);
    let mut acc = BracketPoly::zero();
    for mask in 0..1u64 << n {
        let s = KauffmanState::from_b_mask(n, mask);
        let v = trace_circles(d, &s).expect("mask state is total").count();
        let b = mask.count_ones() as i64;
        let term = pows[v - 1].shifted(n as i64 - 2 * b);
        acc += &term;
    }
    acc
}

/// Kauffman bracket as the spanning-subgraph expansion
/// `sum over G of A^(e(G_A) - 2 e(G)) * (-A^2 - A^-2)^(f(G) - 1)`
/// with `f` counted on the all-A ribbon graph.
pub fn bracket_subgraph(d: &LinkDiagram) -> BracketPoly {
    let n = d.crossing_count();
    assert!(
        n < 64,
        "subgraph expansion over 2^{n} subsets is not tractable"
    );
    let r = build_ribbon(d);
    let pows = delta_powers(n + d.crossingless_loops() + 1);
    let mut acc = BracketPoly::zero();
    for mask in 0..1u64 << n {
        let f = r.faces_mask(mask);
        let e = mask.count_ones() as i64;
        let term = pows[f - 1].shifted(n as i64 - 2 * e);
        acc += &term;
    }
    acc
}

/// Jones polynomial in `q = t^(1/4)`. Exponents are multiples of 4 for knots
/// and congruent to 2 mod 4 for even-component links; the Display form is in
/// `t`, with half-integer exponents for even-component links.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesPolynomial {
    poly: Laurent<'q'>,
    components: usize,
}

impl JonesPolynomial {
    pub fn as_laurent(&self) -> &Laurent<'q'> {
        &self.poly
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn is_one(&self) -> bool {
        self.poly == Laurent::one()
    }

    /// Evaluate at `t -> 1/t` (the Jones polynomial of the mirror link).
    pub fn mirrored(&self) -> JonesPolynomial {
        JonesPolynomial {
            poly: self.poly.map_var(|e| -e),
            components: self.components,
        }
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.poly.terms() {
            let negative = c < &BigInt::from(0);
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs == BigInt::from(1);
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !unit {
                write!(f, "{abs}")?;
            }
            if e % 4 == 0 {
                match e / 4 {
                    1 => write!(f, "t")?,
                    n => write!(f, "t^{n}")?,
                }
            } else if e % 2 == 0 {
                write!(f, "t^({}/2)", e / 2)?;
            } else {
                write!(f, "t^({e}/4)")?;
            }
        }
        Ok(())
    }
}

/// Bracket, writhe normalization `(-A)^(-3w)`, substitution `A = q^-1`.
pub fn jones(d: &LinkDiagram) -> Result<JonesPolynomial, JonesError> {
    let bracket = bracket_statesum(d);
    jones_from_bracket(d, &bracket)
}

pub(crate) fn jones_from_bracket(
    d: &LinkDiagram,
    bracket: &BracketPoly,
) -> Result<JonesPolynomial, JonesError> {
    let w = d.writhe();
    let shifted = bracket.shifted(-3 * w);
    let signed = if w.rem_euclid(2) == 1 {
        -&shifted
    } else {
        shifted
    };
    let poly: Laurent<'q'> = signed.map_var(|e| -e);

    let k = d.component_count();
    let expected = (2 * (k as i64 - 1)).rem_euclid(4);
    let mut residues: Vec<i64> = poly.terms().map(|(e, _)| e.rem_euclid(4)).collect();
    residues.dedup();
    if residues.iter().any(|&r| r != expected) {
        return Err(JonesError::ExponentParity { residues, expected });
    }
    Ok(JonesPolynomial {
        poly,
        components: k,
    })
}

/// Second and penultimate coefficients of the Jones polynomial, their
/// absolute sum, and the degree span.
///
/// Coefficients are read on the integer t-degree grid anchored at the
/// extreme degrees: `beta` sits one t-unit above the minimal degree and
/// `beta_prime` one below the maximal degree, with absent degrees counting
/// as zero. Degrees are carried in quarter units of t (exponents of q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesStats {
    pub beta: BigInt,
    pub beta_prime: BigInt,
    /// `|beta| + |beta_prime|`.
    pub t_invariant: BigInt,
    /// Degree span of the polynomial, in quarters of a t-unit.
    pub span_quarters: i64,
}

impl JonesStats {
    /// Degree span in t-units (an integer for any single link's polynomial).
    pub fn span_t(&self) -> f64 {
        self.span_quarters as f64 / 4.0
    }
}

pub fn jones_stats(j: &JonesPolynomial) -> JonesStats {
    let p = j.as_laurent();
    let (min, max) = match (p.min_exp(), p.max_exp()) {
        (Some(a), Some(b)) => (a, b),
        _ => (0, 0),
    };
    let beta = p.coeff(min + 4);
    let beta_prime = p.coeff(max - 4);
    let t_invariant = beta.abs() + beta_prime.abs();
    JonesStats {
        beta,
        beta_prime,
        t_invariant,
        span_quarters: max - min,
    }
}

/// Comparison of the extreme Jones coefficients against the Euler
/// characteristics of the simplified all-A and all-B state graphs, for a
/// reduced alternating diagram. Both end pairings are evaluated; the
/// diagrams in this crate's corpus all satisfy the pairing that matches the
/// min-degree end with the all-A graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffIdentityReport {
    pub beta_abs: BigInt,
    pub beta_prime_abs: BigInt,
    pub one_minus_chi_a_prime: i64,
    pub one_minus_chi_b_prime: i64,
}

impl CoeffIdentityReport {
    /// `|beta| = 1 - chi(G'_A)` and `|beta'| = 1 - chi(G'_B)`.
    pub fn min_end_pairs_with_a(&self) -> bool {
        self.beta_abs == BigInt::from(self.one_minus_chi_a_prime)
            && self.beta_prime_abs == BigInt::from(self.one_minus_chi_b_prime)
    }

    /// `|beta| = 1 - chi(G'_B)` and `|beta'| = 1 - chi(G'_A)`.
    pub fn min_end_pairs_with_b(&self) -> bool {
        self.beta_abs == BigInt::from(self.one_minus_chi_b_prime)
            && self.beta_prime_abs == BigInt::from(self.one_minus_chi_a_prime)
    }

    pub fn holds(&self) -> bool {
        self.min_end_pairs_with_a() || self.min_end_pairs_with_b()
    }

    /// Multiset equality `{|beta|, |beta'|} = {1 - chi(G'_A), 1 - chi(G'_B)}`.
    pub fn multiset_matches(&self) -> bool {
        let mut lhs = [self.beta_abs.clone(), self.beta_prime_abs.clone()];
        let mut rhs = [
            BigInt::from(self.one_minus_chi_a_prime),
            BigInt::from(self.one_minus_chi_b_prime),
        ];
        lhs.sort();
        rhs.sort();
        lhs == rhs
    }
}

pub fn coeff_identity_check(d: &LinkDiagram) -> Result<CoeffIdentityReport, JonesError> {
    let props = d.classify();
    if !(props.alternating && props.reduced) {
        return Err(JonesError::HypothesisViolated);
    }
    let st = jones_stats(&jones(d)?);
    let n = d.crossing_count();
    let ga = simplify_graph(&state_graph(d, &KauffmanState::all_a(n)).expect("total"));
    let gb = simplify_graph(&state_graph(d, &KauffmanState::all_b(n)).expect("total"));
    Ok(CoeffIdentityReport {
        beta_abs: st.beta.abs(),
        beta_prime_abs: st.beta_prime.abs(),
        one_minus_chi_a_prime: 1 - ga.chi(),
        one_minus_chi_b_prime: 1 - gb.chi(),
    })
}
