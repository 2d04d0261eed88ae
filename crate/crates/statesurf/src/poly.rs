//! Exact Laurent polynomials over the integers.
//!
//! The formal variable is a const-generic tag, so bracket polynomials in `A`
//! and Jones polynomials in `q` are distinct types that cannot be mixed by
//! accident. Coefficients are arbitrary-precision integers; no floating
//! point enters any polynomial computation.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Laurent polynomial in the formal variable `V` with `BigInt` coefficients.
///
/// Invariant: no zero coefficient is ever stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent<const V: char> {
    terms: BTreeMap<i64, BigInt>,
}

impl<const V: char> Laurent<V> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `V^exp` (zero when the term is absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by the monomial `V^delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + delta, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Re-express in a new variable `W`, mapping each exponent through `f`.
    ///
    /// `f` must be injective on the stored exponents (exponent negation for a
    /// substitution like `A = q^-1` is the intended use).
    pub fn map_var<const W: char>(&self, f: impl Fn(i64) -> i64) -> Laurent<W> {
        let mut out: Laurent<W> = Laurent::zero();
        for (e, c) in &self.terms {
            let fe = f(*e);
            debug_assert!(!out.terms.contains_key(&fe), "exponent map not injective");
            out.terms.insert(fe, c.clone());
        }
        out
    }
}

impl<const V: char> Add for &Laurent<V> {
    type Output = Laurent<V>;
    fn add(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<const V: char> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<const V: char> Sub for &Laurent<V> {
    type Output = Laurent<V>;
    fn sub(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl<const V: char> Neg for &Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<const V: char> Mul for &Laurent<V> {
    type Output = Laurent<V>;
    fn mul(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl<const V: char> fmt::Display for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let negative = c < &BigInt::zero();
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
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "{V}")?,
                (1, false) => write!(f, "{abs}{V}")?,
                (_, true) => write!(f, "{V}^{e}")?,
                (_, false) => write!(f, "{abs}{V}^{e}")?,
            }
        }
        Ok(())
    }
}

impl<const V: char> fmt::Debug for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type A = Laurent<'A'>;

    #[test]
    fn display_matches_convention() {
        let p = A::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(p.to_string(), "A^-2 - A^-1 + 1 - A + A^2");
        assert_eq!(A::zero().to_string(), "0");
        assert_eq!(A::from_terms([(3, -1)]).to_string(), "-A^3");
        assert_eq!(A::from_terms([(1, 2), (4, -3)]).to_string(), "2A - 3A^4");
    }

    #[test]
    fn arithmetic_identities() {
        let p = A::from_terms([(0, 1), (2, -1)]);
        let q = A::from_terms([(-2, 3), (1, 1)]);
        assert_eq!(&(&p + &q) - &q, p);
        assert_eq!(&p * &A::one(), p);
        assert_eq!((&p * &A::zero()).num_terms(), 0);
        // (1 - A^2)(3A^-2 + A) = 3A^-2 + A - 3 - A^3
        let prod = &p * &q;
        assert_eq!(prod, A::from_terms([(-2, 3), (0, -3), (1, 1), (3, -1)]));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = A::from_terms([(5, 2)]);
        let q = A::from_terms([(5, -2)]);
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn pow_and_shift() {
        let delta = A::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(delta.pow(0), A::one());
        assert_eq!(delta.pow(2), A::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(A::one().shifted(3), A::monomial(3, 1));
    }

    #[test]
    fn variable_substitution() {
        let p = A::from_terms([(3, 1), (-1, 2)]);
        let q: Laurent<'q'> = p.map_var(|e| -e);
        assert_eq!(q, Laurent::<'q'>::from_terms([(-3, 1), (1, 2)]));
    }
}
