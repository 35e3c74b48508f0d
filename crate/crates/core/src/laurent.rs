//! Sparse Laurent polynomials in one variable `v` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[v, v^-1]`, stored as `(exponent, coefficient)` pairs
/// sorted by exponent with no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * v^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(exp, coeff)] }
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `v`
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v^-1`
    pub fn v_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `v^-1 - v`, the coefficient produced by the quadratic relation.
    pub fn v_inv_minus_v() -> Self {
        Self { terms: vec![(-1, 1), (1, -1)] }
    }

    /// `v - v^-1`
    pub fn v_minus_v_inv() -> Self {
        Self { terms: vec![(-1, -1), (1, 1)] }
    }

    /// Builds a polynomial from arbitrary pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
        for (e, c) in pairs {
            *acc.entry(e).or_insert(0) += c;
        }
        Self {
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms
            .binary_search_by_key(&exp, |&(e, _)| e)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e, c * k)).collect(),
        }
    }

    /// Substitution `v -> v^k`. For `k = -2` this is the `v^-2` specialization
    /// (exponents negated and doubled); `k = 0` is rejected.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitution v -> v^0 is not a ring map on Laurent polynomials");
        let mut terms: Vec<(i32, i64)> = self.terms.iter().map(|&(e, c)| (e * k, c)).collect();
        if k < 0 {
            terms.reverse();
        }
        Self { terms }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    /// Every coefficient is nonnegative, i.e. the polynomial lies in `Z>=0[v, v^-1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c > 0)
    }

    /// Bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    fn merge(&self, other: &Self, sign: i64) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ea, ca) = a[i];
            let (eb, cb) = b[j];
            if ea < eb {
                out.push((ea, ca));
                i += 1;
            } else if eb < ea {
                out.push((eb, sign * cb));
                j += 1;
            } else {
                let c = ca + sign * cb;
                if c != 0 {
                    out.push((ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, sign * c)));
        Self { terms: out }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, 1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, 1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, -1)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, -1)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, 1);
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = self.merge(&rhs, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, -1);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|&(a, b)| (a + e, b * c)).collect(),
            };
        }
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|&(ea, ca)| rhs.terms.iter().map(move |&(eb, cb)| (ea + eb, ca * cb))),
        )
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, exp: i32, abs: i64) -> fmt::Result {
    match (exp, abs) {
        (0, c) => write!(f, "{c}"),
        (1, 1) => write!(f, "v"),
        (e, 1) => write!(f, "v^{e}"),
        (1, c) => write!(f, "{c}*v"),
        (e, c) => write!(f, "{c}*v^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `v - v^-1`, `2*v^2 + 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_monomial(f, e, c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: sorted list of `[exponent, coefficient]` pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, i64)> = Vec::deserialize(d)?;
        Ok(Self::from_terms(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn quadratic_relation_coefficients() {
        // (x - v^-1)(x + v) = x^2 + (v - v^-1) x - 1
        let a = LaurentPoly::v_inv_minus_v();
        let b = LaurentPoly::v_minus_v_inv();
        assert!((&a + &b).is_zero());
        assert_eq!(&a * &b, LaurentPoly::from_terms([(-2, -1), (0, 2), (2, -1)]));
    }

    #[test]
    fn no_stored_zeros() {
        let p = LaurentPoly::from_terms([(1, 2), (1, -2), (0, 0), (3, 1)]);
        assert_eq!(p.terms(), &[(3, 1)]);
        assert!((&p - &p).terms().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::v_minus_v_inv().to_string(), "v - v^-1");
        assert_eq!(LaurentPoly::from_terms([(2, 2), (0, 1)]).to_string(), "2*v^2 + 1");
        assert_eq!(LaurentPoly::from_terms([(2, 1), (0, -1)]).to_string(), "v^2 - 1");
        assert_eq!(LaurentPoly::monomial(-3, -2).to_string(), "-3*v^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitution_negative_power() {
        let p = LaurentPoly::from_terms([(1, 1), (2, 3)]);
        let q = p.substitute_power(-2);
        assert_eq!(q.terms(), &[(-4, 3), (-2, 1)]);
    }

    #[test]
    fn json_is_sorted_pairs() {
        let p = LaurentPoly::from_terms([(2, 1), (-1, 4)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[-1,4],[2,1]]");
        let back: LaurentPoly = serde_json::from_str("[[2,1],[-1,4]]").unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn substitution_is_multiplicative(a in poly(), b in poly(), k in prop_oneof![Just(-2), Just(-1), Just(2)]) {
            prop_assert_eq!((&a * &b).substitute_power(k), &a.substitute_power(k) * &b.substitute_power(k));
            prop_assert_eq!(a.substitute_power(k).eval_one(), a.eval_one());
        }
    }
}
