use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BivariatePoly, PolyError};
use crate::scalar::Coeff;

/// Laurent polynomial in `q` with exact coefficients.
///
/// Stored sparsely; no zero coefficient is ever kept, so structural equality
/// is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficient list, lowest exponent first, starting at `q^0`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, C::from_i64(c))))
    }

    /// `q - 1`
    pub fn q_minus_one() -> Self {
        Self::from_coeffs(&[-1, 1])
    }

    /// `q + 1`
    pub fn q_plus_one() -> Self {
        Self::from_coeffs(&[1, 1])
    }

    /// `q^3 - q`, the class of SL2.
    pub fn sl2_class() -> Self {
        Self::from_coeffs(&[0, -1, 0, 1])
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading coefficient (highest exponent).
    pub fn lead(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// True if every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Single term `c q^k`, if that is what `self` is.
    pub fn as_monomial(&self) -> Option<(i64, &C)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Value at `q = 1`; zero iff `(q - 1)` divides `self`.
    pub fn sum_coeffs(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |acc, c| acc + c)
    }

    /// Value at `q = -1`; zero iff `(q + 1)` divides `self`.
    pub fn alternating_sum(&self) -> C {
        self.terms.iter().fold(C::zero(), |acc, (&e, c)| {
            if e.rem_euclid(2) == 0 {
                acc + c.clone()
            } else {
                acc - c.clone()
            }
        })
    }

    /// Synthetic division by `q - r` for `r = ±1`; the caller guarantees divisibility.
    fn div_linear(&self, root: i64) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Self::zero();
        };
        let r = C::from_i64(root);
        let mut out = Self::zero();
        let mut carry = C::zero();
        for e in (lo + 1..=hi).rev() {
            carry = self.coeff(e) + carry * r.clone();
            out.add_term(e - 1, carry.clone());
        }
        debug_assert!((self.coeff(lo) + carry * r).is_zero());
        out
    }

    /// Divides out one factor of `q - 1` if present.
    pub fn strip_q_minus_one(&self) -> Option<Self> {
        (!self.is_zero() && self.sum_coeffs().is_zero()).then(|| self.div_linear(1))
    }

    /// Divides out one factor of `q + 1` if present.
    pub fn strip_q_plus_one(&self) -> Option<Self> {
        (!self.is_zero() && self.alternating_sum().is_zero()).then(|| self.div_linear(-1))
    }

    /// Exact quotient in the Laurent ring.
    ///
    /// Both operands are shifted by a power of `q` (a unit) to ordinary
    /// polynomials with nonzero constant term, then long-divided.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, PolyError> {
        let (Some(rlo), Some(rhi)) = (rhs.min_exp(), rhs.max_exp()) else {
            return Err(PolyError::DivisionByZero);
        };
        let Some(slo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        if let Some((e, c)) = rhs.as_monomial() {
            let inv_terms = self
                .terms
                .iter()
                .map(|(&k, x)| x.div_exact(c).map(|v| (k - e, v)))
                .collect::<Option<Vec<_>>>()
                .ok_or(PolyError::NotDivisible)?;
            return Ok(Self::from_terms(inv_terms));
        }
        let lead = rhs.coeff(rhi);
        let mut rem = self.shift(-slo);
        let divisor = rhs.shift(-rlo);
        let ddeg = rhi - rlo;
        let mut quo = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < ddeg {
                return Err(PolyError::NotDivisible);
            }
            let c = rem.coeff(top).div_exact(&lead).ok_or(PolyError::NotDivisible)?;
            let step = Self::monomial(c, top - ddeg);
            rem = &rem - &(&step * &divisor);
            quo = &quo + &step;
        }
        Ok(quo.shift(slo - rlo))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    pub fn to_rational(&self) -> LaurentPoly<BigRational> {
        self.map_coeffs(|c| c.to_rational())
    }

    /// Exact rational value at `q = n`.
    pub fn eval_rational(&self, n: &BigInt) -> Result<BigRational, PolyError> {
        if n.is_zero() && !self.is_polynomial() {
            return Err(PolyError::DivisionByZero);
        }
        let x = BigRational::from_integer(n.clone());
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c.to_rational() * p;
        }
        Ok(acc)
    }

    /// Substitutes `q ↦ uv`.
    pub fn to_bivariate(&self) -> BivariatePoly<C> {
        BivariatePoly::from_terms(self.terms.iter().map(|(&e, c)| ((e, e), c.clone())))
    }
}

impl LaurentPoly<BigInt> {
    /// Integer value at `q = n` (`n ≠ 0`); fails if negative exponents make it non-integral.
    pub fn eval_int(&self, n: i64) -> Result<BigInt, PolyError> {
        let v = self.eval_rational(&BigInt::from(n))?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(PolyError::NonIntegral)
        }
    }

    /// Divides every coefficient by an integer, failing if any is not divisible.
    pub fn div_int(&self, d: i64) -> Result<Self, PolyError> {
        let d = BigInt::from(d);
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| c.div_exact(&d).map(|v| (e, v)))
            .collect::<Option<Vec<_>>>()
            .ok_or(PolyError::NotDivisible)?;
        Ok(Self::from_terms(terms))
    }
}

impl<C: Coeff> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Coeff> $tr<LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coeff> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl<C: Coeff> std::iter::Product for LaurentPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| &acc * &x)
    }
}

// JSON: list of [exponent, "coefficient"] pairs, ascending exponent.
impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect();
        pairs.serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, s) in pairs {
            let c = parse_coeff::<C>(&s).ok_or_else(|| D::Error::custom(format!("bad coefficient {s:?}")))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_coeff<C: Coeff>(s: &str) -> Option<C> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n = C::from_bigint(n.trim().parse().ok()?);
    let d = C::from_bigint(d.trim().parse().ok()?);
    n.div_exact(&d)
}
