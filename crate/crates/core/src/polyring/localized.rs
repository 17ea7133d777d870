use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::{LaurentPoly, PolyError};
use crate::scalar::Coeff;

/// `num / ((q - 1)^a (q + 1)^b)`, kept in lowest terms.
///
/// Normal form: when `a > 0`, `(q - 1)` does not divide `num`; when `b > 0`,
/// `(q + 1)` does not divide `num`; zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Localized<C> {
    num: LaurentPoly<C>,
    a: u32,
    b: u32,
}

impl<C: Coeff> Localized<C> {
    /// Builds and normalizes `num / ((q - 1)^a (q + 1)^b)`.
    pub fn new(num: LaurentPoly<C>, a: u32, b: u32) -> Self {
        let mut x = Self { num, a, b };
        x.normalize();
        x
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_poly(num: LaurentPoly<C>) -> Self {
        Self { num, a: 0, b: 0 }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.a = 0;
            self.b = 0;
            return;
        }
        while self.a > 0 {
            match self.num.strip_q_minus_one() {
                Some(n) => {
                    self.num = n;
                    self.a -= 1;
                }
                None => break,
            }
        }
        while self.b > 0 {
            match self.num.strip_q_plus_one() {
                Some(n) => {
                    self.num = n;
                    self.b -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly<C> {
        &self.num
    }

    /// Exponents `(a, b)` of `(q - 1)` and `(q + 1)` in the denominator.
    pub fn denominator_exps(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn denominator(&self) -> LaurentPoly<C> {
        &LaurentPoly::q_minus_one().pow(self.a) * &LaurentPoly::q_plus_one().pow(self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_laurent() && self.num.is_one()
    }

    /// True iff the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly<C>> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn into_laurent(self) -> Result<LaurentPoly<C>, PolyError> {
        if self.is_laurent() {
            Ok(self.num)
        } else {
            Err(PolyError::HasDenominator)
        }
    }

    /// Rewrites `self` over the denominator `(q - 1)^a (q + 1)^b`, which must
    /// be a multiple of the current one.
    pub fn numerator_over(&self, a: u32, b: u32) -> LaurentPoly<C> {
        debug_assert!(a >= self.a && b >= self.b);
        &(&self.num * &LaurentPoly::q_minus_one().pow(a - self.a))
            * &LaurentPoly::q_plus_one().pow(b - self.b)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.num.scale(c), self.a, self.b)
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(self.num.pow(n), self.a * n, self.b * n)
    }

    /// Multiplicative inverse; exists iff the numerator is a unit times powers
    /// of `q - 1` and `q + 1`.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rest = self.num.clone();
        let mut i = 0;
        while let Some(n) = rest.strip_q_minus_one() {
            rest = n;
            i += 1;
        }
        let mut j = 0;
        while let Some(n) = rest.strip_q_plus_one() {
            rest = n;
            j += 1;
        }
        let (e, c) = rest.as_monomial().ok_or(PolyError::NotInvertible)?;
        let cinv = c.inverse().ok_or(PolyError::NotInvertible)?;
        let num = &LaurentPoly::monomial(cinv, -e) * &self.denominator();
        Ok(Self::new(num, i, j))
    }

    /// `self / rhs`, defined when `rhs` is invertible.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Exact quotient by a Laurent polynomial that divides the numerator.
    pub fn div_poly(&self, d: &LaurentPoly<C>) -> Result<Self, PolyError> {
        Ok(Self::new(self.num.exact_div(d)?, self.a, self.b))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Localized<D> {
        Localized::new(self.num.map_coeffs(f), self.a, self.b)
    }

    pub fn to_rational(&self) -> Localized<BigRational> {
        self.map_coeffs(|c| c.to_rational())
    }
}

impl<C: Coeff> From<LaurentPoly<C>> for Localized<C> {
    fn from(p: LaurentPoly<C>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, C: Coeff> Add<&'a Localized<C>> for &'a Localized<C> {
    type Output = Localized<C>;
    fn add(self, rhs: &'a Localized<C>) -> Localized<C> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let a = self.a.max(rhs.a);
        let b = self.b.max(rhs.b);
        Localized::new(&self.numerator_over(a, b) + &rhs.numerator_over(a, b), a, b)
    }
}

impl<'a, C: Coeff> Sub<&'a Localized<C>> for &'a Localized<C> {
    type Output = Localized<C>;
    fn sub(self, rhs: &'a Localized<C>) -> Localized<C> {
        self + &(-rhs)
    }
}

impl<'a, C: Coeff> Mul<&'a Localized<C>> for &'a Localized<C> {
    type Output = Localized<C>;
    fn mul(self, rhs: &'a Localized<C>) -> Localized<C> {
        if self.is_zero() || rhs.is_zero() {
            return Localized::zero();
        }
        if self.is_laurent() && self.num.is_one() {
            return rhs.clone();
        }
        if rhs.is_laurent() && rhs.num.is_one() {
            return self.clone();
        }
        Localized::new(&self.num * &rhs.num, self.a + rhs.a, self.b + rhs.b)
    }
}

impl<C: Coeff> Neg for &Localized<C> {
    type Output = Localized<C>;
    fn neg(self) -> Localized<C> {
        Localized { num: -&self.num, a: self.a, b: self.b }
    }
}

impl<C: Coeff> Neg for Localized<C> {
    type Output = Localized<C>;
    fn neg(self) -> Localized<C> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coeff> $tr<Localized<C>> for Localized<C> {
            type Output = Localized<C>;
            fn $method(self, rhs: Localized<C>) -> Localized<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a Localized<C>> for Localized<C> {
            type Output = Localized<C>;
            fn $method(self, rhs: &'a Localized<C>) -> Localized<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Coeff> $tr<Localized<C>> for &'a Localized<C> {
            type Output = Localized<C>;
            fn $method(self, rhs: Localized<C>) -> Localized<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> std::iter::Sum for Localized<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl<C: Coeff> One for Localized<C> {
    fn one() -> Self {
        Localized::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{LocalizedScalar, Poly};

    fn s(x: &str) -> LocalizedScalar {
        x.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(s("q - 1") + s("q + 1"), s("2*q"));
        assert_eq!(s("q^2/(q - 1)") + s("-q/(q - 1)"), s("q"));
        let x = s("(q^2 + 3)/(q + 1)^2");
        assert_eq!(&x + &LocalizedScalar::zero(), x);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(s("q + 1") * s("q - 1"), s("q^2 - 1"));
        assert!((s("1/(q - 1)") * s("q - 1")).is_one());
        let prod = s("q^3 - q") * s("1/((q - 1)*(q + 1))");
        assert_eq!(prod, s("q"));
        assert!(prod.is_laurent());
    }

    #[test]
    fn normal_form_strips_common_factors() {
        let x = LocalizedScalar::new(Poly::q_minus_one().pow(3), 2, 1);
        assert_eq!(x.denominator_exps(), (0, 1));
        assert_eq!(x.numerator(), &Poly::q_minus_one());
    }

    #[test]
    fn inverse_of_units() {
        let x = s("-2*q^3 + 2*q");
        assert!(x.inverse().is_err());
        let y = s("q^5 - q^3");
        let yi = y.inverse().unwrap();
        assert!((&y * &yi).is_one());
        assert_eq!(s("q^2 + 1").inverse(), Err(PolyError::NotInvertible));
        assert_eq!(LocalizedScalar::zero().inverse(), Err(PolyError::DivisionByZero));
    }
}
