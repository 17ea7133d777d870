use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Exact coefficient ring for Laurent polynomials.
///
/// Implemented for [`BigInt`] (the ring every Hodge class lives in) and for
/// [`BigRational`] (needed where a transcribed matrix carries a `1/2`).
/// Floating point types are deliberately absent: every algorithm in this crate
/// relies on exact division.
pub trait Coeff: Num + Signed + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// `self / rhs` if the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    fn from_bigint(n: BigInt) -> Self;

    fn to_rational(&self) -> BigRational;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Coeff for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (quo, rem) = self.div_rem(rhs);
        rem.is_zero().then_some(quo)
    }

    fn inverse(&self) -> Option<Self> {
        (self.is_one() || (-self).is_one()).then(|| self.clone())
    }

    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division_is_exact_only() {
        let six = BigInt::from(6);
        assert_eq!(six.div_exact(&BigInt::from(3)), Some(BigInt::from(2)));
        assert_eq!(six.div_exact(&BigInt::from(4)), None);
        assert_eq!(six.div_exact(&BigInt::zero()), None);
    }

    #[test]
    fn units() {
        assert!(BigInt::from(-1).inverse().is_some());
        assert!(BigInt::from(2).inverse().is_none());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(BigRational::from_i64(2).inverse(), Some(half));
    }
}
