use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::PolyError;
use crate::scalar::Coeff;

/// Laurent polynomial in `u` and `v`; the E-polynomial image of `q ↦ uv`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Coeff> BivariatePoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), C)>>(iter: I) -> Self {
        let mut terms: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (k, c) in iter {
            let sum = match terms.remove(&k) {
                Some(old) => old + c,
                None => c,
            };
            if !sum.is_zero() {
                terms.insert(k, sum);
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, u: i64, v: i64) -> C {
        self.terms.get(&(u, v)).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), &C)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Exact value at `(u, v)`; both must be nonzero if negative exponents occur.
    pub fn eval_rational(&self, u: &BigInt, v: &BigInt) -> Result<BigRational, PolyError> {
        let u = BigRational::from_integer(u.clone());
        let v = BigRational::from_integer(v.clone());
        let mut acc = BigRational::zero();
        for (&(eu, ev), c) in &self.terms {
            acc += c.to_rational() * rational_pow(&u, eu)? * rational_pow(&v, ev)?;
        }
        Ok(acc)
    }
}

fn rational_pow(x: &BigRational, e: i64) -> Result<BigRational, PolyError> {
    if e >= 0 {
        Ok(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        Err(PolyError::DivisionByZero)
    } else {
        Ok(num_traits::pow(x.recip(), (-e) as usize))
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

impl<C: Coeff> fmt::Display for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(eu, ev), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let constant = eu == 0 && ev == 0;
            if constant || !abs.is_one() {
                write!(f, "{abs}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            if eu != 0 {
                write_var(f, "u", eu)?;
                if ev != 0 {
                    write!(f, "*")?;
                }
            }
            if ev != 0 {
                write_var(f, "v", ev)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;

    #[test]
    fn substitution_q_to_uv() {
        let q: Poly = "q".parse().unwrap();
        assert_eq!(q.to_bivariate().to_string(), "u*v");
        assert_eq!(Poly::one().to_bivariate().to_string(), "1");
        let x: Poly = "q^3 - q".parse().unwrap();
        assert_eq!(x.to_bivariate().to_string(), "u^3*v^3 - u*v");
        let y: Poly = "-2*q^-1 + 3".parse().unwrap();
        assert_eq!(y.to_bivariate().to_string(), "3 - 2*u^-1*v^-1");
    }
}
