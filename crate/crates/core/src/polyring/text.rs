//! Canonical text form and a small expression parser.
//!
//! Output: descending exponents, explicit signs, `*` and `^`, e.g.
//! `q^4 + 4*q^3 - q^2 - 4*q`. Input accepts any expression built from
//! integers, `q`, `+ - * /`, integer powers and parentheses, as long as every
//! division is by a unit of the localized ring.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;


use super::{LaurentPoly, Localized, PolyError};
use crate::scalar::Coeff;

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn needs_parens<C: Coeff>(p: &LaurentPoly<C>) -> bool {
    match p.as_monomial() {
        Some((_, c)) => c.to_string().contains('/'),
        None => true,
    }
}

impl<C: Coeff> fmt::Display for Localized<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.denominator_exps();
        let num = self.numerator();
        if a == 0 && b == 0 {
            return write!(f, "{num}");
        }
        if needs_parens(num) {
            write!(f, "({num})/")?;
        } else {
            write!(f, "{num}/")?;
        }
        let factor = |name: &str, e: u32| match e {
            1 => format!("({name})"),
            _ => format!("({name})^{e}"),
        };
        match (a, b) {
            (_, 0) => write!(f, "{}", factor("q - 1", a)),
            (0, _) => write!(f, "{}", factor("q + 1", b)),
            _ => write!(f, "({}*{})", factor("q - 1", a), factor("q + 1", b)),
        }
    }
}

impl<C: Coeff> fmt::Debug for Localized<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> FromStr for Localized<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl<C: Coeff> FromStr for LaurentPoly<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        s.parse::<Localized<C>>()?.into_laurent()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Coeff>(&mut self) -> Result<Localized<C>, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<Localized<C>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let pos = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|e| PolyError::Parse {
                    pos,
                    msg: format!("divisor is not a unit: {e}"),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<C: Coeff>(&mut self) -> Result<Localized<C>, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power<C: Coeff>(&mut self) -> Result<Localized<C>, PolyError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e: u32 = self
            .integer()?
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        let p = base.pow(e);
        if neg {
            p.inverse().map_err(|_| self.err("negative power of a non-unit"))
        } else {
            Ok(p)
        }
    }

    fn integer(&mut self) -> Result<String, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom<C: Coeff>(&mut self) -> Result<Localized<C>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Localized::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Localized::from_poly(LaurentPoly::constant(C::from_bigint(n))))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
