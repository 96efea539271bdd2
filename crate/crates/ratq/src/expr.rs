//! Arithmetic-expression parser used for catalog data (j-maps, constants, models).
//!
//! Grammar: sums and differences of products and quotients of powers, where a power is
//! `atom ^ integer`, and an atom is an integer literal, a variable name or a parenthesized
//! expression. Unary minus is allowed in front of any term. The value type is generic, so
//! the same strings can be read as rationals, rational functions or curve functions.

use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Rational;
use crate::{RatqError, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub trait ExprField: Clone {
    fn from_rational(q: Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn powi(&self, e: i64) -> Result<Self>;
}

impl ExprField for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            Err(RatqError::DivisionByZero)
        } else {
            Ok(self / o)
        }
    }
    fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(RatqError::DivisionByZero);
        }
        Ok(num_traits::pow::Pow::pow(self, e as i32))
    }
}

impl ExprField for RatFun {
    fn from_rational(q: Rational) -> Self {
        RatFun::constant(q)
    }
    fn add(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFun::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        RatFun::div(self, o)
    }
    fn powi(&self, e: i64) -> Result<Self> {
        RatFun::powi(self, e)
    }
}

struct Parser<'a, F> {
    s: &'a [u8],
    i: usize,
    var: &'a dyn Fn(&str) -> Option<F>,
}

impl<F: ExprField> Parser<'_, F> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(RatqError::Parse(format!(
            "{msg} at byte {} of {:?}",
            self.i,
            String::from_utf8_lossy(self.s)
        )))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<F> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F> {
        let neg = if self.peek() == Some(b'-') {
            self.i += 1;
            true
        } else {
            false
        };
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.i += 1;
                    acc = acc.mul(&self.power()?);
                }
                b'/' => {
                    self.i += 1;
                    acc = acc.div(&self.power()?)?;
                }
                _ => break,
            }
        }
        if neg {
            acc = F::from_rational(Rational::zero()).sub(&acc);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<F> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let neg = if self.peek() == Some(b'-') {
                self.i += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = match i64::try_from(e) {
                Ok(v) => v,
                Err(_) => return self.err("exponent too large"),
            };
            return base.powi(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<F> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(F::from_rational(Rational::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                match (self.var)(name) {
                    Some(v) => Ok(v),
                    None => self.err(&format!("unknown variable {name:?}")),
                }
            }
            _ => self.err("unexpected input"),
        }
    }
}

pub fn parse_expr<F: ExprField>(s: &str, var: &dyn Fn(&str) -> Option<F>) -> Result<F> {
    let mut p = Parser { s: s.as_bytes(), i: 0, var };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parse a constant such as `-2^12*5^3*11*13^4/3^13`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    parse_expr::<Rational>(s, &|_| None)
}

/// Parse a rational function in the single variable `var`.
pub fn parse_ratfun(s: &str, var: &str) -> Result<RatFun> {
    let x = RatFun::from_poly(Poly::new(vec![Rational::zero(), Rational::one()]));
    parse_expr::<RatFun>(s, &|name| if name == var { Some(x.clone()) } else { None })
}
