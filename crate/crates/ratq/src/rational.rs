use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// max(|a|, |b|) for a/b in lowest terms.
pub fn height(q: &Rational) -> BigInt {
    let a = q.numer().abs();
    let b = q.denom().abs();
    if a > b {
        a
    } else {
        b
    }
}

/// A point of ℙ¹(ℚ): a rational or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(q) => Some(q),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Extended::Infinity)
    }
}

impl From<Rational> for Extended {
    fn from(q: Rational) -> Self {
        Extended::Finite(q)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(q) => write!(f, "{q}"),
            Extended::Infinity => write!(f, "inf"),
        }
    }
}

pub(crate) fn is_zero(q: &Rational) -> bool {
    q.is_zero()
}
