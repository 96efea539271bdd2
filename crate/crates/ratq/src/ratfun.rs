use crate::poly::Poly;
use crate::rational::{Extended, Rational};
use crate::roots::poly_rational_roots;
use crate::{RatqError, Result};
use num_traits::{One, Zero};
use std::fmt;

/// num/den with gcd(num, den) = 1 and den monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(RatqError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let l = d.lead().recip();
        if !l.is_one() {
            n = n.scale(&l);
            d = d.scale(&l);
        }
        Ok(RatFun { num: n, den: d })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(q: Rational) -> Self {
        RatFun::from_poly(Poly::constant(q))
    }

    pub fn x() -> Self {
        RatFun::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg num, deg den), the degree of the map ℙ¹ → ℙ¹.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree()).max(0) as usize
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        if self.den == o.den {
            return RatFun::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFun::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        RatFun::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun> {
        if o.is_zero() {
            return Err(RatqError::DivisionByZero);
        }
        RatFun::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn powi(&self, e: i64) -> Result<RatFun> {
        let k = e.unsigned_abs() as u32;
        let (n, d) = (self.num.pow(k), self.den.pow(k));
        if e >= 0 {
            RatFun::new(n, d)
        } else {
            if self.is_zero() {
                return Err(RatqError::DivisionByZero);
            }
            RatFun::new(d, n)
        }
    }

    /// self(g(x)), computed homogeneously so no intermediate division is needed.
    pub fn compose(&self, g: &RatFun) -> RatFun {
        let m = self.num.degree().max(self.den.degree()).max(0) as usize;
        let p = &g.num;
        let q = &g.den;
        let mut ppow = vec![Poly::one()];
        let mut qpow = vec![Poly::one()];
        for i in 1..=m {
            ppow.push(&ppow[i - 1] * p);
            qpow.push(&qpow[i - 1] * q);
        }
        let hom = |f: &Poly| {
            let mut acc = Poly::zero();
            for (i, a) in f.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(&ppow[i] * &qpow[m - i]).scale(a);
            }
            acc
        };
        RatFun::new(hom(&self.num), hom(&self.den)).unwrap()
    }

    pub fn eval(&self, t: &Extended) -> Extended {
        ratfun_eval(self, t)
    }
}

/// f(t) on ℙ¹(ℚ); poles and t = ∞ are handled explicitly.
pub fn ratfun_eval(f: &RatFun, t: &Extended) -> Extended {
    match t {
        Extended::Finite(x) => {
            let d = f.den.eval(x);
            if d.is_zero() {
                Extended::Infinity
            } else {
                Extended::Finite(f.num.eval(x) / d)
            }
        }
        Extended::Infinity => {
            let (dn, dd) = (f.num.degree(), f.den.degree());
            if f.num.is_zero() || dn < dd {
                Extended::Finite(Rational::zero())
            } else if dn > dd {
                Extended::Infinity
            } else {
                Extended::Finite(f.num.lead() / f.den.lead())
            }
        }
    }
}

/// All t ∈ ℙ¹(ℚ) with f(t) = j0, each re-verified by evaluation.
pub fn ratfun_preimages(f: &RatFun, j0: &Extended) -> Result<Vec<Extended>> {
    if f.is_constant() {
        return Err(RatqError::ConstantJMap);
    }
    let h = match j0 {
        Extended::Finite(j) => &f.num - &f.den.scale(j),
        Extended::Infinity => f.den.clone(),
    };
    let mut out: Vec<Extended> = Vec::new();
    if !h.is_zero() && h.degree() > 0 {
        for r in poly_rational_roots(&h)? {
            out.push(Extended::Finite(r));
        }
    }
    if ratfun_eval(f, &Extended::Infinity) == *j0 {
        out.push(Extended::Infinity);
    }
    out.retain(|t| ratfun_eval(f, t) == *j0);
    out.sort();
    Ok(out)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
