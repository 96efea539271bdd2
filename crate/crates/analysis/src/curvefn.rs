use ratq::{ExprField, Poly, RatFun, RatqError, Rational};
use std::sync::Arc;

/// An element a(x) + b(x)·y of the function field of y² = f(x).
#[derive(Clone, Debug)]
pub struct CurveFn {
    pub a: RatFun,
    pub b: RatFun,
    f: Arc<RatFun>,
}

impl CurveFn {
    pub fn x(f: &Poly) -> CurveFn {
        let f = Arc::new(RatFun::from_poly(f.clone()));
        CurveFn { a: RatFun::x(), b: RatFun::constant(Rational::from_integer(0.into())), f }
    }

    pub fn y(f: &Poly) -> CurveFn {
        let f = Arc::new(RatFun::from_poly(f.clone()));
        let zero = RatFun::constant(Rational::from_integer(0.into()));
        CurveFn { a: zero, b: RatFun::constant(Rational::from_integer(1.into())), f }
    }

    fn with(&self, a: RatFun, b: RatFun) -> CurveFn {
        CurveFn { a, b, f: self.f.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Parse an expression in x and y on the curve y² = f(x).
    pub fn parse(s: &str, f: &Poly) -> ratq::Result<CurveFn> {
        let (x, y) = (CurveFn::x(f), CurveFn::y(f));
        ratq::parse_expr(s, &|name| match name {
            "x" => Some(x.clone()),
            "y" => Some(y.clone()),
            _ => None,
        })
    }

    fn constant(&self, q: Rational) -> CurveFn {
        self.with(RatFun::constant(q), RatFun::constant(Rational::from_integer(0.into())))
    }

    /// r(self) for a one-variable rational function r.
    pub fn apply(&self, r: &RatFun) -> ratq::Result<CurveFn> {
        let horner = |p: &Poly| {
            let zero = self.constant(Rational::from_integer(0.into()));
            p.coeffs().iter().rev().fold(zero, |acc, c| acc.mul(self).add(&self.constant(c.clone())))
        };
        horner(r.num()).div(&horner(r.den()))
    }

    pub fn equals(&self, o: &CurveFn) -> bool {
        self.sub(o).is_zero()
    }
}

impl ExprField for CurveFn {
    fn from_rational(q: Rational) -> Self {
        // placeholder curve; arithmetic adopts the curve of the other operand
        CurveFn {
            a: RatFun::constant(q),
            b: RatFun::constant(Rational::from_integer(0.into())),
            f: Arc::new(RatFun::constant(Rational::from_integer(0.into()))),
        }
    }

    fn add(&self, o: &Self) -> Self {
        self.with(self.a.add(&o.a), self.b.add(&o.b)).pick(o)
    }

    fn sub(&self, o: &Self) -> Self {
        self.with(self.a.sub(&o.a), self.b.sub(&o.b)).pick(o)
    }

    fn mul(&self, o: &Self) -> Self {
        let c = self.pick_curve(o);
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&c));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        CurveFn { a, b, f: Arc::new(c) }
    }

    fn div(&self, o: &Self) -> ratq::Result<Self> {
        let c = self.pick_curve(o);
        // 1/(a + by) = (a − by)/(a² − b²f)
        let norm = o.a.mul(&o.a).sub(&o.b.mul(&o.b).mul(&c));
        if norm.is_zero() {
            return Err(RatqError::DivisionByZero);
        }
        let conj = CurveFn { a: o.a.div(&norm)?, b: o.b.neg().div(&norm)?, f: Arc::new(c.clone()) };
        Ok(CurveFn { f: Arc::new(c), ..self.clone() }.mul(&conj))
    }

    fn powi(&self, e: i64) -> ratq::Result<Self> {
        let mut base = if e < 0 { CurveFn::from_rational(Rational::from_integer(1.into())).div(self)? } else { self.clone() };
        let mut acc = CurveFn { f: self.f.clone(), ..CurveFn::from_rational(Rational::from_integer(1.into())) };
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        Ok(acc)
    }
}

impl CurveFn {
    fn pick_curve(&self, o: &CurveFn) -> RatFun {
        if self.f.is_zero() { (*o.f).clone() } else { (*self.f).clone() }
    }

    fn pick(self, o: &CurveFn) -> CurveFn {
        if self.f.is_zero() {
            CurveFn { f: o.f.clone(), ..self }
        } else {
            self
        }
    }
}
