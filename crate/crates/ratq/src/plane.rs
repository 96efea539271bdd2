use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Bivariate polynomial with integer coefficients; `c[i][j]` multiplies xⁱyʲ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    c: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn new(mut c: Vec<Vec<BigInt>>) -> Self {
        for row in c.iter_mut() {
            while row.last().is_some_and(|v| v.is_zero()) {
                row.pop();
            }
        }
        while c.last().is_some_and(|r| r.is_empty()) {
            c.pop();
        }
        BiPoly { c }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.c
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree_x(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn degree_y(&self) -> isize {
        self.c.iter().map(|r| r.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.c {
            for v in r {
                g = g.gcd(v);
            }
        }
        g
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for row in self.c.iter().rev() {
            let mut inner = Rational::zero();
            for v in row.iter().rev() {
                inner = inner * y + Rational::from_integer(v.clone());
            }
            acc = acc * x + inner;
        }
        acc
    }

    /// The univariate polynomial in y obtained by fixing x.
    pub fn at_x(&self, x: &Rational) -> Poly {
        let dy = self.degree_y().max(-1) + 1;
        let mut out = vec![Rational::zero(); dy as usize];
        let mut xp = Rational::one();
        for row in &self.c {
            for (j, v) in row.iter().enumerate() {
                out[j] += &xp * Rational::from_integer(v.clone());
            }
            xp *= x;
        }
        Poly::new(out)
    }
}

/// The curve f(x) = g(y), cleared of denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneModel {
    pub poly: BiPoly,
    pub provenance: (String, String),
}

impl PlaneModel {
    pub fn vanishes_at(&self, x: &Rational, y: &Rational) -> bool {
        self.poly.eval(x, y).is_zero()
    }
}

/// numer(f(x) − g(y)) as a content-1 integer polynomial.
pub fn plane_model(f: &RatFun, g: &RatFun, provenance: (&str, &str)) -> PlaneModel {
    // f(x) − g(y) = (fn(x)·gd(y) − gn(y)·fd(x)) / (fd(x)·gd(y))
    let outer = |a: &Poly, b: &Poly| -> Vec<Vec<Rational>> {
        a.coeffs()
            .iter()
            .map(|ai| b.coeffs().iter().map(|bj| ai * bj).collect())
            .collect()
    };
    let p1 = outer(f.num(), g.den());
    let p2 = outer(f.den(), g.num());
    let nx = p1.len().max(p2.len());
    let ny = p1
        .iter()
        .chain(p2.iter())
        .map(|r| r.len())
        .max()
        .unwrap_or(0);
    let mut q = vec![vec![Rational::zero(); ny]; nx];
    for (i, r) in p1.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            q[i][j] += v;
        }
    }
    for (i, r) in p2.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            q[i][j] -= v;
        }
    }
    let mut l = BigInt::one();
    for r in &q {
        for v in r {
            l = l.lcm(v.denom());
        }
    }
    let ints: Vec<Vec<BigInt>> = q
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut poly = BiPoly::new(ints);
    let g0 = poly.content();
    if !g0.is_zero() {
        for row in poly.c.iter_mut() {
            for v in row.iter_mut() {
                *v = &*v / &g0;
            }
        }
    }
    PlaneModel {
        poly,
        provenance: (provenance.0.to_string(), provenance.1.to_string()),
    }
}
