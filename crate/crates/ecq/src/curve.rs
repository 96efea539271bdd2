use crate::{EcqError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use ratq::{int, parse_rational, poly_rational_roots, Poly, Rational};
use std::fmt;

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 with Δ ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurveQ {
    a: [Rational; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b2: Rational,
    pub b4: Rational,
    pub b6: Rational,
    pub b8: Rational,
    pub c4: Rational,
    pub c6: Rational,
    pub delta: Rational,
    pub j: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mod2Image {
    Cs,
    B,
    Cn,
    Full,
}

impl Mod2Image {
    pub fn label(&self) -> &'static str {
        match self {
            Mod2Image::Cs => "2Cs",
            Mod2Image::B => "2B",
            Mod2Image::Cn => "2Cn",
            Mod2Image::Full => "full",
        }
    }
}

pub fn is_rational_square(q: &Rational) -> bool {
    let sq = |n: &BigInt| !n.is_negative() && n.sqrt().pow(2) == *n;
    sq(q.numer()) && sq(q.denom())
}

fn raw_invariants(a: &[Rational; 5]) -> Invariants {
    let [a1, a2, a3, a4, a6] = a;
    let b2 = a1 * a1 + int(4) * a2;
    let b4 = int(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + int(4) * a6;
    let b8 = a1 * a1 * a6 + int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - int(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + int(36) * &b2 * &b4 - int(216) * &b6;
    let delta = -(&b2 * &b2 * &b8) - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6 + int(9) * &b2 * &b4 * &b6;
    let j = if delta.is_zero() { Rational::zero() } else { &c4 * &c4 * &c4 / &delta };
    Invariants { b2, b4, b6, b8, c4, c6, delta, j }
}

impl EllipticCurveQ {
    pub fn new(a: [Rational; 5]) -> Result<Self> {
        let inv = raw_invariants(&a);
        if inv.delta.is_zero() {
            return Err(EcqError::Singular);
        }
        assert_eq!(
            &inv.c4 * &inv.c4 * &inv.c4 - &inv.c6 * &inv.c6,
            int(1728) * &inv.delta,
            "c4³ − c6² = 1728Δ"
        );
        Ok(EllipticCurveQ { a })
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(int))
    }

    pub fn from_bigints(a: &[BigInt; 5]) -> Result<Self> {
        Self::new(a.clone().map(Rational::from_integer))
    }

    /// Parses one CSV line "label,a1,a2,a3,a4,a6"; coefficients may be rationals.
    pub fn parse_csv_line(line: &str) -> Result<(String, EllipticCurveQ)> {
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(EcqError::Parse(format!("expected label and 5 coefficients, got {:?}", line)));
        }
        let mut a: [Rational; 5] = Default::default();
        for (c, s) in a.iter_mut().zip(&parts[1..]) {
            *c = parse_rational(s).map_err(|e| EcqError::Parse(format!("{s}: {e}")))?;
        }
        Ok((parts[0].to_string(), Self::new(a)?))
    }

    /// A curve with the given j: y² = x³ + 1, y² = x³ + x, or the standard family scaled to small integers.
    pub fn from_j(j: &Rational) -> EllipticCurveQ {
        if j.is_zero() {
            return Self::from_ints([0, 0, 0, 0, 1]).unwrap();
        }
        if *j == int(1728) {
            return Self::from_ints([0, 0, 0, 1, 0]).unwrap();
        }
        let (n, d) = (j.numer(), j.denom());
        let m = BigInt::from(1728) * d - n;
        let a: BigInt = BigInt::from(3) * n * &m * d * d;
        let b: BigInt = BigInt::from(2) * n * &m * &m * d * d * d;
        let (a, b) = strip_scaling(a, b);
        let z = Rational::zero();
        Self::new([z.clone(), z.clone(), z, Rational::from_integer(a), Rational::from_integer(b)]).unwrap()
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.a
    }

    pub fn invariants(&self) -> Invariants {
        raw_invariants(&self.a)
    }

    pub fn j(&self) -> Rational {
        self.invariants().j
    }

    pub fn discriminant(&self) -> Rational {
        self.invariants().delta
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }

    /// Scales by u = lcm of the denominators: aᵢ ↦ uⁱaᵢ.
    pub fn integral_model(&self) -> EllipticCurveQ {
        let mut u = BigInt::one();
        for c in &self.a {
            u = u.lcm(c.denom());
        }
        if u.is_one() {
            return self.clone();
        }
        let u = Rational::from_integer(u);
        let mut a = self.a.clone();
        for (c, i) in a.iter_mut().zip([1u32, 2, 3, 4, 6]) {
            *c = &*c * num_traits::pow(u.clone(), i as usize);
        }
        EllipticCurveQ { a }
    }

    /// The twist by d: y² = x³ + d·b2/4·x² + d²·b4/2·x + d³·b6/4, so Δ' = d⁶Δ.
    pub fn quadratic_twist(&self, d: i64) -> Result<EllipticCurveQ> {
        if d == 0 {
            return Err(EcqError::ZeroTwist);
        }
        let inv = self.invariants();
        let d = int(d);
        let z = Rational::zero();
        Self::new([
            z.clone(),
            &d * &inv.b2 / int(4),
            z,
            &d * &d * &inv.b4 / int(2),
            &d * &d * &d * &inv.b6 / int(4),
        ])
    }

    pub fn is_cm(&self) -> bool {
        catalog::Catalog::global().is_cm_j(&self.j())
    }

    /// 4x³ + b2·x² + 2b4·x + b6, whose roots are the x-coordinates of the 2-torsion.
    pub fn two_division_cubic(&self) -> Poly {
        let inv = self.invariants();
        Poly::new(vec![inv.b6, int(2) * inv.b4, inv.b2, int(4)])
    }

    pub fn mod2_image(&self) -> Mod2Image {
        let roots = poly_rational_roots(&self.two_division_cubic()).expect("cubic is nonzero");
        match roots.len() {
            3 => Mod2Image::Cs,
            1 => Mod2Image::B,
            _ if is_rational_square(&self.discriminant()) => Mod2Image::Cn,
            _ => Mod2Image::Full,
        }
    }

    /// Short model y² = x³ + A·x + B with A = −27c4, B = −54c6, isomorphic over ℚ.
    pub fn short_model(&self) -> (Rational, Rational) {
        let inv = self.invariants();
        (int(-27) * inv.c4, int(-54) * inv.c6)
    }
}

/// Divides out u⁴, u⁶ for small primes u dividing both.
fn strip_scaling(mut a: BigInt, mut b: BigInt) -> (BigInt, BigInt) {
    let g = a.gcd(&b);
    if g.is_zero() {
        return (a, b);
    }
    for p in crate::trace::primes_below(10_000) {
        let p = BigInt::from(p);
        if g < p {
            break;
        }
        let (p4, p6) = (p.pow(4), p.pow(6));
        while (&a % &p4).is_zero() && (&b % &p6).is_zero() && !(a.is_zero() && b.is_zero()) {
            a /= &p4;
            b /= &p6;
        }
    }
    (a, b)
}

impl fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}
