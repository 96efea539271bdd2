use crate::arith::{gcd, inv_mod};
use crate::{ModError, Result};
use std::fmt;

/// [[a, b], [c, d]] with entries reduced mod n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub n: u32,
}

impl ModMatrix {
    /// Reduce integer entries mod n; errors unless the determinant is a unit.
    pub fn new(a: i64, b: i64, c: i64, d: i64, n: u32) -> Result<Self> {
        if !(2..=65535).contains(&n) {
            return Err(ModError::BadModulus(n));
        }
        let r = |v: i64| v.rem_euclid(n as i64) as u32;
        let m = ModMatrix { a: r(a), b: r(b), c: r(c), d: r(d), n };
        if gcd(m.det() as u64, n as u64) != 1 {
            return Err(ModError::NotInvertible(m.to_string(), n));
        }
        Ok(m)
    }

    pub(crate) fn raw(a: u64, b: u64, c: u64, d: u64, n: u32) -> Self {
        let n64 = n as u64;
        ModMatrix {
            a: (a % n64) as u32,
            b: (b % n64) as u32,
            c: (c % n64) as u32,
            d: (d % n64) as u32,
            n,
        }
    }

    pub fn identity(n: u32) -> Self {
        Self::raw(1, 0, 0, 1, n)
    }

    pub fn minus_identity(n: u32) -> Self {
        Self::raw(n as u64 - 1, 0, 0, n as u64 - 1, n)
    }

    pub fn det(&self) -> u32 {
        let n = self.n as u64;
        ((self.a as u64 * self.d as u64 + n * n - (self.b as u64 * self.c as u64) % (n * n)) % n) as u32
    }

    pub fn trace(&self) -> u32 {
        ((self.a as u64 + self.d as u64) % self.n as u64) as u32
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        let (a, b, c, d) = (self.a as u64, self.b as u64, self.c as u64, self.d as u64);
        let (e, f, g, h) = (o.a as u64, o.b as u64, o.c as u64, o.d as u64);
        Self::raw(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.n)
    }

    pub fn inverse(&self) -> ModMatrix {
        let n = self.n as u64;
        let di = inv_mod(self.det() as u64, n).expect("invertible by construction");
        Self::raw(
            self.d as u64 * di,
            (n - self.b as u64) * di,
            (n - self.c as u64) * di,
            self.a as u64 * di,
            self.n,
        )
    }

    /// Entrywise reduction to a divisor m of n.
    pub fn reduce(&self, m: u32) -> ModMatrix {
        Self::raw(self.a as u64, self.b as u64, self.c as u64, self.d as u64, m)
    }

    pub fn apply(&self, v: (u32, u32)) -> (u32, u32) {
        let n = self.n as u64;
        (
            ((self.a as u64 * v.0 as u64 + self.b as u64 * v.1 as u64) % n) as u32,
            ((self.c as u64 * v.0 as u64 + self.d as u64 * v.1 as u64) % n) as u32,
        )
    }

    /// Packs the four entries into one word (each entry < 2¹⁶).
    pub fn key(&self) -> u64 {
        (self.a as u64) << 48 | (self.b as u64) << 32 | (self.c as u64) << 16 | self.d as u64
    }

    pub fn from_key(k: u64, n: u32) -> ModMatrix {
        ModMatrix {
            a: (k >> 48) as u32,
            b: (k >> 32 & 0xffff) as u32,
            c: (k >> 16 & 0xffff) as u32,
            d: (k & 0xffff) as u32,
            n,
        }
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Parse `[a,b,c,d], [a,b,c,d]` or `a,b,c,d; a,b,c,d` (row-major) modulo n.
pub fn parse_generators(text: &str, n: u32) -> Result<Vec<ModMatrix>> {
    let cleaned: String = text
        .chars()
        .map(|c| if c == '[' || c == ']' || c == ';' { ' ' } else { c })
        .collect();
    let nums: Vec<i64> = cleaned
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| ModError::Parse(format!("{s}: {e}"))))
        .collect::<Result<_>>()?;
    if nums.len() % 4 != 0 {
        return Err(ModError::Parse(format!("{} entries is not a multiple of 4", nums.len())));
    }
    nums.chunks(4)
        .map(|m| ModMatrix::new(m[0], m[1], m[2], m[3], n))
        .collect()
}
