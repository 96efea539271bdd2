use crate::arith::{factor, gcd, inv_mod, units};
use crate::matrix::ModMatrix;
use crate::{ModError, Result};
use rustc_hash::FxHashSet;
use std::collections::BTreeSet;

/// A finite subgroup of GL₂(ℤ/Nℤ) with its full element list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    n: u32,
    gens: Vec<ModMatrix>,
    elems: Vec<u64>,
    set: FxHashSet<u64>,
}

impl Subgroup {
    pub(crate) fn from_parts(n: u32, gens: Vec<ModMatrix>, elems: Vec<u64>) -> Subgroup {
        let set: FxHashSet<u64> = elems.iter().copied().collect();
        Subgroup { n, gens, elems, set }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn generators(&self) -> &[ModMatrix] {
        &self.gens
    }

    pub fn elements(&self) -> impl Iterator<Item = ModMatrix> + '_ {
        self.elems.iter().map(move |&k| ModMatrix::from_key(k, self.n))
    }

    pub fn contains(&self, m: &ModMatrix) -> bool {
        m.n == self.n && self.set.contains(&m.key())
    }

    pub(crate) fn contains_key(&self, k: u64) -> bool {
        self.set.contains(&k)
    }

    /// Literal (not up-to-conjugacy) containment.
    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    /// G ∩ SL₂.
    pub fn sl2_part(&self) -> Subgroup {
        let elems: Vec<u64> = self
            .elements()
            .filter(|g| g.det() == 1 % self.n)
            .map(|g| g.key())
            .collect();
        let gens = elems.iter().map(|&k| ModMatrix::from_key(k, self.n)).collect();
        Subgroup::from_parts(self.n, gens, elems)
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.n == other.n && self.order() == other.order() && self.elems.iter().all(|k| other.set.contains(k))
    }
}

/// Breadth-first closure of the generators.
pub fn closure(gens: &[ModMatrix], n: u32) -> Result<Subgroup> {
    for g in gens {
        if g.n != n {
            return Err(ModError::ModulusMismatch(g.n, n));
        }
        if gcd(g.det() as u64, n as u64) != 1 {
            return Err(ModError::NotInvertible(g.to_string(), n));
        }
    }
    let id = ModMatrix::identity(n);
    let mut set = FxHashSet::default();
    set.insert(id.key());
    let mut elems = vec![id.key()];
    let mut i = 0;
    while i < elems.len() {
        let x = ModMatrix::from_key(elems[i], n);
        for g in gens {
            let y = x.mul(g).key();
            if set.insert(y) {
                elems.push(y);
            }
        }
        i += 1;
    }
    Ok(Subgroup { n, gens: gens.to_vec(), elems, set })
}

/// |GL₂(ℤ/Nℤ)| = ∏ p^{4(k−1)}(p²−1)(p²−p).
pub fn gl2_order(n: u32) -> u64 {
    factor(n as u64)
        .into_iter()
        .map(|(p, k)| p.pow(4 * (k - 1)) * (p * p - 1) * (p * p - p))
        .product()
}

/// All of GL₂(ℤ/Nℤ), generated by S, T and diag(u, 1).
pub fn full_gl2(n: u32) -> Subgroup {
    let mut gens = vec![
        ModMatrix::new(1, 1, 0, 1, n).unwrap(),
        ModMatrix::new(0, -1, 1, 0, n).unwrap(),
    ];
    for u in units(n) {
        if u != 1 % n {
            gens.push(ModMatrix::new(u as i64, 0, 0, 1, n).unwrap());
        }
    }
    let mut elems = Vec::with_capacity(gl2_order(n) as usize);
    let n64 = n as u64;
    for a in 0..n64 {
        for b in 0..n64 {
            for c in 0..n64 {
                for d in 0..n64 {
                    let m = ModMatrix::raw(a, b, c, d, n);
                    if gcd(m.det() as u64, n64) == 1 {
                        elems.push(m.key());
                    }
                }
            }
        }
    }
    Subgroup::from_parts(n, gens, elems)
}

pub fn contains_minus_identity(g: &Subgroup) -> bool {
    g.contains(&ModMatrix::minus_identity(g.modulus()))
}

pub fn adjoin_minus_identity(g: &Subgroup) -> Subgroup {
    if contains_minus_identity(g) {
        return g.clone();
    }
    let n = g.modulus();
    let mut gens = g.generators().to_vec();
    gens.push(ModMatrix::minus_identity(n));
    let mut elems = g.elems.clone();
    elems.extend(g.elements().map(|m| ModMatrix::raw(
        (n - m.a) as u64,
        (n - m.b) as u64,
        (n - m.c) as u64,
        (n - m.d) as u64,
        n,
    ).key()));
    Subgroup::from_parts(n, gens, elems)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetImage {
    pub values: BTreeSet<u32>,
    pub surjective: bool,
}

pub fn det_image(g: &Subgroup) -> DetImage {
    let values: BTreeSet<u32> = g.elements().map(|m| m.det()).collect();
    let surjective = values.len() == units(g.modulus()).len();
    DetImage { values, surjective }
}

pub fn project(g: &Subgroup, m: u32) -> Result<Subgroup> {
    let n = g.modulus();
    if m < 2 || n % m != 0 {
        return Err(ModError::NotDivisor(m, n));
    }
    if m == n {
        return Ok(g.clone());
    }
    let gens: Vec<ModMatrix> = g.generators().iter().map(|x| x.reduce(m)).collect();
    let mut seen = FxHashSet::default();
    let elems: Vec<u64> = g
        .elements()
        .map(|x| x.reduce(m).key())
        .filter(|k| seen.insert(*k))
        .collect();
    Ok(Subgroup::from_parts(m, gens, elems))
}

fn crt(x: u64, y: u64, n1: u64, n2: u64, inv: u64) -> u64 {
    // z ≡ x (n1), z ≡ y (n2)
    x + n1 * (((y + n2 - x % n2) % n2) * inv % n2)
}

pub(crate) fn crt_matrix(x: &ModMatrix, y: &ModMatrix, inv: u64) -> ModMatrix {
    let (n1, n2) = (x.n as u64, y.n as u64);
    ModMatrix::raw(
        crt(x.a as u64, y.a as u64, n1, n2, inv),
        crt(x.b as u64, y.b as u64, n1, n2, inv),
        crt(x.c as u64, y.c as u64, n1, n2, inv),
        crt(x.d as u64, y.d as u64, n1, n2, inv),
        (n1 * n2) as u32,
    )
}

/// {g mod N₁N₂ : g mod N₁ ∈ ±G₁, g mod N₂ ∈ ±G₂}.
pub fn crt_product(g1: &Subgroup, g2: &Subgroup) -> Result<Subgroup> {
    let (n1, n2) = (g1.modulus(), g2.modulus());
    if gcd(n1 as u64, n2 as u64) != 1 {
        return Err(ModError::NotCoprime(n1, n2));
    }
    if n1 as u64 * n2 as u64 > 65535 {
        return Err(ModError::BadModulus(n1.saturating_mul(n2)));
    }
    let p1 = adjoin_minus_identity(g1);
    let p2 = adjoin_minus_identity(g2);
    let inv = inv_mod(n1 as u64, n2 as u64).unwrap();
    let (i1, i2) = (ModMatrix::identity(n1), ModMatrix::identity(n2));
    let mut gens: Vec<ModMatrix> = p1.generators().iter().map(|x| crt_matrix(x, &i2, inv)).collect();
    gens.extend(p2.generators().iter().map(|y| crt_matrix(&i1, y, inv)));
    let mut elems = Vec::with_capacity((p1.order() * p2.order()) as usize);
    for x in p1.elements() {
        for y in p2.elements() {
            elems.push(crt_matrix(&x, &y, inv).key());
        }
    }
    Ok(Subgroup::from_parts(n1 * n2, gens, elems))
}

/// Canonical representative of the cyclic submodule generated by v (v of order N).
fn line_key(v: (u32, u32), n: u32, us: &[u32]) -> (u32, u32) {
    us.iter()
        .map(|&u| {
            let u = u as u64;
            (
                (u * v.0 as u64 % n as u64) as u32,
                (u * v.1 as u64 % n as u64) as u32,
            )
        })
        .min()
        .unwrap()
}

/// Every line of (ℤ/Nℤ)² (free cyclic submodule of order N) stable under G, by generator.
pub fn fixes_line(g: &Subgroup) -> Vec<(u32, u32)> {
    let n = g.modulus();
    let us = units(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if gcd(gcd(x as u64, y as u64), n as u64) != 1 {
                continue;
            }
            let key = line_key((x, y), n, &us);
            if !seen.insert(key) {
                continue;
            }
            if g.generators().iter().all(|m| line_key(m.apply(key), n, &us) == key) {
                out.push(key);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoints {
    pub vectors: Vec<(u32, u32)>,
}

impl FixedPoints {
    pub fn order(&self) -> usize {
        self.vectors.len()
    }

    /// Largest additive order of a fixed vector.
    pub fn exponent(&self, n: u32) -> u32 {
        self.vectors
            .iter()
            .map(|&(x, y)| n / gcd(gcd(x as u64, y as u64), n as u64) as u32)
            .max()
            .unwrap_or(1)
    }
}

pub fn fixed_points(g: &Subgroup) -> FixedPoints {
    let n = g.modulus();
    let mut vectors = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if g.generators().iter().all(|m| m.apply((x, y)) == (x, y)) {
                vectors.push((x, y));
            }
        }
    }
    FixedPoints { vectors }
}

pub fn trace_det_pairs(g: &Subgroup) -> BTreeSet<(u32, u32)> {
    g.elements().map(|m| (m.trace(), m.det())).collect()
}

/// Full preimage of G under reduction from M to N; M must have the same prime divisors as N.
pub fn lift(g: &Subgroup, m: u32) -> Result<Subgroup> {
    let n = g.modulus();
    if m % n != 0 {
        return Err(ModError::NotDivisor(n, m));
    }
    if m == n {
        return Ok(g.clone());
    }
    let mut gens = Vec::new();
    for x in g.generators() {
        gens.push(ModMatrix::new(x.a as i64, x.b as i64, x.c as i64, x.d as i64, m)?);
    }
    // the kernel is generated by its diagonal and unipotent parts (LDU)
    for c in 1..(m / n) as i64 {
        let k = c * n as i64;
        for (a, b, c, d) in [(1 + k, 0, 0, 1), (1, k, 0, 1), (1, 0, k, 1), (1, 0, 0, 1 + k)] {
            gens.push(ModMatrix::new(a, b, c, d, m)?);
        }
    }
    closure(&gens, m)
}
