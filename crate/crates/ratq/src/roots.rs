//! Rational roots by q-adic lifting and rational reconstruction.
//!
//! A rational root u/v of a primitive integer polynomial f has u | f(0) and v | lead(f),
//! so it is pinned down by its residue modulo any M > 2·|f(0)|·|lead(f)|. We pick a small
//! prime q at which f stays squarefree, find the roots mod q by brute force, Hensel-lift
//! each one past that bound and reconstruct. Every candidate is checked exactly.

use crate::poly::Poly;
use crate::rational::Rational;
use crate::{RatqError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn poly_rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(RatqError::IdenticallyZero);
    }
    let mut f = p.primitive_integer();
    let mut roots = Vec::new();
    if f[0].is_zero() {
        roots.push(Rational::zero());
        let k = f.iter().position(|c| !c.is_zero()).unwrap();
        f.drain(..k);
    }
    if f.len() >= 2 {
        roots.extend(nonzero_roots(&f));
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Roots of a primitive integer polynomial with f(0) ≠ 0.
fn nonzero_roots(f: &[BigInt]) -> Vec<Rational> {
    if f.len() == 2 {
        return vec![Rational::new(-f[0].clone(), f[1].clone())];
    }
    let mut f = f.to_vec();
    let q = match squarefree_prime(&f) {
        Some(q) => q,
        None => {
            let fp = Poly::from_bigints(&f);
            let g = fp.gcd(&fp.derivative());
            f = fp.div_rem(&g).0.primitive_integer();
            if f.len() == 2 {
                return vec![Rational::new(-f[0].clone(), f[1].clone())];
            }
            squarefree_prime(&f).expect("squarefree polynomial is squarefree modulo some small prime")
        }
    };
    let lead = f.last().unwrap().abs();
    let c0 = f[0].abs();
    let bound = BigInt::from(2) * &c0 * &lead;
    let qb = BigInt::from(q);
    let fq: Vec<u64> = f.iter().map(|c| mod_u64(c, q)).collect();
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let mut out = Vec::new();
    for r0 in 0..q {
        if eval_mod(&fq, r0, q) != 0 {
            continue;
        }
        let mut r = BigInt::from(r0);
        let mut m = qb.clone();
        while m <= bound {
            let m2 = &m * &m;
            let fv = eval_big(&f, &r).mod_floor(&m2);
            let dv = eval_big(&df, &r).mod_floor(&m2);
            let inv = mod_inverse(&dv, &m2).expect("simple root has unit derivative");
            r = (&r - fv * inv).mod_floor(&m2);
            m = m2;
        }
        if let Some((u, v)) = reconstruct(&r, &m, &c0, &lead) {
            let x = Rational::new(u, v);
            if Poly::from_bigints(&f).eval(&x).is_zero() {
                out.push(x);
            }
        }
    }
    out
}

fn squarefree_prime(f: &[BigInt]) -> Option<u64> {
    let lead = f.last().unwrap();
    let mut q = 2u64;
    let mut tried = 0;
    while tried < 400 {
        q = next_prime(q);
        if mod_u64(lead, q) == 0 {
            continue;
        }
        tried += 1;
        let fq: Vec<u64> = f.iter().map(|c| mod_u64(c, q)).collect();
        let dq: Vec<u64> = fq
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % q) % q)
            .collect();
        if gcd_mod(&fq, &dq, q).len() == 1 {
            return Some(q);
        }
    }
    None
}

fn next_prime(n: u64) -> u64 {
    let mut k = n + 1;
    loop {
        if (2..).take_while(|d| d * d <= k).all(|d| k % d != 0) {
            return k;
        }
        k += 1;
    }
}

pub(crate) fn mod_u64(c: &BigInt, q: u64) -> u64 {
    c.mod_floor(&BigInt::from(q)).to_u64().unwrap()
}

fn eval_mod(f: &[u64], x: u64, q: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = (acc * x + c) % q;
    }
    acc
}

fn eval_big(f: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Gcd over 𝔽_q, as a trimmed coefficient vector (length 1 means a unit).
pub(crate) fn gcd_mod(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), q - 2, q);
        while a.len() >= b.len() {
            let coef = a.last().unwrap() * inv % q;
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + q - coef * c % q) % q;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Find u/v ≡ r (mod m) with |u| ≤ ubound and 0 < v ≤ vbound.
fn reconstruct(r: &BigInt, m: &BigInt, ubound: &BigInt, vbound: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1.abs() > ubound {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let (mut u, mut v) = (r1, t1);
    if v.is_zero() {
        return None;
    }
    if v.is_negative() {
        u = -u;
        v = -v;
    }
    if &v > vbound {
        return None;
    }
    Some((u, v))
}

/// Whether j²A + jB + C has a rational root.
pub fn quadratic_section_roots(j: &Rational, a: &Poly, b: &Poly, c: &Poly) -> Result<bool> {
    let p = &(&a.scale(&(j * j)) + &b.scale(j)) + c;
    if p.is_zero() {
        return Err(RatqError::DegenerateSection);
    }
    if p.degree() == 0 {
        return Ok(false);
    }
    Ok(!poly_rational_roots(&p)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruct_small() {
        // 2/3 mod 101: 2 * 3^{-1} = 2 * 34 = 68
        let r = reconstruct(&BigInt::from(68), &BigInt::from(101), &BigInt::from(2), &BigInt::from(3));
        assert_eq!(r, Some((BigInt::from(2), BigInt::from(3))));
    }

    #[test]
    fn gcd_mod_detects_repeated_root() {
        // (x-1)^2 = x^2 - 2x + 1 over F_7, derivative 2x - 2
        let g = gcd_mod(&[1, 5, 1], &[5, 2], 7);
        assert_eq!(g.len(), 2);
    }
}
