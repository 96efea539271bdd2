use crate::{EcqError, EllipticCurveQ, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use ratq::Rational;

/// Largest ℓ accepted for exhaustive point counting.
pub const MAX_TRACE_PRIME: u64 = 100_000;

pub fn primes_below(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n.max(2)];
    sieve[0] = false;
    if n > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            for k in (i * i..n).step_by(i) {
                sieve[k] = false;
            }
        }
        i += 1;
    }
    (0..n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn residue(q: &BigInt, l: u64) -> u64 {
    q.mod_floor(&BigInt::from(l)).to_u64().unwrap()
}

/// a_ℓ = ℓ + 1 − #E(𝔽_ℓ) on the integral model of E.
pub fn trace_of_frobenius(e: &EllipticCurveQ, l: u64) -> Result<i64> {
    if !is_prime(l) {
        return Err(EcqError::NotPrime(l));
    }
    if l > MAX_TRACE_PRIME {
        return Err(EcqError::PrimeTooLarge(l));
    }
    let m = e.integral_model();
    let delta = m.discriminant();
    if residue(delta.numer(), l) == 0 {
        return Err(EcqError::BadPrime(l));
    }
    let a = if l <= 3 { naive_trace(&m, l) } else { character_sum_trace(&m, l) };
    assert!(a * a <= 4 * l as i64, "Hasse bound violated: a_{l} = {a}");
    Ok(a)
}

fn reduce(q: &Rational, l: u64) -> u64 {
    // integral model, so the denominator is 1
    residue(q.numer(), l)
}

fn naive_trace(m: &EllipticCurveQ, l: u64) -> i64 {
    let [a1, a2, a3, a4, a6] = m.coeffs().clone().map(|c| reduce(&c, l));
    let mut count = 1; // the point at infinity
    for x in 0..l {
        for y in 0..l {
            let lhs = (y * y + a1 * x * y + a3 * y) % l;
            let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % l;
            if lhs == rhs {
                count += 1;
            }
        }
    }
    l as i64 + 1 - count
}

/// For ℓ ≥ 5: a_ℓ = −Σₓ χ(x³ + Ax + B) on the short model.
fn character_sum_trace(m: &EllipticCurveQ, l: u64) -> i64 {
    let (a, b) = m.short_model();
    let (a, b) = (reduce(&a, l), reduce(&b, l));
    let mut chi = vec![-1i64; l as usize];
    chi[0] = 0;
    for y in 1..l {
        chi[(y * y % l) as usize] = 1;
    }
    let mut sum = 0;
    for x in 0..l {
        let v = ((x * x % l) * x + a * x + b) % l;
        sum += chi[v as usize];
    }
    -sum
}
