use crate::arith::{factor, gcd, inv_mod};
use crate::group::{crt_matrix, fixes_line, project, trace_det_pairs, Subgroup};
use crate::matrix::ModMatrix;
use crate::{contains_minus_identity, ModError, Result};

fn conjugates_into_by(g: &ModMatrix, gi: &ModMatrix, small: &Subgroup, big: &Subgroup) -> bool {
    small
        .generators()
        .iter()
        .all(|s| big.contains_key(g.mul(s).mul(gi).key()))
}

/// Search GL₂(ℤ/p^kℤ) for g with g·small·g⁻¹ ⊆ big.
fn conjugate_into_prime_power(small: &Subgroup, big: &Subgroup) -> Option<ModMatrix> {
    let n = small.modulus();
    if small.generators().iter().all(|s| big.contains(s)) {
        return Some(ModMatrix::identity(n));
    }
    let n64 = n as u64;
    for a in 0..n64 {
        for b in 0..n64 {
            for c in 0..n64 {
                for d in 0..n64 {
                    let g = ModMatrix::raw(a, b, c, d, n);
                    if gcd(g.det() as u64, n64) != 1 {
                        continue;
                    }
                    let gi = g.inverse();
                    if conjugates_into_by(&g, &gi, small, big) {
                        return Some(g);
                    }
                }
            }
        }
    }
    None
}

/// Whether G equals the product of its projections to the prime-power parts of N.
fn is_split(g: &Subgroup) -> Result<bool> {
    let n = g.modulus();
    let mut prod = 1u64;
    for (p, k) in factor(n as u64) {
        prod *= project(g, p.pow(k) as u32)?.order();
    }
    Ok(prod == g.order())
}

/// Some g with g·small·g⁻¹ ⊆ big, or None.
///
/// Composite moduli are handled one prime power at a time, which is only valid
/// when `big` is the full product of its local projections; other cases are refused.
pub fn conjugate_into(small: &Subgroup, big: &Subgroup) -> Result<Option<ModMatrix>> {
    let n = small.modulus();
    if big.modulus() != n {
        return Err(ModError::ModulusMismatch(n, big.modulus()));
    }
    if big.order() % small.order() != 0 {
        return Ok(None);
    }
    if !trace_det_pairs(small).is_subset(&trace_det_pairs(big)) {
        return Ok(None);
    }
    let parts = factor(n as u64);
    if parts.len() == 1 {
        return Ok(conjugate_into_prime_power(small, big));
    }
    if !is_split(big)? {
        if small.generators().iter().all(|s| big.contains(s)) {
            return Ok(Some(ModMatrix::identity(n)));
        }
        return Err(ModError::Unsupported(format!(
            "target group of level {n} is not a product of its local projections"
        )));
    }
    let mut acc: Option<ModMatrix> = None;
    for (p, k) in parts {
        let q = p.pow(k) as u32;
        let Some(local) = conjugate_into_prime_power(&project(small, q)?, &project(big, q)?) else {
            return Ok(None);
        };
        acc = Some(match acc {
            None => local,
            Some(m) => {
                let inv = inv_mod(m.n as u64, q as u64).unwrap();
                crt_matrix(&m, &local, inv)
            }
        });
    }
    Ok(acc)
}

/// Conjugacy in GL₂(ℤ/Nℤ).
pub fn is_conjugate(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    if g.modulus() != h.modulus() {
        return Err(ModError::ModulusMismatch(g.modulus(), h.modulus()));
    }
    if g.order() != h.order()
        || contains_minus_identity(g) != contains_minus_identity(h)
        || trace_det_pairs(g) != trace_det_pairs(h)
        || fixes_line(g).len() != fixes_line(h).len()
    {
        return Ok(false);
    }
    // either side may be the split one
    match conjugate_into(g, h) {
        Err(ModError::Unsupported(_)) => Ok(conjugate_into(h, g)?.is_some()),
        r => Ok(r?.is_some()),
    }
}
