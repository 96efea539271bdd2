use crate::{AnalysisError, Result};
use catalog::{Catalog, Family, GroupRecord};
use modmatrix::{fixed_points, fixes_line};

/// Degrees n of cyclic n-isogenies of non-CM elliptic curves over ℚ. 14 is absent:
/// both non-cuspidal rational points of X₀(14) are CM.
pub const ALLOWED_ISOGENY_DEGREES: [u64; 20] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 21, 25, 37];

/// The 29 infinite-family groups of prime level.
pub fn mod_p_family() -> Vec<&'static GroupRecord> {
    Catalog::global()
        .infinite_family()
        .filter(|r| modmatrix::is_prime(r.level as u64))
        .collect()
}

/// Number of cross-prime pairs before sieving.
pub fn presieve_count() -> usize {
    let fam = mod_p_family();
    let mut n = 0;
    for (i, a) in fam.iter().enumerate() {
        n += fam[i + 1..].iter().filter(|b| b.level != a.level).count();
    }
    n
}

/// Degree of the cyclic isogeny forced by a mod-p group: 1, p or p² for 0, 1 or ≥ 2 stable lines.
pub fn forced_isogeny_degree(r: &GroupRecord) -> u64 {
    let p = r.level as u64;
    match fixes_line(&r.group).len() {
        0 => 1,
        1 => p,
        _ => p * p,
    }
}

fn torsion_allowed(dims: &[(u64, usize)]) -> bool {
    // Mazur: ℤ/n (n ≤ 10 or 12) or ℤ/2 × ℤ/2m (m ≤ 4); here every part is elementary
    if dims.iter().any(|&(p, d)| p > 2 && d > 1) {
        return false;
    }
    let odd: u64 = dims.iter().filter(|&&(p, d)| p > 2 && d == 1).map(|&(p, _)| p).product();
    match dims.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, d)| d) {
        2 => odd == 1 || odd == 3,
        1 => [1, 3, 5].contains(&odd),
        _ => [1, 3, 5, 7].contains(&odd),
    }
}

/// Whether a curve could have mod-p image in G₁ and mod-q image in G₂ without a forbidden
/// cyclic isogeny or torsion point. Fine labels (no −I) are used as given for the torsion test.
pub fn admissible_pair(l1: &str, l2: &str) -> Result<bool> {
    let cat = Catalog::global();
    let (a, b) = (cat.lookup(l1)?, cat.lookup(l2)?);
    let (p, q) = (a.prime(), b.prime());
    if p == q {
        return Err(AnalysisError::SamePrime(l1.into(), l2.into()));
    }
    for r in [a, b] {
        if r.is_adic() || !matches!(r.family, Family::Infinite | Family::Finite | Family::Fine) {
            return Err(AnalysisError::Inconsistent(format!("{} is not a mod-p group", r.label)));
        }
    }
    let n = forced_isogeny_degree(a) * forced_isogeny_degree(b);
    if !ALLOWED_ISOGENY_DEGREES.contains(&n) {
        return Ok(false);
    }
    // fixed vectors of a CRT product are pairs of fixed vectors, so dimensions add up per prime
    let dim = |r: &GroupRecord| -> usize {
        let (mut n, mut d) = (fixed_points(&r.group).order(), 0);
        while n > 1 {
            n /= r.level as usize;
            d += 1;
        }
        d
    };
    Ok(torsion_allowed(&[(p as u64, dim(a)), (q as u64, dim(b))]))
}
