use crate::EllipticCurveQ;
use ratq::{int, Poly, Rational};
use std::collections::HashMap;

/// ψ_m for odd m on the short model y² = x³ + Ax + B, as a polynomial in x.
///
/// Works with g_m = ψ_m for odd m and g_m = ψ_m/(2y) for even m, so everything stays in ℚ[x].
pub fn division_polynomial(e: &EllipticCurveQ, m: u32) -> Poly {
    assert!(m % 2 == 1, "only odd division polynomials are polynomials in x");
    let (a, b) = e.short_model();
    let mut memo = HashMap::new();
    g(m, &a, &b, &mut memo)
}

fn p(c: &[Rational]) -> Poly {
    Poly::new(c.to_vec())
}

fn g(m: u32, a: &Rational, b: &Rational, memo: &mut HashMap<u32, Poly>) -> Poly {
    if let Some(v) = memo.get(&m) {
        return v.clone();
    }
    let r = match m {
        0 => Poly::zero(),
        1 | 2 => Poly::one(),
        3 => p(&[-(a * a), int(12) * b, int(6) * a, int(0), int(3)]),
        4 => p(&[
            int(-16) * b * b - int(2) * a * a * a,
            int(-8) * a * b,
            int(-10) * a * a,
            int(40) * b,
            int(10) * a,
            int(0),
            int(2),
        ]),
        _ => {
            let f = p(&[b.clone(), a.clone(), int(0), int(1)]);
            let f2 = &f * &f;
            let k = m / 2;
            if m % 2 == 1 {
                let (gk2, gk, gk1, gkm1) = (g(k + 2, a, b, memo), g(k, a, b, memo), g(k + 1, a, b, memo), g(k - 1, a, b, memo));
                let sixteen = Poly::constant(int(16));
                let t1 = &(&gk2 * &gk.pow(3));
                let t2 = &(&gkm1 * &gk1.pow(3));
                if k % 2 == 0 {
                    &(&(&sixteen * &f2) * t1) - t2
                } else {
                    t1 - &(&(&sixteen * &f2) * t2)
                }
            } else {
                let (gk, gk2, gkm1, gkm2, gk1) =
                    (g(k, a, b, memo), g(k + 2, a, b, memo), g(k - 1, a, b, memo), g(k - 2, a, b, memo), g(k + 1, a, b, memo));
                &gk * &(&(&gk2 * &gkm1.pow(2)) - &(&gkm2 * &gk1.pow(2)))
            }
        }
    };
    memo.insert(m, r.clone());
    r
}
