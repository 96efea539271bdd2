use ecq::{division_polynomial, trace_of_frobenius, EcqError, EllipticCurveQ, Mod2Image, TraceCache};
use ratq::{int, rat, Rational};

fn c(a: [i64; 5]) -> EllipticCurveQ {
    EllipticCurveQ::from_ints(a).unwrap()
}

/// Affine points on the long model over 𝔽ℓ plus the point at infinity.
fn brute_count(a: [i64; 5], l: i64) -> i64 {
    let r = |v: i64| v.rem_euclid(l);
    let [a1, a2, a3, a4, a6] = a.map(r);
    let mut n = 1;
    for x in 0..l {
        for y in 0..l {
            if r(y * y + a1 * x * y + a3 * y) == r(x * x * x + a2 * x * x + a4 * x + a6) {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn invariants_of_basic_curves() {
    let e = c([0, 0, 0, 0, 1]);
    assert_eq!(e.discriminant(), int(-432));
    assert_eq!(e.j(), int(0));
    let e = c([0, 0, 0, 1, 0]);
    assert_eq!(e.discriminant(), int(-64));
    assert_eq!(e.j(), int(1728));
    assert!(matches!(EllipticCurveQ::from_ints([0, 0, 0, 0, 0]), Err(EcqError::Singular)));
}

#[test]
fn twists() {
    let e = c([1, 0, 1, -126, -552]);
    let t = e.quadratic_twist(-3).unwrap();
    assert_eq!(t.j(), e.j());
    assert_eq!(t.discriminant(), e.discriminant() * int(729));
    assert_eq!(e.quadratic_twist(1).unwrap().j(), e.j());
    assert_eq!(t.quadratic_twist(-3).unwrap().j(), e.j());
    assert_eq!(e.quadratic_twist(0), Err(EcqError::ZeroTwist));
}

#[test]
fn traces_small() {
    let e50 = c([1, 0, 1, -126, -552]);
    assert_eq!(trace_of_frobenius(&e50, 3).unwrap(), 1);
    assert_eq!(trace_of_frobenius(&c([0, 0, 0, 1, 0]), 3).unwrap(), 0);
    assert_eq!(trace_of_frobenius(&e50, 5), Err(EcqError::BadPrime(5)));
    assert_eq!(trace_of_frobenius(&e50, 2), Err(EcqError::BadPrime(2)));
    assert_eq!(trace_of_frobenius(&e50, 9), Err(EcqError::NotPrime(9)));
    assert_eq!(trace_of_frobenius(&e50, 100_003), Err(EcqError::PrimeTooLarge(100_003)));
    for l in [7, 11, 13, 97, 101] {
        assert_eq!(trace_of_frobenius(&e50, l).unwrap(), l as i64 + 1 - brute_count([1, 0, 1, -126, -552], l as i64));
    }
}

#[test]
fn rational_input_is_scaled() {
    let e = EllipticCurveQ::new([int(0), int(0), int(0), rat(1, 4), rat(1, 8)]).unwrap();
    let m = e.integral_model();
    assert!(m.is_integral());
    assert_eq!(m.j(), e.j());
    assert!(trace_of_frobenius(&e, 7).is_ok());
}

#[test]
fn mod2_examples() {
    assert_eq!(c([0, 0, 0, -1, 0]).mod2_image(), Mod2Image::Cs);
    assert_eq!(c([0, 0, 0, 1, 0]).mod2_image(), Mod2Image::B);
    assert_eq!(c([0, 0, 0, 0, -2]).mod2_image(), Mod2Image::Full);
    // x³ − 3x − 1 is irreducible with discriminant 81
    assert_eq!(c([0, 0, 0, -3, -1]).mod2_image(), Mod2Image::Cn);
    assert_eq!(Mod2Image::Full.label(), "full");
}

#[test]
fn cm_detection() {
    assert!(c([0, 0, 0, 0, 1]).is_cm());
    assert!(c([0, 0, 0, 1, 0]).is_cm());
    assert!(!c([1, 0, 1, -126, -552]).is_cm());
}

#[test]
fn from_j_realizes_j() {
    for j in [int(0), int(1728), int(-3375), rat(-25, 2), int(1), rat(7, 3)] {
        let e = EllipticCurveQ::from_j(&j);
        assert_eq!(e.j(), j, "{j}");
        assert!(e.is_integral());
    }
}

#[test]
fn csv_lines() {
    let (label, e) = EllipticCurveQ::parse_csv_line("50a1,1,0,1,-126,-552").unwrap();
    assert_eq!(label, "50a1");
    assert_eq!(e, c([1, 0, 1, -126, -552]));
    assert!(EllipticCurveQ::parse_csv_line("x,1,2").is_err());
    assert!(EllipticCurveQ::parse_csv_line("x,1,2,3,4,zz").is_err());
}

// Chord-and-tangent on y² = x³ + Ax + B, None for the point at infinity.
type Pt = Option<(Rational, Rational)>;

fn add(p: &Pt, q: &Pt, a: &Rational) -> Pt {
    let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
        return p.clone().or(q.clone());
    };
    let lam = if x1 == x2 {
        if (y1 + y2) == int(0) {
            return None;
        }
        (int(3) * x1 * x1 + a) / (int(2) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &lam * &lam - x1 - x2;
    let y3 = lam * (x1 - &x3) - y1;
    Some((x3, y3))
}

fn times(m: u32, p: &Pt, a: &Rational) -> Pt {
    (0..m).fold(None, |acc, _| add(&acc, p, a))
}

#[test]
fn division_polynomials_vanish_on_torsion() {
    // 11a3: (0,0) has order 5; y² = x³ + 1: (0,1) has order 3; 26b1 has a point of order 7
    let cases: [([i64; 5], (i64, i64), u32); 3] =
        [([0, -1, 1, 0, 0], (0, 0), 5), ([0, 0, 0, 0, 1], (0, 1), 3), ([1, -1, 1, -3, 3], (1, 0), 7)];
    for (a, (x, y), ord) in cases {
        let e = c(a);
        let (aa, _) = e.short_model();
        // map (x, y) to the short model X = 36x + 3b2, Y = 108(2y + a1x + a3)
        let [a1, a2, a3, ..] = a;
        let b2 = a1 * a1 + 4 * a2;
        let pt: Pt = Some((int(36 * x + 3 * b2), int(108 * (2 * y + a1 * x + a3))));
        assert_eq!(times(ord, &pt, &aa), None);
        for m in [3u32, 5, 7, 9] {
            let psi = division_polynomial(&e, m);
            assert_eq!(psi.degree(), ((m * m - 1) / 2) as isize);
            assert_eq!(psi.lead(), int(m as i64));
            let vanishes = psi.eval(&pt.as_ref().unwrap().0) == int(0);
            assert_eq!(vanishes, times(m, &pt, &aa).is_none(), "m = {m} on {e}");
        }
    }
}

#[test]
fn cache_persists() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traces.txt");
    let e = c([1, 0, 1, -126, -552]);
    let primes = [3u64, 7, 11, 13];
    {
        let cache = TraceCache::open(&path).unwrap();
        let got: Vec<i64> = cache.traces(&e, &primes).into_iter().map(|r| r.unwrap()).collect();
        assert_eq!(got, primes.map(|l| trace_of_frobenius(&e, l).unwrap()).to_vec());
        assert!(cache.trace(&e, 5).is_err());
    }
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    let cache = TraceCache::open(&path).unwrap();
    assert_eq!(cache.len(), 4);
    assert_eq!(cache.trace(&e, 3).unwrap(), 1);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);

    std::fs::write(&path, "garbage line\n").unwrap();
    assert!(matches!(TraceCache::open(&path), Err(EcqError::Cache(_))));
}
