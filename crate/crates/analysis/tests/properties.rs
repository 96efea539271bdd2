use analysis::*;
use catalog::{Catalog, JMap};
use num_integer::Integer;
use proptest::prelude::*;
use ratq::{plane_model, ratfun_eval, ratfun_preimages, BigInt, Extended, Poly, RatFun, Rational};
use std::sync::OnceLock;

fn censuses() -> &'static (Vec<CensusRow>, Vec<CensusRow>) {
    static C: OnceLock<(Vec<CensusRow>, Vec<CensusRow>)> = OnceLock::new();
    C.get_or_init(|| (enumerate_exceptional_pairs().unwrap(), enumerate_adic_pairs().unwrap()))
}

fn component_jmap(label: &str) -> &'static RatFun {
    let cat = Catalog::global();
    let mut r = cat.lookup(label).unwrap();
    if let Some(p) = &r.parent {
        r = cat.lookup(p).unwrap();
    }
    match &r.j_map {
        JMap::Rational(f) => f,
        _ => panic!("{label} has no j-map"),
    }
}

fn is_square(q: &Rational) -> bool {
    let sq = |n: &BigInt| n.sign() != num_bigint::Sign::Minus && n.sqrt().pow(2) == *n;
    sq(q.numer()) && sq(q.denom())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=60).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn histogram_sums_to_rows(mask in prop::collection::vec(any::<bool>(), 260), cap in prop::option::of(0u64..300)) {
        let (m, a) = censuses();
        for rows in [m, a] {
            let sub: Vec<CensusRow> = rows.iter().zip(&mask).filter(|(_, k)| **k).map(|(r, _)| r.clone()).collect();
            let h = histogram(&sub, cap);
            prop_assert_eq!(h.total(), sub.len());
            prop_assert_eq!(histogram(rows, cap).total(), rows.len());
            if let Some(c) = cap {
                prop_assert!(h.counts.keys().all(|g| *g < c));
            } else {
                prop_assert_eq!(h.pooled, 0);
            }
        }
    }

    #[test]
    fn pair_jmaps_land_in_both_factors(i in 0usize..64, t in small_rational()) {
        let pairs = Catalog::global().pairs();
        let p = &pairs[i % pairs.len()];
        if let Extended::Finite(j) = ratfun_eval(&p.jmap, &Extended::Finite(t)) {
            let target = Extended::Finite(j);
            for l in p.types.labels() {
                let pre = ratfun_preimages(component_jmap(&l), &target).unwrap();
                prop_assert!(!pre.is_empty(), "{} at {}: no {} preimage", p.types, target.finite().unwrap(), l);
            }
        }
    }

    #[test]
    fn phantom_identity_pointwise(i in 0usize..2, x in small_rational()) {
        let p = &Catalog::global().phantoms()[i];
        let (pulled, cover, defect) = phantom_sides(p).unwrap();
        let at = |f: &RatFun| ratfun_eval(f, &Extended::Finite(x.clone()));
        prop_assert_eq!(at(&pulled.a), at(&cover.a));
        prop_assert_eq!(at(&pulled.b), at(&cover.b));
        let zero = Extended::Finite(Rational::from_integer(0.into()));
        for part in [&defect.a, &defect.b] {
            let v = at(part);
            prop_assert!(v == zero || v.is_infinity());
        }
    }

    #[test]
    fn hyperelliptic_search_is_exact(c in prop::collection::vec(-6i64..=6, 4..=7), h in 1u64..=8) {
        let f = Poly::from_ints(&c);
        prop_assume!(f.degree() >= 3);
        let pts = bounded_point_search(&SearchModel::Hyperelliptic(f.clone()), h).unwrap();
        let mut xs = Vec::new();
        for p in &pts {
            match &p.affine {
                Some((x, y)) => {
                    prop_assert_eq!(y * y, f.eval(x));
                    prop_assert!(p.height <= h);
                    xs.push(x.clone());
                }
                None => {
                    prop_assert!(f.degree() % 2 == 0 && is_square(&f.lead()));
                    prop_assert_eq!(&p.coords[2], "0");
                }
            }
        }
        // brute-force oracle over every x of height ≤ h
        for b in 1..=h as i64 {
            for a in -(h as i64)..=h as i64 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let x = Rational::new(a.into(), b.into());
                let v = f.eval(&x);
                let expected = if !is_square(&v) { 0 } else if v == Rational::from_integer(0.into()) { 1 } else { 2 };
                prop_assert_eq!(xs.iter().filter(|y| **y == x).count(), expected, "x = {}", x);
            }
        }
    }

    #[test]
    fn plane_search_points_lie_on_lines(a in -4i64..=4, b in 1i64..=4, c in -4i64..=4, h in 1u64..=6) {
        // a·x + c = b·y
        let f = RatFun::from_poly(Poly::from_ints(&[c, a]));
        let g = RatFun::from_poly(Poly::from_ints(&[0, b]));
        let m = plane_model(&f, &g, ("f", "g"));
        for p in bounded_point_search(&SearchModel::Plane(m.clone()), h).unwrap() {
            let (x, y) = p.affine.unwrap();
            prop_assert!(m.vanishes_at(&x, &y));
            prop_assert!(p.height <= h);
        }
    }

    #[test]
    fn search_flags_follow_j(h in 1u64..=40) {
        let cat = Catalog::global();
        for p in search_record("2B-3Nn-5B", h).unwrap() {
            let j = &p.j_values[0];
            let cm = j != "inf" && cat.is_cm_j(&ratq::parse_rational(j).unwrap());
            prop_assert_eq!(p.cm, Some(cm));
            prop_assert_eq!(p.cusp, Some(j == "inf"));
        }
    }
}
