use catalog::{Catalog, Family, JMap};
use ecq::{EllipticCurveQ, TraceCache};
use galimage::{Assumptions, Classifier, ClassifyConfig, GalError, Method};
use ratq::{parse_rational, Rational};

fn curve(a: [i64; 5]) -> EllipticCurveQ {
    EllipticCurveQ::from_ints(a).unwrap()
}

fn classifier(cache: &TraceCache) -> Classifier<'_> {
    Classifier::new(ClassifyConfig::default(), cache)
}

#[test]
fn curve_50a1() {
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    let e = curve([1, 0, 1, -126, -552]);
    let r = c.report("50a1", &e).unwrap();
    assert_eq!(r.images[&3].label, "3B.1.2");
    assert_eq!(r.images[&5].label, "5B.1.3");
    assert!(r.images[&7].is_surjective());
    assert_eq!(r.s_e, vec![3, 5]);
    assert_eq!(r.s_e_infty, vec![2, 3, 5]);
    assert_eq!(r.adic[&2].k, Some(3));
    assert_eq!(r.adic[&2].label.as_deref(), Some("8X4"));
    assert_eq!(r.adic[&3].k, Some(1));
    assert_eq!(r.serre_constant.value, 120);
    assert!(r.assumptions.is_empty());
    assert_eq!(r.exceptional_type().unwrap().to_string(), "[3B.1.2,5B.1.3]");
    assert_eq!(r.adic_type().unwrap().to_string(), "[8X4,3B.1.2,5B.1.3]");
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["serre_constant"]["value"], 120);
    assert_eq!(json["images"]["3"]["label"], "3B.1.2");
    assert!(json["S_E"].is_array() && json["S_E_infty"].is_array());
}

#[test]
fn serre_curve_3891b1() {
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    let e = curve([1, 0, 0, 0, 3]);
    let r = c.report("3891b1", &e).unwrap();
    assert!(r.s_e.is_empty(), "{:?}", r.images);
    assert!(r.s_e_infty.is_empty());
    assert_eq!(r.serre_constant.value, 1);
    assert_eq!(r.exceptional_type().unwrap().to_string(), "[]");
    assert_eq!(c.adic_level_2(&e).unwrap().k, None);
    assert_eq!(c.adic_level_3(&e).unwrap().k, None);
}

#[test]
fn thirteen_s4_curves() {
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    for j in Catalog::global().finite_j_list("13S4").unwrap() {
        let e = EllipticCurveQ::from_j(j);
        let r = c.report("", &e).unwrap();
        assert_eq!(r.images[&13].label, "13S4");
        assert_eq!(r.images[&13].method, Method::FiniteList);
        assert!(r.s_e.contains(&13));
        assert_eq!(r.serre_constant.value, 13, "j = {j}: {:?}", r.images);
    }
}

#[test]
fn nine_xe_member() {
    let j = parse_rational("-2^2*3^7*5^3*439^3").unwrap();
    let cache = TraceCache::memory();
    let a = classifier(&cache).adic_level_3(&EllipticCurveQ::from_j(&j)).unwrap();
    assert_eq!((a.k, a.label.as_deref()), (Some(2), Some("9XE")));
}

#[test]
fn fiber_48a6() {
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    for s in ["-3^3*11^3/2^2", "3^2*23^3/2^6"] {
        let e = EllipticCurveQ::from_j(&parse_rational(s).unwrap());
        let r = c.report(s, &e).unwrap();
        assert!(r.images[&3].pm_label == "3B", "{s}: {:?}", r.images[&3]);
        assert!(r.images[&2].is_surjective());
        assert_eq!(r.adic[&2].k, Some(2));
        assert_eq!(r.adic[&2].label.as_deref(), Some("4X3"));
    }
}

#[test]
fn rational_two_torsion_gives_level_one() {
    let cache = TraceCache::memory();
    let a = classifier(&cache).adic_level_2(&curve([0, 0, 0, -7, 6])).unwrap();
    assert_eq!(a.k, Some(1));
}

#[test]
fn cm_inputs_rejected() {
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    assert!(matches!(c.report("", &curve([0, 0, 0, 0, 1])), Err(GalError::Cm(_))));
    assert!(matches!(c.adic_level_2(&curve([0, 0, 0, 1, 0])), Err(GalError::Cm(_))));
}

/// Every example curve in the catalog is classified to its own label.
#[test]
fn catalog_examples_classify_to_their_label() {
    let cat = Catalog::global();
    let cache = TraceCache::memory();
    let c = classifier(&cache);
    let mut checked = 0;
    for r in cat.records() {
        let Some(ex) = &r.example_curve else { continue };
        let e = EllipticCurveQ::from_bigints(&ex.coeffs).unwrap();
        let p = r.prime();
        let got = if r.is_adic() {
            let a = if p == 2 { c.adic_level_2(&e) } else { c.adic_level_3(&e) }.unwrap();
            a.label.unwrap_or_default()
        } else {
            let im = c.mod_p_image(&e, p).unwrap();
            if r.family == Family::Fine { im.label } else { im.pm_label }
        };
        assert_eq!(got, r.label, "example {}", ex.name);
        if let JMap::Finite(list) = &r.j_map {
            assert!(list.contains(&e.j()));
        }
        checked += 1;
    }
    assert!(checked >= 40, "{checked}");
}

#[test]
fn thirteen_surjective_uses_no_list_assumption_when_fingerprint_excludes() {
    let cache = TraceCache::memory();
    let im = classifier(&cache).mod_p_image(&curve([1, 0, 0, 0, 3]), 13).unwrap();
    assert!(im.is_surjective());
    let j: Rational = curve([1, 0, 0, 0, 3]).j();
    assert!(!Catalog::global().finite_j_list("13S4").unwrap().contains(&j));
}

#[test]
fn assumptions_can_be_switched_off() {
    let cache = TraceCache::memory();
    let strict = Classifier::new(ClassifyConfig { assume: Assumptions::NONE, ..Default::default() }, &cache);
    let usual = classifier(&cache);
    // no conjecture is used for 50a1, so the strict report is the same
    let e = curve([1, 0, 1, -126, -552]);
    let (a, b) = (strict.report("50a1", &e).unwrap(), usual.report("50a1", &e).unwrap());
    assert_eq!(a.images, b.images);
    assert_eq!(a.serre_constant, b.serre_constant);
    for r in [&a, &b] {
        assert!(r.images.values().all(|v| v.assumptions.is_empty()));
    }
}
