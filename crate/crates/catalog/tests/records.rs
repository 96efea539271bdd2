use catalog::*;
use modcurve::{genus_profile, type_to_group, TypeDescriptor};
use modmatrix::{contains_minus_identity, det_image, fixes_line};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use ratq::{parse_rational, rat, Rational};
use std::collections::{BTreeMap, BTreeSet};

fn cat() -> &'static Catalog {
    Catalog::global()
}

#[test]
fn lookup_fine_label() {
    let r = cat().lookup("3B.1.2").unwrap();
    assert_eq!(r.level, 3);
    assert!(!r.contains_minus_i);
    assert_eq!(r.family, Family::Fine);
    assert_eq!(r.example_curve.as_ref().unwrap().name, "50a1");
}

#[test]
fn lookup_adic_label() {
    let r = cat().lookup("8X4").unwrap();
    assert_eq!(r.level, 8);
    assert!(r.maximal);
    assert!(r.contains_minus_i);
    assert!(r.is_adic());
}

#[test]
fn unknown_label_suggests_neighbours() {
    match cat().lookup("ZZTOP") {
        Err(CatalogError::UnknownLabel { nearest, .. }) => assert_eq!(nearest.len(), 3),
        other => panic!("{other:?}"),
    }
    match cat().lookup("5s4") {
        Err(CatalogError::UnknownLabel { nearest, .. }) => assert_eq!(nearest[0], "5S4"),
        other => panic!("{other:?}"),
    }
}

/// j(τ) = E₄³/Δ with Δ = q∏(1 − qⁿ)²⁴ (avoids cancellation in E₄³ − E₆²).
fn j_numeric(tau: Complex64) -> Complex64 {
    let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
    let sigma = |n: u64, k: u32| (1..=n).filter(|d| n % d == 0).map(|d| (d as f64).powi(k as i32)).sum::<f64>();
    let mut e4 = Complex64::new(1.0, 0.0);
    let mut delta = q;
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 1..40u64 {
        qn *= q;
        e4 += qn * 240.0 * sigma(n, 3);
        delta *= (Complex64::new(1.0, 0.0) - qn).powi(24);
    }
    e4 * e4 * e4 / delta
}

#[test]
fn cm_j_invariants_match_class_number_one_orders() {
    let cm = cat().cm_j_invariants();
    assert_eq!(cm.len(), 13);
    assert!(cm.contains(&Rational::zero()));
    assert!(cm.contains(&rat(1728, 1)));
    let mut numeric = Vec::new();
    for d in [3u32, 4, 7, 8, 11, 12, 16, 19, 27, 28, 43, 67, 163] {
        let s = (d as f64).sqrt();
        // generator of the order of discriminant −d
        let tau = if d % 4 == 0 { Complex64::new(0.0, s / 2.0) } else { Complex64::new(0.5, s / 2.0) };
        numeric.push(j_numeric(tau).re);
    }
    for x in numeric {
        let hit = cm.iter().any(|j| {
            let j = j.to_f64().unwrap();
            (j - x).abs() <= 1e-6 * j.abs().max(1.0)
        });
        assert!(hit, "no catalog CM value near {x}");
    }
    // y² = x³ + x has j = 1728
    let (a, b) = (rat(1, 1), rat(0, 1));
    let four_a3 = rat(4, 1) * &a * &a * &a;
    let j = rat(1728, 1) * &four_a3 / (four_a3.clone() + rat(27, 1) * &b * &b);
    assert!(cat().is_cm_j(&j));
}

#[test]
fn finite_lists() {
    let l = cat().finite_j_list("13S4").unwrap();
    assert_eq!(l.len(), 3);
    assert!(l.contains(&parse_rational("2^4*5*13^4*17^3/3^13").unwrap()));
    assert_eq!(cat().finite_j_list("7Ns.3.1").unwrap(), &[parse_rational("3^3*5*7^5/2^7").unwrap()]);
    assert_eq!(cat().finite_j_list("3B").unwrap_err(), CatalogError::NotFiniteList("3B".into()));
    assert!(cat().finite_j_list("13Nn").unwrap().is_empty());
}

#[test]
fn eleven_nn_fixtures_are_reported_missing() {
    assert_eq!(cat().eleven_nn_membership(&rat(1, 1)), Err(CatalogError::FixturesMissing));
    let r = cat().lookup("11Nn").unwrap();
    assert_eq!(r.genus, Some(1));
    assert_eq!(r.rank.as_deref(), Some("positive"));
}

#[test]
fn level_counts_and_maximal_labels() {
    let mut counts = BTreeMap::new();
    for r in cat().records().iter().filter(|r| r.family == Family::Infinite) {
        *counts.entry(r.level).or_insert(0) += 1;
    }
    let expected = BTreeMap::from([(2, 3), (3, 4), (4, 2), (5, 9), (7, 6), (8, 2), (9, 1), (11, 1), (13, 6)]);
    assert_eq!(counts, expected);
    assert_eq!(counts.values().sum::<i32>(), 34);
    let maximal: BTreeSet<&str> = cat().maximal_labels().into_iter().collect();
    let expected: BTreeSet<&str> =
        ["2B", "2Cn", "3B", "3Nn", "5B", "5Nn", "5S4", "7B", "7Nn", "7Ns", "11Nn", "13B"].into();
    assert_eq!(maximal, expected);
}

#[test]
fn record_invariants() {
    for r in cat().records() {
        assert!(det_image(&r.group).surjective, "{}", r.label);
        assert_eq!(contains_minus_identity(&r.group), r.contains_minus_i);
        if let Some(n) = r.implied_isogeny {
            assert_eq!(n, r.level);
            assert!(!fixes_line(&r.group).is_empty(), "{}", r.label);
        }
        if matches!(r.j_map, JMap::Rational(_)) && (r.contains_minus_i || r.level == 2) {
            assert_eq!(genus_profile(&r.pm_group()).unwrap().genus, 0, "{}", r.label);
        }
    }
    assert_eq!(genus_profile(&cat().lookup("11Nn").unwrap().group).unwrap().genus, 1);
}

#[test]
fn pair_jmaps_cover_genus_zero_products() {
    assert_eq!(cat().pairs().len(), 22);
    for p in cat().pairs() {
        let g = type_to_group(&p.types, cat()).unwrap();
        assert_eq!(genus_profile(&g).unwrap().genus, 0, "{}", p.types);
    }
    let t = TypeDescriptor::from_labels(&["3Nn", "5B"]).unwrap();
    assert!(cat().pair_jmap(&t).is_some());
}

#[test]
fn genus_one_fixtures() {
    let infinite: Vec<String> =
        cat().genus1().iter().filter(|g| g.infinite && !g.phantom).map(|g| g.types.to_string()).collect();
    assert_eq!(infinite.len(), 7);
    assert_eq!(cat().genus1().iter().filter(|g| g.phantom).count(), 2);
    assert_eq!(cat().phantoms().len(), 2);
    let x015 = cat().genus1_fixture(&TypeDescriptor::from_labels(&["3B", "5B"]).unwrap()).unwrap();
    assert_eq!(x015.curve.as_deref(), Some("15a1"));
    assert!(!x015.infinite);
}

#[test]
fn search_fixtures() {
    let s = cat().search("4X7-5Nn").unwrap();
    assert_eq!(s.f.degree(), 6);
    assert_eq!(s.f.eval(&Rational::zero()), rat(4, 1));
    assert_eq!(cat().search("2B-3Nn-5B").unwrap().infinity.len(), 2);
}

#[test]
fn corrupted_data_fails_validation() {
    let good = include_str!("../data/catalog.toml");
    // a generator typo that breaks the determinant
    let bad = good.replacen("generators = [[2,1,0,2], [1,0,0,2]]", "generators = [[2,1,0,2], [1,0,0,1]]", 1);
    assert!(matches!(Catalog::from_toml(&bad), Err(CatalogError::Invalid(..))));
    // a j-map with the wrong degree
    let bad = good.replacen("jmap = \"(t+16)^3/t\"", "jmap = \"(t+16)^2/t\"", 1);
    assert!(matches!(Catalog::from_toml(&bad), Err(CatalogError::Invalid(..))));
    // a false implied isogeny
    let bad = good.replacen("jmap = \"t^3\"", "jmap = \"t^3\"\nimplied_isogeny = 3", 1);
    assert!(matches!(Catalog::from_toml(&bad), Err(CatalogError::Invalid(..))));
    assert!(matches!(Catalog::from_toml("nonsense = ["), Err(CatalogError::Parse(_))));
}
