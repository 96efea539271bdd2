mod support;

use modcurve::*;
use modmatrix::{closure, crt_product, full_gl2, gl2_order, ModMatrix};
use support::{group, Table};

fn genus_of(labels: &[&str]) -> u64 {
    let t = TypeDescriptor::from_labels(labels).unwrap();
    genus_profile(&type_to_group(&t, &Table).unwrap()).unwrap().genus
}

#[test]
fn full_group_has_one_coset() {
    for n in [2, 3, 5, 6] {
        let a = coset_action(&full_gl2(n)).unwrap();
        assert_eq!(a.index(), 1);
        assert_eq!((a.s[0], a.t[0], a.st[0]), (0, 0, 0));
        let p = genus_profile(&full_gl2(n)).unwrap();
        assert_eq!((p.d, p.nu2, p.nu3, p.cusps, p.genus), (1, 1, 1, 1, 0));
    }
}

#[test]
fn small_indices() {
    assert_eq!(coset_action(&group("2B")).unwrap().index(), 3);
    let pm = closure(&[ModMatrix::minus_identity(5)], 5).unwrap();
    // det is not surjective on ±I alone
    assert!(matches!(coset_action(&pm), Err(ModcurveError::NotQModular(5))));
    // ±I together with diag(1, u) has det surjective and the same SL₂ part
    let g = closure(&[ModMatrix::minus_identity(5), ModMatrix::new(1, 0, 0, 2, 5).unwrap()], 5).unwrap();
    assert_eq!(coset_action(&g).unwrap().index(), 60);
}

#[test]
fn classical_curves() {
    // X₀(p) genera
    for (label, g) in [("5B", 0), ("7B", 0), ("13B", 0)] {
        assert_eq!(genus_profile(&group(label)).unwrap().genus, g);
    }
    assert_eq!(genus_of(&["2B", "5B"]), 0);
    assert_eq!(genus_of(&["3B", "5B"]), 1);
    assert_eq!(genus_of(&["3B", "7B"]), 1);
    assert_eq!(genus_of(&["2B", "7B"]), 1);
    assert_eq!(genus_of(&["2Cn", "7B"]), 0);
    let p = genus_profile(&group("5B")).unwrap();
    assert_eq!((p.d, p.nu2, p.nu3, p.cusps), (6, 2, 0, 2));
}

#[test]
fn published_genera() {
    assert_eq!(genus_of(&["3Nn", "5B", "2B"]), 2);
    for l in ["13S4", "13Nn", "13Ns"] {
        assert_eq!(genus_profile(&group(l)).unwrap().genus, 3, "{l}");
    }
    assert_eq!(genus_of(&["8X4", "13B"]), 1);
    assert_eq!(genus_of(&["4X7", "13B"]), 3);
    assert_eq!(genus_of(&["4X7", "7B"]), 2);
    assert_eq!(genus_of(&["8X5", "7Ns"]), 3);
    assert_eq!(genus_of(&["4X7", "9XE"]), 6);
}

#[test]
fn profile_json_record() {
    let p = genus_profile(&group("5B")).unwrap();
    let r = ProfileRecord { labels: vec!["5B".into()], profile: p };
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["N"], 5);
    assert_eq!(v["d"], 6);
    assert_eq!(v["genus"], 0);
    assert_eq!(v["labels"][0], "5B");
}

#[test]
fn type_descriptors() {
    let t = TypeDescriptor::parse("[3Nn, 5B, 2B]").unwrap();
    assert_eq!(t.to_string(), "[2B,3Nn,5B]");
    assert_eq!(type_level(&t), 30);
    assert_eq!(type_length(&t), 3);
    let a = TypeDescriptor::from_labels(&["8X4", "13B"]).unwrap();
    assert_eq!(type_level(&a), 104);
    assert!(TypeDescriptor::from_labels(&["2B", "4X7"]).is_err());
    assert!(TypeDescriptor::from_labels(&["6X"]).is_err());
    assert!(TypeDescriptor::from_labels(&["B"]).is_err());
}

#[test]
fn type_to_group_orders() {
    let g = type_to_group(&TypeDescriptor::from_labels(&["2B"]).unwrap(), &Table).unwrap();
    assert_eq!(g.order(), 2);
    let g = type_to_group(&TypeDescriptor::from_labels(&["2B", "5B"]).unwrap(), &Table).unwrap();
    assert_eq!((g.modulus(), g.order()), (10, 2 * 80));
    let g = type_to_group(&TypeDescriptor::from_labels(&["8X4", "13B"]).unwrap(), &Table).unwrap();
    assert_eq!(g.modulus(), 104);
    assert!(type_to_group(&TypeDescriptor::from_labels(&["5ZZ"]).unwrap(), &Table).is_err());
}

#[test]
fn group_to_type_examples() {
    assert_eq!(group_to_type(&full_gl2(30), &Table).unwrap(), TypeDescriptor::default());
    let t = TypeDescriptor::from_labels(&["2B", "5B"]).unwrap();
    assert_eq!(group_to_type(&type_to_group(&t, &Table).unwrap(), &Table).unwrap(), t);
    let g = crt_product(&group("3B"), &full_gl2(5)).unwrap();
    assert_eq!(group_to_type(&g, &Table).unwrap().to_string(), "[3B]");
    // the lower Borel is recognised up to conjugacy
    let lower = closure(
        &[ModMatrix::new(1, 0, 1, 1, 7).unwrap(), ModMatrix::new(3, 0, 0, 1, 7).unwrap(), ModMatrix::new(1, 0, 0, 3, 7).unwrap()],
        7,
    )
    .unwrap();
    assert_eq!(group_to_type(&lower, &Table).unwrap().to_string(), "[7B]");
    // adic levels are kept
    let t = TypeDescriptor::from_labels(&["8X4", "5B"]).unwrap();
    assert_eq!(group_to_type(&type_to_group(&t, &Table).unwrap(), &Table).unwrap(), t);
    // a split Cartan mod 7 is not in the table
    let cs = closure(&[ModMatrix::new(3, 0, 0, 1, 7).unwrap(), ModMatrix::new(1, 0, 0, 3, 7).unwrap()], 7).unwrap();
    assert_eq!(group_to_type(&cs, &Table).unwrap().entries()[0].label, UNLABELED);
    assert_eq!(gl2_order(7) % cs.order(), 0);
}

#[test]
fn subtypes() {
    let t = |l: &[&str]| TypeDescriptor::from_labels(l).unwrap();
    assert!(subtype_of(&t(&["3Nn", "5B"]), &t(&["3Nn", "5B"]), &Table).unwrap());
    assert!(subtype_of(&t(&["5Ns"]), &t(&["5S4"]), &Table).unwrap());
    assert!(subtype_of(&t(&["3Ns"]), &t(&["3Nn"]), &Table).unwrap());
    assert!(!subtype_of(&t(&["3Nn"]), &t(&["3Ns"]), &Table).unwrap());
    assert!(subtype_of(&t(&["2B"]), &t(&["2B", "3B"]), &Table).unwrap());
    assert!(!subtype_of(&t(&["2B", "3B"]), &t(&["2B"]), &Table).unwrap());
    // 8X4 reduces into the 2-Borel-or-full world at level 2; compare across levels
    assert!(subtype_of(&t(&["8X4"]), &t(&["8X4"]), &Table).unwrap());
}
