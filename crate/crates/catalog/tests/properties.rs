use catalog::*;
use modcurve::genus_profile;
use modmatrix::{closure, det_image, fixes_line, ModMatrix};
use proptest::prelude::*;
use ratq::{rat, ratfun_eval, ratfun_preimages, Extended};

fn cat() -> &'static Catalog {
    Catalog::global()
}

fn conjugated(r: &GroupRecord, x: &ModMatrix) -> modmatrix::Subgroup {
    let xi = x.inverse();
    let gens: Vec<ModMatrix> = r.group.generators().iter().map(|s| x.mul(s).mul(&xi)).collect();
    closure(&gens, r.level).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// A point on a fiber product maps to a point on each factor.
    #[test]
    fn pair_values_lie_on_both_factors(i in 0usize..22, a in -30i64..=30, b in 1i64..=12) {
        let p = &cat().pairs()[i];
        let t = Extended::Finite(rat(a, b));
        let j = ratfun_eval(&p.jmap, &t);
        prop_assume!(!j.is_infinity());
        for e in p.types.entries() {
            let JMap::Rational(f) = &cat().lookup(&e.label).unwrap().j_map else {
                panic!("{} has no j-map", e.label)
            };
            prop_assert!(!ratfun_preimages(f, &j).unwrap().is_empty(), "{} at t = {}", e.label, a as f64 / b as f64);
        }
    }

    /// Surjective determinant, genus and isogeny structure do not depend on the conjugacy representative.
    #[test]
    fn record_invariants_are_conjugation_invariant(
        i in 0usize..64,
        (a, b, c, d) in (0i64..64, 0i64..64, 0i64..64, 0i64..64),
    ) {
        let r = &cat().records()[i % cat().records().len()];
        let Ok(x) = ModMatrix::new(a, b, c, d, r.level) else { return Ok(()) };
        let h = conjugated(r, &x);
        prop_assert_eq!(h.order(), r.group.order());
        prop_assert!(det_image(&h).surjective);
        prop_assert_eq!(fixes_line(&h).len(), fixes_line(&r.group).len());
        if r.contains_minus_i && r.level <= 13 {
            prop_assert_eq!(genus_profile(&h).unwrap(), genus_profile(&r.group).unwrap());
        }
    }
}
