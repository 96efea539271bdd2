use modmatrix::*;
use proptest::prelude::*;

fn matrix(n: u32) -> impl Strategy<Value = ModMatrix> {
    (0..n as i64, 0..n as i64, 0..n as i64, 0..n as i64)
        .prop_filter_map("invertible", move |(a, b, c, d)| ModMatrix::new(a, b, c, d, n).ok())
}

fn group_mod(n: u32) -> impl Strategy<Value = Subgroup> {
    prop::collection::vec(matrix(n), 0..3).prop_map(move |g| closure(&g, n).unwrap())
}

fn group() -> impl Strategy<Value = Subgroup> {
    prop::sample::select(vec![2u32, 3, 4, 5, 6, 7, 8, 9, 10, 12]).prop_flat_map(group_mod)
}

fn conjugate(g: &Subgroup, x: &ModMatrix) -> Subgroup {
    let xi = x.inverse();
    let gens: Vec<ModMatrix> = g.generators().iter().map(|s| x.mul(s).mul(&xi)).collect();
    closure(&gens, g.modulus()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn order_divides_gl2_order(g in group()) {
        prop_assert_eq!(gl2_order(g.modulus()) % g.order(), 0);
    }

    #[test]
    fn projection_is_a_homomorphism(
        (n, m, gens) in prop::sample::select(vec![(4u32, 2u32), (6, 2), (6, 3), (8, 4), (9, 3), (12, 4), (12, 6)])
            .prop_flat_map(|(n, m)| (Just(n), Just(m), prop::collection::vec(matrix(n), 0..3)))
    ) {
        let g = closure(&gens, n).unwrap();
        let reduced: Vec<ModMatrix> = gens.iter().map(|x| x.reduce(m)).collect();
        prop_assert!(project(&g, m).unwrap().same_elements(&closure(&reduced, m).unwrap()));
    }

    #[test]
    fn crt_product_order_and_projections(
        g1 in prop::sample::select(vec![2u32, 3, 4]).prop_flat_map(group_mod),
        g2 in group_mod(5),
    ) {
        let p = crt_product(&g1, &g2).unwrap();
        let (a1, a2) = (adjoin_minus_identity(&g1), adjoin_minus_identity(&g2));
        prop_assert_eq!(p.order(), a1.order() * a2.order());
        prop_assert!(project(&p, g1.modulus()).unwrap().same_elements(&a1));
        prop_assert!(project(&p, 5).unwrap().same_elements(&a2));
    }

    #[test]
    fn crt_product_stable_lines(
        g1 in prop::sample::select(vec![2u32, 3, 4]).prop_flat_map(group_mod),
        g2 in group_mod(5),
    ) {
        let p = crt_product(&g1, &g2).unwrap();
        let both = !fixes_line(&adjoin_minus_identity(&g1)).is_empty()
            && !fixes_line(&adjoin_minus_identity(&g2)).is_empty();
        prop_assert_eq!(!fixes_line(&p).is_empty(), both);
    }

    #[test]
    fn conjugacy_is_an_equivalence(
        (g, x, y, other) in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9])
            .prop_flat_map(|n| (group_mod(n), matrix(n), matrix(n), group_mod(n)))
    ) {
        let h = conjugate(&g, &x);
        let k = conjugate(&h, &y);
        prop_assert!(is_conjugate(&g, &g).unwrap());
        prop_assert!(is_conjugate(&g, &h).unwrap());
        prop_assert!(is_conjugate(&h, &g).unwrap());
        prop_assert!(is_conjugate(&g, &k).unwrap());
        let a = is_conjugate(&g, &other).unwrap();
        prop_assert_eq!(a, is_conjugate(&other, &g).unwrap());
        prop_assert_eq!(a, is_conjugate(&h, &other).unwrap());
    }
}
