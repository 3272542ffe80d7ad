use proptest::prelude::*;
use qflag::fixtures::Fixture;
use qflag::groebner::{buchberger, CoeffExt, MonomialOrder, Polynomial};

#[test]
fn fixture_bases_are_complete_and_homogeneous() {
    for name in ["sl3", "sl4", "so5"] {
        let fx = Fixture::load(name).unwrap();
        let gb = fx.groebner().unwrap();
        for g in fx.generators().unwrap() {
            assert!(gb.reduce(&g).is_zero(), "{name}: generator does not reduce to zero");
        }
        assert!(gb.s_pairs_reduce_to_zero(), "{name}");
        for p in &gb.polys {
            assert!(p.is_homogeneous(&fx.variables), "{name}: {}", p.format(&fx.names(), &gb.order));
        }
        let lt = fx.lt_ideal().unwrap();
        for (i, a) in lt.generators().iter().enumerate() {
            for (j, b) in lt.generators().iter().enumerate() {
                assert!(i == j || !a.iter().zip(b).all(|(x, y)| x <= y), "{name}: non-minimal leading terms");
            }
        }
    }
}

#[test]
fn bases_are_deterministic() {
    for name in ["sl4", "so5"] {
        let fx = Fixture::load(name).unwrap();
        let a = fx.groebner().unwrap();
        let mut gens = fx.generators().unwrap();
        gens.reverse();
        let b = buchberger(&gens, &fx.order).unwrap();
        assert_eq!(a.polys, b.polys, "{name}");
    }
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..4, -2i64..3), 1..4).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(e, a, b)| (e, CoeffExt::from_ratios(a, 1, b, 2))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn random_bases_reduce_their_generators(gens in prop::collection::vec(arb_poly(3), 1..4)) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let order = MonomialOrder::new(vec![2, 0, 1]).unwrap();
        let gb = buchberger(&gens, &order).unwrap();
        for g in &gens {
            prop_assert!(gb.reduce(g).is_zero());
        }
        prop_assert!(gb.s_pairs_reduce_to_zero());
        for p in &gb.polys {
            prop_assert!(p.leading_term(&order).unwrap().1.is_one());
        }
    }
}
