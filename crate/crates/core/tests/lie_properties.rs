mod common;

use proptest::prelude::*;
use qflag::lie::{LieAlgebra, Weight};

const ALGEBRAS: &[&str] = &["sl2", "sl3", "sl4", "so5", "so7"];

fn dominant_with_sum(rank: usize, total: i64) -> Vec<Weight> {
    qflag::verify::bounded_vectors(rank, total as u32, total as u32)
        .into_iter()
        .map(|v| Weight(v.into_iter().map(i64::from).collect()))
        .collect()
}

#[test]
fn irreducibles_decompose_to_themselves() {
    for name in ALGEBRAS {
        let g = LieAlgebra::named(name).unwrap();
        for lambda in dominant_with_sum(g.rank, 4) {
            let ch = g.irreducible_character(&lambda).unwrap();
            let dec = g.decompose_character(&ch).unwrap();
            assert_eq!(dec.len(), 1, "{name} {lambda}");
            assert_eq!(dec[&lambda], 1, "{name} {lambda}");
            assert_eq!(ch.mass() as u64, g.weyl_dim(&lambda).unwrap(), "{name} {lambda}");
        }
    }
}

#[test]
fn rep_weight_counts_are_the_fundamental_dimensions() {
    for (name, reps, dims) in [
        ("sl2", vec![1], vec![2]),
        ("sl3", vec![1, 2], vec![3, 3]),
        ("sl4", vec![1, 2, 3], vec![4, 6, 4]),
        ("so5", vec![1, 2], vec![5, 4]),
        ("so7", vec![1, 3], vec![7, 8]),
    ] {
        let g = LieAlgebra::named(name).unwrap();
        for (i, d) in reps.into_iter().zip(dims) {
            assert_eq!(g.rep_weights(i).unwrap().len(), d, "{name} Λ{i}");
            assert_eq!(g.rep_character(i).unwrap().mass(), d as i64);
        }
    }
}

#[test]
fn characters_live_below_the_highest_weight() {
    for name in ALGEBRAS {
        let g = LieAlgebra::named(name).unwrap();
        for lambda in dominant_with_sum(g.rank, 3) {
            for w in g.irreducible_character(&lambda).unwrap().support.keys() {
                let c = g.root_coordinates(&lambda.sub(w));
                assert!(c.iter().all(|x| x.is_integer() && *x >= 0.into()), "{name} {lambda} {w}");
            }
        }
    }
}

fn decomposition_of(g: &LieAlgebra, ch: &qflag::lie::Character) -> Vec<(Vec<i64>, i64)> {
    g.decompose_character(ch).unwrap().into_iter().map(|(w, m)| (w.0, m)).collect()
}

#[test]
fn quadratic_tensor_products_of_fundamentals() {
    // symmetric squares and mixed products of the fundamental representations
    let sl3 = LieAlgebra::named("sl3").unwrap();
    let (a, b) = (sl3.rep_character(1).unwrap(), sl3.rep_character(2).unwrap());
    assert_eq!(decomposition_of(&sl3, &common::sym2(&a)), vec![(vec![2, 0], 1)]);
    assert_eq!(decomposition_of(&sl3, &a.mul(&b)), vec![(vec![0, 0], 1), (vec![1, 1], 1)]);
    assert_eq!(decomposition_of(&sl3, &common::sym2(&b)), vec![(vec![0, 2], 1)]);

    let sl4 = LieAlgebra::named("sl4").unwrap();
    let r: Vec<_> = (1..=3).map(|i| sl4.rep_character(i).unwrap()).collect();
    assert_eq!(decomposition_of(&sl4, &r[0].mul(&r[2])), vec![(vec![0, 0, 0], 1), (vec![1, 0, 1], 1)]);
    assert_eq!(decomposition_of(&sl4, &common::sym2(&r[1])), vec![(vec![0, 0, 0], 1), (vec![0, 2, 0], 1)]);
    assert_eq!(decomposition_of(&sl4, &r[0].mul(&r[1])), vec![(vec![0, 0, 1], 1), (vec![1, 1, 0], 1)]);
    assert_eq!(decomposition_of(&sl4, &r[1].mul(&r[2])), vec![(vec![0, 1, 1], 1), (vec![1, 0, 0], 1)]);

    let so5 = LieAlgebra::named("so5").unwrap();
    let (v, s) = (so5.rep_character(1).unwrap(), so5.rep_character(2).unwrap());
    assert_eq!(decomposition_of(&so5, &common::sym2(&v)), vec![(vec![0, 0], 1), (vec![2, 0], 1)]);
    assert_eq!(decomposition_of(&so5, &v.mul(&s)), vec![(vec![0, 1], 1), (vec![1, 1], 1)]);
    assert_eq!(decomposition_of(&so5, &common::sym2(&s)), vec![(vec![0, 2], 1)]);

    let so7 = LieAlgebra::named("so7").unwrap();
    let (v, s) = (so7.rep_character(1).unwrap(), so7.rep_character(3).unwrap());
    assert_eq!(decomposition_of(&so7, &common::sym2(&v)), vec![(vec![0, 0, 0], 1), (vec![2, 0, 0], 1)]);
    assert_eq!(decomposition_of(&so7, &v.mul(&s)), vec![(vec![0, 0, 1], 1), (vec![1, 0, 1], 1)]);
    // the singlet comes from k = 0 in the sum over k ≡ n, n+1 mod 4
    assert_eq!(decomposition_of(&so7, &common::sym2(&s)), vec![(vec![0, 0, 0], 1), (vec![0, 0, 2], 1)]);
}

#[test]
fn products_preserve_dimension() {
    for (name, reps) in [("sl3", vec![1, 2]), ("sl4", vec![1, 2, 3]), ("so5", vec![1, 2]), ("so7", vec![1, 3])] {
        let g = LieAlgebra::named(name).unwrap();
        for &i in &reps {
            for &j in &reps {
                let (a, b) = (Weight::fundamental(g.rank, i), Weight::fundamental(g.rank, j));
                let prod = g.irreducible_character(&a).unwrap().mul(&g.irreducible_character(&b).unwrap());
                let total: u64 = g
                    .decompose_character(&prod)
                    .unwrap()
                    .iter()
                    .map(|(w, m)| *m as u64 * g.weyl_dim(w).unwrap())
                    .sum();
                assert_eq!(total, g.weyl_dim(&a).unwrap() * g.weyl_dim(&b).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn weyl_dimension_is_multiplicative_on_products(a in 0i64..3, b in 0i64..3, c in 0i64..2, d in 0i64..2) {
        let g = LieAlgebra::named("so5").unwrap();
        let (l, m) = (Weight(vec![a, b]), Weight(vec![c, d]));
        let prod = g.irreducible_character(&l).unwrap().mul(&g.irreducible_character(&m).unwrap());
        let total: u64 = g.decompose_character(&prod).unwrap().iter().map(|(w, k)| *k as u64 * g.weyl_dim(w).unwrap()).sum();
        prop_assert_eq!(total, g.weyl_dim(&l).unwrap() * g.weyl_dim(&m).unwrap());
    }

    #[test]
    fn characters_are_weyl_invariant(a in 0i64..3, b in 0i64..3, c in 0i64..3) {
        let g = LieAlgebra::named("so7").unwrap();
        let ch = g.irreducible_character(&Weight(vec![a, b, c])).unwrap();
        for (w, m) in &ch.support {
            prop_assert_eq!(ch.get(&g.dominant_conjugate(w)), *m);
        }
    }
}
