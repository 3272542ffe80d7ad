mod common;

use proptest::prelude::*;
use qflag::affine::{
    enumerate_compositions, graded_variables, hilbert_affinized, hilbert_affinized_jobs, hilbert_free_affinized,
    hilbert_free_finite, unit_variables, QuadraticModel,
};
use qflag::fixtures::Fixture;
use qflag::lie::{Character, LieAlgebra, Weight};
use qflag::qseries::{inv_poch, poch, CharacterQSeries, QSeries};
use qflag::verify::{bounded_vectors, ModelContext};

const FIXTURES: &[&str] = &["sl2", "sl3", "sl4", "so5", "so7"];

fn allowed(fx: &Fixture, m: &[u32]) -> bool {
    m.iter().enumerate().all(|(i, &k)| k == 0 || fx.file.reps.contains(&(i + 1)))
}

#[test]
fn constant_layer_is_the_standard_monomial_character() {
    for name in FIXTURES {
        let ctx = ModelContext::load(name).unwrap();
        let lt = ctx.fixture.lt_ideal().unwrap();
        for m in bounded_vectors(ctx.algebra().rank, 3, 3) {
            if !allowed(&ctx.fixture, &m) {
                continue;
            }
            let h = hilbert_affinized(&ctx.model, &m, 0);
            let want = common::standard_monomial_character(&ctx.fixture, &lt, &m);
            assert_eq!(h.constant_layer(), want, "{name} {m:?}");
        }
    }
}

#[test]
fn q_to_one_limit_is_the_tensor_product() {
    for name in FIXTURES {
        let ctx = ModelContext::load(name).unwrap();
        let g = ctx.algebra();
        for m in bounded_vectors(g.rank, 3, 3) {
            if !allowed(&ctx.fixture, &m) {
                continue;
            }
            let mut p = hilbert_affinized(&ctx.model, &m, 24);
            for &k in &m {
                p = p.mul_poly(&poch(k as usize));
            }
            let mut at_one = Character::new();
            for (w, s) in p.terms() {
                let poly = s.to_polynomial(12).unwrap_or_else(|e| panic!("{name} {m:?} {w}: {e}"));
                at_one.add_term(w.clone(), i64::try_from(poly.eval_at_one()).unwrap());
            }
            let mut want = Character::trivial(g.rank);
            for (i, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    want = want.mul(&g.rep_character(i + 1).unwrap());
                }
            }
            assert_eq!(at_one, want, "{name} {m:?}");
            let dims: u64 = g.decompose_character(&at_one).unwrap().iter().map(|(w, k)| *k as u64 * g.weyl_dim(w).unwrap()).sum();
            assert_eq!(dims as i64, want.mass());
        }
    }
}

#[test]
fn composition_counts() {
    let so5 = LieAlgebra::named("so5").unwrap();
    let vars = graded_variables(&so5, &[1, 2]).unwrap();
    for m in bounded_vectors(2, 4, 6) {
        let n = enumerate_compositions(&vars, &m).len() as u64;
        assert_eq!(n, common::stars_and_bars(&[5, 4], &m), "{m:?}");
    }
    let sl4 = LieAlgebra::named("sl4").unwrap();
    let vars = graded_variables(&sl4, &[1, 2, 3]).unwrap();
    for m in bounded_vectors(3, 3, 4) {
        assert_eq!(enumerate_compositions(&vars, &m).len() as u64, common::stars_and_bars(&[4, 6, 4], &m));
    }
    let sl2 = LieAlgebra::named("sl2").unwrap();
    let vars = graded_variables(&sl2, &[1]).unwrap();
    assert_eq!(enumerate_compositions(&vars, &[2]), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    assert_eq!(enumerate_compositions(&vars, &[0]), vec![vec![0, 0]]);
}

#[test]
fn aux_variable_alone_fills_its_degree() {
    let fx = Fixture::load("so5").unwrap();
    let model = fx.quadratized().unwrap().model;
    let t = model.variables.len() - 1;
    let all = enumerate_compositions(&model.variables, &[2, 0]);
    assert!(all.iter().any(|m| m[t] == 1 && m.iter().sum::<u32>() == 1));
}

#[test]
fn parallel_enumeration_is_bit_identical() {
    for (name, m) in [("sl4", vec![2, 1, 1]), ("so5", vec![3, 1]), ("so7", vec![2, 0, 2])] {
        let ctx = ModelContext::load(name).unwrap();
        let seq = hilbert_affinized(&ctx.model, &m, 8);
        for jobs in [2, 3, 8] {
            assert_eq!(hilbert_affinized_jobs(&ctx.model, &m, 8, jobs), seq, "{name} jobs={jobs}");
        }
    }
}

#[test]
fn frozen_values() {
    let sl2 = LieAlgebra::named("sl2").unwrap();
    let h = hilbert_free_affinized(&sl2, &[1], &[1], 5).unwrap();
    let mut want = CharacterQSeries::zero(5);
    want.add_term(Weight(vec![1]), &inv_poch(1, 5));
    want.add_term(Weight(vec![-1]), &inv_poch(1, 5));
    assert_eq!(h, want);

    // two weightless variables paired: q/(q)_1^2
    let model = QuadraticModel::new(unit_variables(2), vec![(0, 1)], vec![]).unwrap();
    let h = hilbert_affinized(&model, &[1, 1], 6);
    let want = QSeries::monomial(1, 1, 6).mul(&inv_poch(1, 6)).mul(&inv_poch(1, 6));
    assert_eq!(h.get(&Weight(vec![])), want);
    assert_eq!(hilbert_affinized(&model, &[0, 0], 4), CharacterQSeries::one(0, 4));

    // expansion at the zero weight: q/(q)_1^2 + 2/(q)_1^2
    let sl3 = ModelContext::load("sl3").unwrap();
    let h = hilbert_affinized(&sl3.model, &[1, 1], 3);
    assert_eq!(h.get(&Weight(vec![0, 0])), QSeries::from_i64(&[2, 5, 8, 11], 3));

    let so5 = LieAlgebra::named("so5").unwrap();
    let h = hilbert_free_affinized(&so5, &[1, 2], &[1, 1], 2).unwrap();
    assert_eq!(h.get(&Weight(vec![1, 1])), QSeries::from_i64(&[1, 2, 3], 2));
    assert_eq!(hilbert_free_finite(&so5, &[1, 2], &[1, 1]).unwrap().mass(), 20);
    let f = hilbert_free_finite(&sl2, &[1], &[2]).unwrap();
    assert_eq!(f.support.keys().map(|w| w.0[0]).collect::<Vec<_>>(), vec![-2, 0, 2]);
}

#[test]
fn squares_are_rejected() {
    assert!(QuadraticModel::new(unit_variables(2), vec![(0, 0)], vec![]).is_err());
}

proptest! {
    #[test]
    fn free_finite_mass_is_a_product_of_binomials(a in 0u32..5, b in 0u32..5) {
        let so5 = LieAlgebra::named("so5").unwrap();
        let f = hilbert_free_finite(&so5, &[1, 2], &[a as i64, b as i64]).unwrap();
        prop_assert_eq!(f.mass() as u64, common::stars_and_bars(&[5, 4], &[a, b]));
    }

    #[test]
    fn unit_compositions_count_by_stars_and_bars(m in prop::collection::vec(0u32..4, 3)) {
        let sl4 = LieAlgebra::named("sl4").unwrap();
        let vars = graded_variables(&sl4, &[1, 2, 3]).unwrap();
        prop_assert_eq!(enumerate_compositions(&vars, &m).len() as u64, common::stars_and_bars(&[4, 6, 4], &m));
    }
}
