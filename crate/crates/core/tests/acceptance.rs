//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qflag::affine::{enumerate_compositions, graded_variables, hilbert_affinized, product_ideal_model};
use qflag::fixtures::Fixture;
use qflag::groebner::{parse_monomial, CoeffExt, Polynomial};
use qflag::lie::{Character, LieAlgebra, Weight};
use qflag::qseries::{inv_poch, poch, qbinom, QSeries};
use qflag::verify::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.line()),
        None => Ok(()),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sorted_pairs(q: &qflag::affine::Quadratization) -> Vec<Vec<u32>> {
    let n = q.model.variables.len();
    let mut v: Vec<Vec<u32>> = q
        .model
        .pairs
        .iter()
        .map(|&(a, b)| {
            let mut e = vec![0u32; n];
            e[a] += 1;
            e[b] += 1;
            e
        })
        .collect();
    v.sort();
    v
}

fn leading_terms() -> Outcome {
    let sl3 = Fixture::load("sl3").map_err(err)?;
    let lt = sl3.lt_ideal().map_err(err)?;
    ensure(lt.format(&sl3.names()) == ["x1*xb1"], "sl3 leading term")?;
    for (name, count) in [("sl4", 12), ("so5", 6)] {
        let fx = Fixture::load(name).map_err(err)?;
        let lt = fx.lt_ideal().map_err(err)?;
        ensure(lt.len() == count, format!("{name}: {} leading terms", lt.len()))?;
        ensure(lt == fx.expected_lt().map_err(err)?, format!("{name}: leading terms differ"))?;
    }
    let so5 = Fixture::load("so5").map_err(err)?;
    let names = so5.names();
    let e = |m: &str| parse_monomial(&names, m).unwrap();
    let tau = Polynomial::from_terms(
        names.len(),
        vec![
            (e("x0*xb1*xpp"), CoeffExt::from_ratios(0, 1, -1, 2)),
            (e("x2*xb1*xpm"), CoeffExt::rational(-1, 1)),
            (e("x0^2*xmp"), CoeffExt::rational(1, 2)),
            (e("x2*xb2*xmp"), CoeffExt::rational(1, 1)),
        ],
    )
    .map_err(err)?;
    let gb = so5.groebner().map_err(err)?;
    ensure(gb.polys.contains(&tau.monic(&gb.order)), "so5 basis lacks the cubic element")?;
    Ok("sl3 1, sl4 12, so5 6 leading terms; cubic in the so5 basis".into())
}

fn quadratization() -> Outcome {
    for n in 3..=5usize {
        let q = product_ideal_model(n).map_err(err)?;
        let names = q.model.names();
        let mut want: Vec<Vec<u32>> = std::iter::once("x1*x2".to_string())
            .chain((1..=n - 2).map(|k| format!("t{k}*x{}", k + 2)))
            .map(|m| parse_monomial(&names, &m).unwrap())
            .collect();
        want.sort();
        ensure(sorted_pairs(&q) == want, format!("product ideal n={n}"))?;
    }
    let mut compared = 0;
    for (name, count) in [("sl4", 15), ("so5", 8), ("so7", 30)] {
        let fx = Fixture::load(name).map_err(err)?;
        let stored = fx.quadratized().map_err(err)?;
        ensure(stored.model.pairs.len() == count, format!("{name}: {} pairs", stored.model.pairs.len()))?;
        ensure(sorted_pairs(&stored) == fx.expected_pairs().map_err(err)?, format!("{name}: pair set differs"))?;
        let greedy = fx.quadratized_greedy().map_err(err)?;
        for m in bounded_vectors(fx.algebra.rank, 3, 3) {
            if m.iter().enumerate().any(|(i, &k)| k > 0 && !fx.file.reps.contains(&(i + 1))) {
                continue;
            }
            ensure(
                hilbert_affinized(&stored.model, &m, 8) == hilbert_affinized(&greedy.model, &m, 8),
                format!("{name} M={m:?}: greedy model differs"),
            )?;
            compared += 1;
        }
    }
    Ok(format!("pair sets n=3,4,5, sl4 15, so5 8, so7 30; greedy agrees on {compared} multidegrees through q^8"))
}

fn identities() -> Outcome {
    let mut reports = Vec::new();
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            reports.push(check_identity_35(a, b, 12));
            reports.push(check_identity_36(a, b, 12));
            let (l, r) = identity_35_sides(a, b, 12);
            let (ol, or) = common::identity_35(a as i64, b as i64, 12);
            ensure(common::to_i128(&l) == ol && common::to_i128(&r) == or, format!("id35 ({a},{b}) vs oracle"))?;
            let (l, r) = identity_36_sides(a, b, 12);
            let (ol, or) = common::identity_36(a as i64, b as i64, 12);
            ensure(common::to_i128(&l) == ol && common::to_i128(&r) == or, format!("id36 ({a},{b}) vs oracle"))?;
        }
    }
    let grid = identity_313_grid();
    for m in &grid {
        reports.push(check_identity_313_316(m, 10));
    }
    all_pass(&reports)?;
    Ok(format!("{} checks (72 two-variable, {} product-ideal multidegrees)", reports.len(), grid.len()))
}

fn manifest() -> Outcome {
    let mut ctxs: Vec<(ManifestCase, ModelContext)> = Vec::new();
    let mut reports = Vec::new();
    for (case, line, m) in manifest_grid() {
        if !ctxs.iter().any(|(c, _)| *c == case) {
            ctxs.push((case, ModelContext::load(case.fixture_name()).map_err(err)?));
        }
        let ctx = &ctxs.iter().find(|(c, _)| *c == case).unwrap().1;
        reports.push(check_manifest_in(ctx, case, line, &m, 8).map_err(err)?);
    }
    all_pass(&reports)?;
    Ok(format!("{} multidegrees across sl3, sl4, so5, so7 through q^8", reports.len()))
}

fn dimensions() -> Outcome {
    let mut reports = Vec::new();
    for a in 0..=5 {
        for b in 0..=5 {
            reports.push(check_dim_243(a, b).map_err(err)?);
        }
    }
    for (m, d) in [((1, 0), 5), ((0, 1), 4), ((1, 1), 16)] {
        ensure(dim_243(m.0, m.1) == d.into(), format!("spot value at {m:?}"))?;
    }
    for name in ["sl3", "so5"] {
        let fx = Fixture::load(name).map_err(err)?;
        for m in bounded_vectors(2, 4, 4) {
            reports.push(check_euler_poincare(&fx, &m).map_err(err)?);
        }
    }
    all_pass(&reports)?;
    Ok(format!("{} checks; spot values 5, 4, 16", reports.len()))
}

fn conjecture_51() -> Outcome {
    let mut ctxs: Vec<(&str, ModelContext)> = Vec::new();
    let mut reports = Vec::new();
    for (name, m) in conjecture_51_grid() {
        if !ctxs.iter().any(|(n, _)| *n == name) {
            ctxs.push((name, ModelContext::load(name).map_err(err)?));
        }
        let ctx = &ctxs.iter().find(|(n, _)| *n == name).unwrap().1;
        reports.push(check_conjecture_51_in(ctx, &m, 8).map_err(err)?);
    }
    all_pass(&reports)?;
    Ok(format!("{} cases on sl2, sl3, sl4, so5, so7 through q^8", reports.len()))
}

fn conjecture_21() -> Outcome {
    let mut details = Vec::new();
    for name in ["sl3", "sl4", "so5"] {
        let fx = Fixture::load(name).map_err(err)?;
        let res = fx.resolution().ok_or(format!("{name} has no resolution"))?;
        let r = check_conjecture_21(&res, &fx.algebra, &fx.file.reps).map_err(err)?;
        ensure(r.passed(), r.line())?;
        details.push(format!("{name} {}", r.detail.unwrap_or_default()));
    }
    Ok(details.join(", "))
}

fn properties() -> Outcome {
    for m in 0..=8 {
        for n in 0..=20 {
            ensure(poch(m).truncate(n).mul(&inv_poch(m, n)) == QSeries::one(n), format!("poch inverse m={m} N={n}"))?;
            ensure(common::to_i128(&inv_poch(m, n)) == common::inv_poch(m, n), format!("inv_poch oracle m={m} N={n}"))?;
        }
    }
    for a in 0..=5usize {
        for b in 0..=5usize {
            let got: Vec<i128> = qbinom((a + b) as i64, a as i64).coeffs().iter().map(|c| i128::try_from(c).unwrap()).collect();
            ensure(got == common::box_partitions(a + b, a), format!("qbinom box {a}×{b}"))?;
        }
    }
    // products of fundamentals: Freudenthal characters against the decomposition
    let cases: &[(&str, &[usize])] = &[("sl3", &[1, 2]), ("sl4", &[1, 2, 3]), ("so5", &[1, 2]), ("so7", &[1, 3])];
    for &(name, reps) in cases {
        let g = LieAlgebra::named(name).map_err(err)?;
        for &i in reps {
            for &j in reps {
                let (a, b) = (g.rep_character(i).map_err(err)?, g.rep_character(j).map_err(err)?);
                let prod = if i == j { common::sym2(&a) } else { a.mul(&b) };
                let dec = g.decompose_character(&prod).map_err(err)?;
                let mut rebuilt = Character::new();
                for (w, k) in &dec {
                    ensure(*k > 0, format!("{name}: negative multiplicity"))?;
                    rebuilt.add_assign_scaled(&g.irreducible_character(w).map_err(err)?, *k);
                }
                ensure(rebuilt == prod, format!("{name} Λ{i}·Λ{j}"))?;
                let top = Weight::fundamental(g.rank, i).add(&Weight::fundamental(g.rank, j));
                ensure(dec.get(&top) == Some(&1), format!("{name}: top component of Λ{i}·Λ{j}"))?;
            }
        }
    }
    for (name, reps, dims) in [("so5", vec![1, 2], vec![5u64, 4]), ("sl4", vec![1, 2, 3], vec![4, 6, 4])] {
        let g = LieAlgebra::named(name).map_err(err)?;
        let vars = graded_variables(&g, &reps).map_err(err)?;
        for m in bounded_vectors(g.rank, 4, 4) {
            ensure(
                enumerate_compositions(&vars, &m).len() as u64 == common::stars_and_bars(&dims, &m),
                format!("{name} compositions at {m:?}"),
            )?;
        }
    }
    let mut limits = 0;
    for name in ["sl2", "sl3", "sl4", "so5", "so7"] {
        let ctx = ModelContext::load(name).map_err(err)?;
        let g = ctx.algebra();
        for m in bounded_vectors(g.rank, 3, 3) {
            if m.iter().enumerate().any(|(i, &k)| k > 0 && !ctx.fixture.file.reps.contains(&(i + 1))) {
                continue;
            }
            let mut p = ctx.hilbert(&m, 24);
            for &k in &m {
                p = p.mul_poly(&poch(k as usize));
            }
            let mut at_one = Character::new();
            for (w, s) in p.terms() {
                let poly = s.to_polynomial(12).map_err(|e| format!("{name} {m:?}: {e}"))?;
                at_one.add_term(w.clone(), i64::try_from(poly.eval_at_one()).map_err(err)?);
            }
            let mut want = Character::trivial(g.rank);
            for (i, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    want = want.mul(&g.rep_character(i + 1).map_err(err)?);
                }
            }
            ensure(at_one == want, format!("{name} q→1 limit at {m:?}"))?;
            limits += 1;
        }
    }
    Ok(format!("series inverses, box partitions, tensor products, compositions, {limits} q→1 limits"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("1 leading-term ideals", Duration::from_secs(10), leading_terms),
        ("2 quadratization", Duration::from_secs(120), quadratization),
        ("3 q-identities", Duration::from_secs(60), identities),
        ("4 manifest characters", Duration::from_secs(300), manifest),
        ("5 dimension formula and Euler-Poincaré", Duration::from_secs(60), dimensions),
        ("6 Hall-Littlewood conjecture", Duration::from_secs(600), conjecture_51),
        ("7 resolution duality", Duration::from_secs(60), conjecture_21),
        ("8 property suites", Duration::from_secs(300), properties),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{elapsed:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{elapsed:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
