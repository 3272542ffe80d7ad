//! Executable checks of the q-identities, alternating-sum character
//! formulas, manifest-character identities and the two conjectures.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::affine::{hilbert_affinized, hilbert_free_affinized, hilbert_free_finite, product_ideal_model, QuadraticModel};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::hl::modified_hl_character;
use crate::lie::{Character, Family, LieAlgebra, Weight};
use crate::qseries::{inv_poch, poch, CharacterQSeries, QSeries};

pub const DEFAULT_IDENTITY_ORDER: usize = 12;
pub const DEFAULT_CONJECTURE_ORDER: usize = 8;

/// One summand `S(a)⊗L(module)` in homological degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub degree: usize,
    pub shift: Vec<i64>,
    pub module: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionData {
    pub length: usize,
    pub terms: Vec<ResolutionTerm>,
}

impl ResolutionData {
    pub fn validate(&self) -> Result<()> {
        let zero_terms: Vec<_> = self.terms.iter().filter(|t| t.degree == 0).collect();
        if zero_terms.len() != 1
            || zero_terms[0].shift.iter().any(|&a| a != 0)
            || !zero_terms[0].module.is_zero()
        {
            return Err(Error::Domain("degree-0 term must be the unshifted trivial module".into()));
        }
        for t in &self.terms {
            if t.degree > self.length {
                return Err(Error::Domain(format!("term in degree {} beyond length {}", t.degree, self.length)));
            }
            if t.degree > 0 && t.shift.iter().any(|&a| a > 0) {
                return Err(Error::Domain("positive shift in a resolution term".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First disagreement between the two sides of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub weight: Weight,
    pub q_power: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: serde_json::Value,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    fn from_witness(check: &str, params: serde_json::Value, order: Option<usize>, witness: Option<Witness>) -> Self {
        CheckReport {
            check: check.into(),
            params,
            order,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            witness,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {} {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.params
        );
        if let Some(n) = self.order {
            s.push_str(&format!(" N={n}"));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness: weight {} q^{} lhs {} rhs {}", w.weight, w.q_power, w.lhs, w.rhs));
        }
        if let Some(d) = &self.detail {
            s.push_str(&format!(" ({d})"));
        }
        s
    }
}

/// First `(weight, q-power)` where the two series differ, weights in
/// lexicographic order. Both sides must share one truncation order.
pub fn compare_series(lhs: &CharacterQSeries, rhs: &CharacterQSeries) -> Option<Witness> {
    assert_eq!(lhs.order(), rhs.order(), "comparison across truncation orders");
    let mut weights: Vec<&Weight> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    weights.sort();
    weights.dedup();
    for w in weights {
        let a = lhs.get(w);
        let b = rhs.get(w);
        for k in 0..=lhs.order() {
            if a.coeff(k) != b.coeff(k) {
                return Some(Witness { weight: w.clone(), q_power: k, lhs: a.coeff(k).to_string(), rhs: b.coeff(k).to_string() });
            }
        }
    }
    None
}

pub fn compare_characters(lhs: &Character, rhs: &Character) -> Option<Witness> {
    let mut weights: Vec<&Weight> = lhs.support.keys().chain(rhs.support.keys()).collect();
    weights.sort();
    weights.dedup();
    weights.into_iter().find(|w| lhs.get(w) != rhs.get(w)).map(|w| Witness {
        weight: w.clone(),
        q_power: 0,
        lhs: lhs.get(w).to_string(),
        rhs: rhs.get(w).to_string(),
    })
}

fn scalar(s: QSeries) -> CharacterQSeries {
    CharacterQSeries::monomial(Weight(Vec::new()), s)
}

fn inv(m: i64, order: usize) -> Option<QSeries> {
    (m >= 0).then(|| inv_poch(m as usize, order))
}

/// `q^{k} (−1)^m`, zero beyond the truncation order.
fn signed_power(k: u64, negative: bool, order: usize) -> QSeries {
    if k > order as u64 {
        return QSeries::zero(order);
    }
    QSeries::monomial(k as usize, if negative { -1 } else { 1 }, order)
}

pub fn identity_35_sides(m1: u32, m2: u32, order: usize) -> (QSeries, QSeries) {
    let (a, b) = (m1 as i64, m2 as i64);
    let lhs = signed_power((a * b) as u64, false, order).mul(&inv_poch(m1 as usize, order)).mul(&inv_poch(m2 as usize, order));
    let mut rhs = QSeries::zero(order);
    for m in 0..=a.min(b) {
        let t = signed_power((m * (m - 1) / 2) as u64, m % 2 == 1, order)
            .mul(&inv_poch(m as usize, order))
            .mul(&inv(a - m, order).unwrap())
            .mul(&inv(b - m, order).unwrap());
        rhs.add_assign(&t);
    }
    (lhs, rhs)
}

pub fn identity_36_sides(m1: u32, m2: u32, order: usize) -> (QSeries, QSeries) {
    let (a, b) = (m1 as i64, m2 as i64);
    let lhs = inv_poch(m1 as usize, order).mul(&inv_poch(m2 as usize, order));
    let mut rhs = QSeries::zero(order);
    for m in 0..=a.min(b) {
        let t = signed_power(((a - m) * (b - m)) as u64, false, order)
            .mul(&inv_poch(m as usize, order))
            .mul(&inv(a - m, order).unwrap())
            .mul(&inv(b - m, order).unwrap());
        rhs.add_assign(&t);
    }
    (lhs, rhs)
}

pub fn check_identity_35(m1: u32, m2: u32, order: usize) -> CheckReport {
    let (l, r) = identity_35_sides(m1, m2, order);
    CheckReport::from_witness("id35", json!({"M1": m1, "M2": m2}), Some(order), compare_series(&scalar(l), &scalar(r)))
}

pub fn check_identity_36(m1: u32, m2: u32, order: usize) -> CheckReport {
    let (l, r) = identity_36_sides(m1, m2, order);
    CheckReport::from_witness("id36", json!({"M1": m1, "M2": m2}), Some(order), compare_series(&scalar(l), &scalar(r)))
}

/// Multi-sum over `m_1..m_{n-2}` for `⟨x_1⋯x_n⟩` with the chain of
/// auxiliary variables, each carrying its own `1/(q)_{m_k}`.
pub fn identity_313_multisum(big_m: &[u32], order: usize) -> QSeries {
    let n = big_m.len();
    let k = n.saturating_sub(2);
    let mm: Vec<i64> = big_m.iter().map(|&x| x as i64).collect();
    let mut total = QSeries::zero(order);
    let mut ms = vec![0i64; k];
    loop {
        // free[j] = M_{j+1} − ΔM_{j+1}; ΔM_1 = ΔM_2 = Σ m, ΔM_{j+1} = Σ_{k ≥ j} m_k
        let free: Vec<i64> = (0..n)
            .map(|j| mm[j] - if j < 2 { ms.iter().sum::<i64>() } else { ms[j - 1..].iter().sum::<i64>() })
            .collect();
        if free.iter().all(|&f| f >= 0) {
            let mut q = free[0] * free[1];
            for (kk, &m) in ms.iter().enumerate() {
                q += m * free[kk + 2];
            }
            let mut t = signed_power(q as u64, false, order);
            for &f in &free {
                t = t.mul(&inv_poch(f as usize, order));
            }
            for &m in &ms {
                t = t.mul(&inv_poch(m as usize, order));
            }
            total.add_assign(&t);
        }
        // odometer bounded by min(M_1, M_2)
        let cap = mm[0].min(mm[1]);
        let mut pos = 0;
        loop {
            if pos == k {
                return total;
            }
            ms[pos] += 1;
            if ms.iter().sum::<i64>() <= cap {
                break;
            }
            ms[pos] = 0;
            pos += 1;
        }
    }
}

pub fn identity_316_sum(big_m: &[u32], order: usize) -> QSeries {
    let min = big_m.iter().copied().min().unwrap_or(0) as usize;
    let mut total = QSeries::zero(order);
    for m in 0..=min {
        let mut t = signed_power((m * m.saturating_sub(1) / 2) as u64, m % 2 == 1, order).mul(&inv_poch(m, order));
        for &x in big_m {
            t = t.mul(&inv_poch(x as usize - m, order));
        }
        total.add_assign(&t);
    }
    total
}

pub fn check_identity_313_316(big_m: &[u32], order: usize) -> CheckReport {
    let params = json!({"M": big_m});
    if big_m.len() < 2 {
        return CheckReport::from_witness("id313", params, Some(order), None).with_detail("needs n ≥ 2");
    }
    let l = scalar(identity_313_multisum(big_m, order));
    let r = scalar(identity_316_sum(big_m, order));
    if let Some(w) = compare_series(&l, &r) {
        return CheckReport::from_witness("id313", params, Some(order), Some(w)).with_detail("multi-sum vs alternating sum");
    }
    let model = match product_ideal_model(big_m.len()) {
        Ok(q) => q.model,
        Err(e) => {
            return CheckReport::from_witness("id313", params, Some(order), None).with_detail(format!("model unavailable: {e}"))
        }
    };
    let h = hilbert_affinized(&model, big_m, order);
    let w = compare_series(&h, &l);
    let detail = if w.is_some() { "affinized model vs multi-sum" } else { "multi-sum = alternating sum = affinized model" };
    CheckReport::from_witness("id313", params, Some(order), w).with_detail(detail)
}

/// `Σ_j (−1)^j Σ_k h_S(M + a_k^{(j)}) · χ_{V_k^{(j)}}` at `q = 1`.
pub fn euler_poincare_finite(res: &ResolutionData, algebra: &LieAlgebra, reps: &[usize], big_m: &[i64]) -> Result<Character> {
    if big_m.len() != algebra.rank {
        return Err(Error::Domain("multidegree length differs from the rank".into()));
    }
    let mut total = Character::new();
    for t in &res.terms {
        if t.shift.len() != big_m.len() {
            return Err(Error::Domain("resolution shift of the wrong length".into()));
        }
        let shifted: Vec<i64> = big_m.iter().zip(&t.shift).map(|(m, a)| m + a).collect();
        let h = hilbert_free_finite(algebra, reps, &shifted)?;
        if h.is_empty() {
            continue;
        }
        let v = algebra.irreducible_character(&t.module)?;
        total.add_assign_scaled(&h.mul(&v), if t.degree % 2 == 0 { 1 } else { -1 });
    }
    Ok(total)
}

pub fn check_euler_poincare(fixture: &Fixture, big_m: &[u32]) -> Result<CheckReport> {
    let res = fixture
        .resolution()
        .ok_or_else(|| Error::Fixture(format!("{} has no resolution", fixture.name())))?;
    let m: Vec<i64> = big_m.iter().map(|&x| x as i64).collect();
    let lhs = euler_poincare_finite(&res, &fixture.algebra, &fixture.file.reps, &m)?;
    let rhs = fixture.algebra.irreducible_character(&Weight(m.clone()))?;
    Ok(CheckReport::from_witness(
        "euler-poincare",
        json!({"fixture": fixture.name(), "M": big_m}),
        None,
        compare_characters(&lhs, &rhs),
    )
    .with_detail(format!("dim {}", lhs.mass())))
}

fn binom(n: i64, k: i64) -> BigInt {
    if n < k || k < 0 || n < 0 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Six-binomial alternating sum for `dim L(M_1Λ_1 + M_2Λ_2)` of so5.
pub fn dim_243(m1: u32, m2: u32) -> BigInt {
    let (a, b) = (m1 as i64, m2 as i64);
    binom(a + 4, 4) * binom(b + 3, 3) - BigInt::from(4) * binom(a + 3, 4) * binom(b + 2, 3)
        - binom(a + 2, 4) * binom(b + 3, 3)
        + binom(a + 3, 4) * binom(b + 1, 3)
        + BigInt::from(4) * binom(a + 2, 4) * binom(b + 2, 3)
        - binom(a + 1, 4) * binom(b + 1, 3)
}

pub fn check_dim_243(m1: u32, m2: u32) -> Result<CheckReport> {
    let so5 = LieAlgebra::named("so5")?;
    let lhs = dim_243(m1, m2);
    let rhs = BigInt::from(so5.weyl_dim(&Weight(vec![m1 as i64, m2 as i64]))?);
    let witness = (lhs != rhs).then(|| Witness {
        weight: Weight(vec![m1 as i64, m2 as i64]),
        q_power: 0,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    });
    Ok(CheckReport::from_witness("dim243", json!({"M1": m1, "M2": m2}), None, witness).with_detail(format!("dim {rhs}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ManifestCase {
    Sl3,
    Sl4,
    So5,
    So7,
}

impl ManifestCase {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sl3" => Ok(ManifestCase::Sl3),
            "sl4" => Ok(ManifestCase::Sl4),
            "so5" => Ok(ManifestCase::So5),
            "so7" => Ok(ManifestCase::So7),
            _ => Err(Error::Config(format!("no manifest identity for `{s}`"))),
        }
    }

    pub fn fixture_name(self) -> &'static str {
        match self {
            ManifestCase::Sl3 => "sl3",
            ManifestCase::Sl4 => "sl4",
            ManifestCase::So5 => "so5",
            ManifestCase::So7 => "so7",
        }
    }
}

/// Which printed form of a B-series manifest identity to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ManifestLine {
    /// Only the spinor degree is nonzero.
    Spinor,
    /// Only the vector degree is nonzero.
    Vector,
    /// Vector degree arbitrary, spinor degree one.
    Mixed,
}

/// A fixture together with its quadratized model, reused across checks.
#[derive(Clone, Debug)]
pub struct ModelContext {
    pub fixture: Fixture,
    pub model: QuadraticModel,
}

impl ModelContext {
    pub fn load(name: &str) -> Result<Self> {
        Self::from_fixture(Fixture::load(name)?)
    }

    pub fn from_fixture(fixture: Fixture) -> Result<Self> {
        let model = fixture.quadratized()?.model;
        Ok(ModelContext { fixture, model })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.fixture.algebra
    }

    pub fn hilbert(&self, big_m: &[u32], order: usize) -> CharacterQSeries {
        hilbert_affinized(&self.model, big_m, order)
    }

    fn free(&self, big_m: &[i64], order: usize) -> Result<CharacterQSeries> {
        if big_m.iter().any(|&m| m < 0) {
            return Ok(CharacterQSeries::zero(order));
        }
        let m: Vec<u32> = big_m.iter().map(|&x| x as u32).collect();
        hilbert_free_affinized(&self.fixture.algebra, &self.fixture.file.reps, &m, order)
    }
}

impl ManifestCase {
    /// The printed form claimed for `M`, if any.
    pub fn default_line(self, big_m: &[u32]) -> Result<Option<ManifestLine>> {
        let not_claimed = || Error::NotClaimed(format!("{self:?} identity is not stated at M = {big_m:?}"));
        let want = match self {
            ManifestCase::Sl3 => 2,
            ManifestCase::So5 => 2,
            ManifestCase::Sl4 | ManifestCase::So7 => 3,
        };
        if big_m.len() != want {
            return Err(Error::Domain(format!("expected a multidegree of length {want}")));
        }
        match self {
            ManifestCase::Sl3 => Ok(None),
            ManifestCase::Sl4 => {
                if big_m[1] != 0 {
                    return Err(not_claimed());
                }
                Ok(None)
            }
            ManifestCase::So5 => match (big_m[0], big_m[1]) {
                (_, 0) => Ok(Some(ManifestLine::Vector)),
                (_, 1) => Ok(Some(ManifestLine::Mixed)),
                (0, _) => Ok(Some(ManifestLine::Spinor)),
                _ => Err(not_claimed()),
            },
            ManifestCase::So7 => match (big_m[0], big_m[1], big_m[2]) {
                (_, 0, 0) => Ok(Some(ManifestLine::Vector)),
                (_, 0, 1) => Ok(Some(ManifestLine::Mixed)),
                (0, 0, _) => Ok(Some(ManifestLine::Spinor)),
                _ => Err(not_claimed()),
            },
        }
    }

    fn line_applies(self, line: ManifestLine, big_m: &[u32]) -> bool {
        let (v, s) = match self {
            ManifestCase::So5 => (big_m[0], big_m[1]),
            ManifestCase::So7 if big_m[1] == 0 => (big_m[0], big_m[2]),
            _ => return false,
        };
        match line {
            ManifestLine::Spinor => v == 0,
            ManifestLine::Vector => s == 0,
            ManifestLine::Mixed => s == 1,
        }
    }
}

/// Right-hand side of the manifest-character identity, as printed.
pub fn manifest_rhs(case: ManifestCase, line: Option<ManifestLine>, ctx: &ModelContext, big_m: &[u32], order: usize) -> Result<CharacterQSeries> {
    let m: Vec<i64> = big_m.iter().map(|&x| x as i64).collect();
    let alt = |k: usize| -> QSeries {
        signed_power((k * k.saturating_sub(1) / 2) as u64, k % 2 == 1, order).mul(&inv_poch(k, order))
    };
    let mut out = CharacterQSeries::zero(order);
    let max = m.iter().copied().max().unwrap_or(0) as usize;
    match (case, line) {
        (ManifestCase::Sl3, _) => {
            for k in 0..=max {
                let h = ctx.free(&[m[0] - k as i64, m[1] - k as i64], order)?;
                out.add_assign(&h.mul_series(&alt(k)));
            }
        }
        (ManifestCase::Sl4, _) => {
            for k in 0..=max {
                let h = ctx.free(&[m[0] - k as i64, 0, m[2] - k as i64], order)?;
                out.add_assign(&h.mul_series(&alt(k)));
            }
        }
        (ManifestCase::So5 | ManifestCase::So7, Some(line)) => {
            let so7 = case == ManifestCase::So7;
            // place (vector, spinor) degrees into the multidegree
            let at = |v: i64, s: i64| -> Vec<i64> {
                if so7 {
                    vec![v, 0, s]
                } else {
                    vec![v, s]
                }
            };
            let (v, s) = if so7 { (m[0], m[2]) } else { (m[0], m[1]) };
            let spinor = ctx.algebra().rep_character(ctx.algebra().rank)?;
            match line {
                ManifestLine::Spinor if so7 => {
                    for k in 0..=max {
                        out.add_assign(&ctx.free(&at(0, s - 2 * k as i64), order)?.mul_series(&alt(k)));
                    }
                }
                ManifestLine::Spinor => {
                    out = ctx.free(&at(0, s), order)?;
                }
                ManifestLine::Vector => {
                    for k in 0..=max {
                        out.add_assign(&ctx.free(&at(v - 2 * k as i64, 0), order)?.mul_series(&alt(k)));
                    }
                }
                ManifestLine::Mixed => {
                    let inv1 = inv_poch(1, order);
                    for k in 0..=max {
                        let ki = k as i64;
                        out.add_assign(&ctx.free(&at(v - 2 * ki, 1), order)?.mul_series(&alt(k)));
                        let c = signed_power((k * (k + 1) / 2) as u64, k % 2 == 1, order)
                            .mul(&inv_poch(k, order))
                            .mul(&inv1);
                        let minus = ctx.free(&at(v - 2 * ki - 1, 0), order)?.mul_character(&spinor).mul_series(&c);
                        let plus = ctx.free(&at(v - 2 * ki - 2, 0), order)?.mul_character(&spinor).mul_series(&c);
                        out = out.sub(&minus).add(&plus);
                    }
                }
            }
        }
        (ManifestCase::So5 | ManifestCase::So7, None) => {
            return Err(Error::NotClaimed("B-series identity needs a line".into()));
        }
    }
    Ok(out)
}

pub fn check_manifest_in(ctx: &ModelContext, case: ManifestCase, line: Option<ManifestLine>, big_m: &[u32], order: usize) -> Result<CheckReport> {
    let default = case.default_line(big_m)?;
    let line = match (line, default) {
        (Some(l), Some(_)) => {
            if !case.line_applies(l, big_m) {
                return Err(Error::NotClaimed(format!("{l:?} form of the {case:?} identity does not cover M = {big_m:?}")));
            }
            Some(l)
        }
        (_, d) => d,
    };
    let lhs = ctx.hilbert(big_m, order);
    let rhs = manifest_rhs(case, line, ctx, big_m, order)?;
    let mut params = json!({"case": case, "M": big_m});
    if let Some(l) = line {
        params["line"] = json!(l);
    }
    Ok(CheckReport::from_witness("manifest", params, Some(order), compare_series(&lhs, &rhs)))
}

pub fn check_manifest(case: ManifestCase, big_m: &[u32], order: usize) -> Result<CheckReport> {
    case.default_line(big_m)?;
    let ctx = ModelContext::load(case.fixture_name())?;
    check_manifest_in(&ctx, case, None, big_m, order)
}

/// Fundamentals allowed in the conjecture: all for sl_n, the ends for so_{2n+1}.
pub fn conjecture_51_supported(algebra: &LieAlgebra, big_m: &[u32]) -> bool {
    big_m.len() == algebra.rank
        && match algebra.family {
            Family::A => true,
            Family::B => big_m
                .iter()
                .enumerate()
                .all(|(i, &m)| m == 0 || i == 0 || i + 1 == algebra.rank),
        }
}

pub fn conjecture_51_sides(ctx: &ModelContext, big_m: &[u32], order: usize) -> Result<(CharacterQSeries, CharacterQSeries)> {
    let alg = ctx.algebra();
    if !conjecture_51_supported(alg, big_m) {
        return Err(Error::Domain(format!("M = {big_m:?} uses a fundamental outside the conjecture for {}", alg.name())));
    }
    for (i, &m) in big_m.iter().enumerate() {
        if m > 0 && !ctx.fixture.file.reps.contains(&(i + 1)) {
            return Err(Error::Domain(format!("{} fixture has no coordinates for L(Λ_{})", ctx.fixture.name(), i + 1)));
        }
    }
    let lambda = Weight(big_m.iter().map(|&x| x as i64).collect());
    let lhs = modified_hl_character(alg, &lambda, order)?;
    let mut rhs = ctx.hilbert(big_m, order);
    for &m in big_m {
        rhs = rhs.mul_poly(&poch(m as usize));
    }
    Ok((lhs, rhs))
}

pub fn check_conjecture_51_in(ctx: &ModelContext, big_m: &[u32], order: usize) -> Result<CheckReport> {
    let (lhs, rhs) = conjecture_51_sides(ctx, big_m, order)?;
    Ok(CheckReport::from_witness(
        "conj51",
        json!({"algebra": ctx.algebra().name(), "M": big_m}),
        Some(order),
        compare_series(&lhs, &rhs),
    ))
}

pub fn check_conjecture_51(fixture: &str, big_m: &[u32], order: usize) -> Result<CheckReport> {
    check_conjecture_51_in(&ModelContext::load(fixture)?, big_m, order)
}

/// Dual module: the highest weight of the contragredient representation.
pub fn dual_module(algebra: &LieAlgebra, lambda: &Weight) -> Result<Weight> {
    let dual = algebra.irreducible_character(lambda)?.dual();
    let dec = algebra.decompose_character(&dual)?;
    match dec.into_iter().collect::<Vec<_>>().as_slice() {
        [(w, 1)] => Ok(w.clone()),
        _ => Err(Error::Computation(format!("dual of L({lambda}) is not irreducible"))),
    }
}

pub fn check_conjecture_21(res: &ResolutionData, algebra: &LieAlgebra, reps: &[usize]) -> Result<CheckReport> {
    res.validate()?;
    let l = algebra.rank;
    let dims: Vec<i64> = (1..=l)
        .map(|i| algebra.rep_weights(i).map(|w| w.len() as i64))
        .collect::<Result<Vec<_>>>()?;
    let complete = (1..=l).all(|i| reps.contains(&i));
    let total_d: i64 = reps.iter().map(|&i| dims[i - 1]).sum();
    let rhs = algebra.num_positive_roots() as i64 + l as i64 + res.length as i64;
    let params = json!({"algebra": algebra.name(), "length": res.length});
    if !complete {
        return Err(Error::NotClaimed("the conjecture concerns the complete flag".into()));
    }
    if total_d != rhs {
        return Ok(CheckReport {
            check: "conj21".into(),
            params,
            order: None,
            status: Status::Fail,
            witness: Some(Witness { weight: Weight(Vec::new()), q_power: 0, lhs: total_d.to_string(), rhs: rhs.to_string() }),
            detail: Some("ΣD_i vs D + ℓ + ν".into()),
        });
    }
    // (j, a, V) ↦ (ν − j, 2 − D − a, V*)
    let mut original: BTreeMap<ResolutionTerm, i64> = BTreeMap::new();
    let mut image: BTreeMap<ResolutionTerm, i64> = BTreeMap::new();
    for t in &res.terms {
        *original.entry(t.clone()).or_default() += 1;
        let shift: Vec<i64> = t.shift.iter().zip(&dims).map(|(a, d)| 2 - d - a).collect();
        let mapped = ResolutionTerm { degree: res.length - t.degree, shift, module: dual_module(algebra, &t.module)? };
        *image.entry(mapped).or_default() += 1;
    }
    let witness = original
        .iter()
        .find(|(t, k)| image.get(t) != Some(k))
        .or_else(|| image.iter().find(|(t, k)| original.get(t) != Some(k)))
        .map(|(t, _)| Witness {
            weight: t.module.clone(),
            q_power: t.degree,
            lhs: format!("{:?}", t.shift),
            rhs: "unmatched under the duality".into(),
        });
    Ok(CheckReport::from_witness("conj21", params, None, witness).with_detail(format!("{total_d} = {rhs}")))
}

/// All `n`-vectors with entries in `0..=max` and entry sum at most `total`.
pub fn bounded_vectors(n: usize, max: u32, total: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).filter_map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    (w.iter().sum::<u32>() <= total).then_some(w)
                })
            })
            .collect();
    }
    out
}

/// Manifest-identity cases: each identity over its stated domain.
pub fn manifest_grid() -> Vec<(ManifestCase, Option<ManifestLine>, Vec<u32>)> {
    let mut out = Vec::new();
    for m in bounded_vectors(2, 4, 8) {
        out.push((ManifestCase::Sl3, None, m));
    }
    for a in 0..=3 {
        for c in 0..=3 {
            out.push((ManifestCase::Sl4, None, vec![a, 0, c]));
        }
    }
    for a in 0..=4 {
        out.push((ManifestCase::So5, Some(ManifestLine::Vector), vec![a, 0]));
        out.push((ManifestCase::So5, Some(ManifestLine::Mixed), vec![a, 1]));
    }
    for b in 0..=4 {
        out.push((ManifestCase::So5, Some(ManifestLine::Spinor), vec![0, b]));
    }
    for k in 0..=3 {
        out.push((ManifestCase::So7, Some(ManifestLine::Spinor), vec![0, 0, k]));
        out.push((ManifestCase::So7, Some(ManifestLine::Vector), vec![k, 0, 0]));
        out.push((ManifestCase::So7, Some(ManifestLine::Mixed), vec![k, 0, 1]));
    }
    out
}

/// Conjecture-5.1 cases per fixture.
pub fn conjecture_51_grid() -> Vec<(&'static str, Vec<u32>)> {
    let mut out = Vec::new();
    for m in 0..=6 {
        out.push(("sl2", vec![m]));
    }
    for m in bounded_vectors(2, 4, 4) {
        out.push(("sl3", m));
    }
    for m in bounded_vectors(3, 3, 3) {
        out.push(("sl4", m));
    }
    for a in 0..=4 {
        out.push(("so5", vec![a, 0]));
    }
    for a in 0..=2 {
        out.push(("so5", vec![a, 1]));
    }
    out.push(("so5", vec![0, 2]));
    for m in bounded_vectors(2, 2, 2) {
        out.push(("so7", vec![m[0], 0, m[1]]));
    }
    out
}

/// Identity-313 cases: `2 ≤ n ≤ 4`, `Σ M_i ≤ 5`.
pub fn identity_313_grid() -> Vec<Vec<u32>> {
    (2..=4).flat_map(|n| bounded_vectors(n, 5, 5)).collect()
}
