//! Quadratization of monomial ideals by auxiliary variables, and Hilbert
//! series of affinized quotients by quadratic monomial ideals.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, format_monomial, lt_ideal, monomial_grading, CoeffExt, Exponents, GradedVariable, MonomialIdeal,
    MonomialOrder, Polynomial,
};
use crate::lie::{Character, LieAlgebra, Weight};
use crate::qseries::{inv_poch_table, CharacterQSeries, QSeries};

pub const DEFAULT_AUX_LIMIT: usize = 12;

/// An auxiliary variable `t = x^monomial`, the monomial ranging over all
/// variables introduced before `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxDefinition {
    pub index: usize,
    pub monomial: Exponents,
}

/// Graded variables and a set `P` of unordered pairs of distinct variables;
/// the monomial ideal is `⟨x_a x_b : {a,b} ∈ P⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticModel {
    pub variables: Vec<GradedVariable>,
    /// Sorted, each with `a < b`.
    pub pairs: Vec<(usize, usize)>,
    pub aux: Vec<AuxDefinition>,
}

impl QuadraticModel {
    pub fn new(variables: Vec<GradedVariable>, pairs: Vec<(usize, usize)>, aux: Vec<AuxDefinition>) -> Result<Self> {
        let n = variables.len();
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Domain(format!("pair ({a},{b}) references a missing variable")));
            }
            if a == b {
                return Err(Error::Domain(format!(
                    "square generator {}^2 is not supported in a quadratic model",
                    variables[a].name
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort();
        norm.dedup();
        for v in &variables {
            if v.multidegree.iter().all(|&d| d == 0) {
                return Err(Error::Domain(format!("variable {} has zero multidegree", v.name)));
            }
        }
        for def in &aux {
            if def.index >= n || def.monomial.len() != n {
                return Err(Error::Domain("malformed auxiliary definition".into()));
            }
            let (deg, wt) = monomial_grading(&variables, &def.monomial);
            let v = &variables[def.index];
            if deg != v.multidegree || wt != v.weight {
                return Err(Error::Domain(format!("grading of {} differs from its defining monomial", v.name)));
            }
        }
        Ok(QuadraticModel { variables, pairs: norm, aux })
    }

    /// Model of an already quadratic, square-free monomial ideal.
    pub fn from_ideal(variables: Vec<GradedVariable>, ideal: &MonomialIdeal, aux: Vec<AuxDefinition>) -> Result<Self> {
        let mut pairs = Vec::new();
        for g in ideal.generators() {
            let support: Vec<usize> = g.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect();
            match (support.as_slice(), g.iter().sum::<u32>()) {
                ([a, b], 2) => pairs.push((*a, *b)),
                ([a], 2) => pairs.push((*a, *a)),
                _ => {
                    let names = Self::names_of(&variables);
                    return Err(Error::Domain(format!(
                        "generator {} is not quadratic",
                        format_monomial(&names, g)
                    )));
                }
            }
        }
        Self::new(variables, pairs, aux)
    }

    fn names_of(vars: &[GradedVariable]) -> Vec<String> {
        vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn names(&self) -> Vec<String> {
        Self::names_of(&self.variables)
    }

    pub fn grading_len(&self) -> usize {
        self.variables.first().map_or(0, |v| v.multidegree.len())
    }

    pub fn rank(&self) -> usize {
        self.variables.first().map_or(0, |v| v.weight.rank())
    }

    /// Pairs as sorted two-factor monomial strings, for display and comparison.
    pub fn pair_monomials(&self) -> Vec<String> {
        let names = self.names();
        let mut out: Vec<String> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let mut e = vec![0; names.len()];
                e[a] += 1;
                e[b] += 1;
                format_monomial(&names, &e)
            })
            .collect();
        out.sort();
        out
    }

    /// `Q(m) = Σ_{{a,b}∈P} m_a m_b`.
    pub fn quadratic_form(&self, m: &[u32]) -> u64 {
        self.pairs.iter().map(|&(a, b)| m[a] as u64 * m[b] as u64).sum()
    }
}

/// A requested auxiliary variable: `name = monomial`, written over the
/// original variables and any earlier auxiliary names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub name: String,
    pub monomial: String,
}

/// Outcome of a quadratization, with the extended order used.
#[derive(Clone, Debug)]
pub struct Quadratization {
    pub model: QuadraticModel,
    pub order: MonomialOrder,
}

struct Extended {
    vars: Vec<GradedVariable>,
    aux: Vec<AuxDefinition>,
}

impl Extended {
    fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    fn push(&mut self, name: String, monomial: Exponents) -> Result<()> {
        if monomial.iter().sum::<u32>() < 2 {
            return Err(Error::Domain(format!("substitution {name} must have degree at least 2")));
        }
        if self.vars.iter().any(|v| v.name == name) {
            return Err(Error::Domain(format!("variable name {name} already in use")));
        }
        let (deg, wt) = monomial_grading(&self.vars, &monomial);
        let index = self.vars.len();
        self.vars.push(GradedVariable::new(name, deg, wt));
        for d in &mut self.aux {
            d.monomial.push(0);
        }
        let mut monomial = monomial;
        monomial.push(0);
        self.aux.push(AuxDefinition { index, monomial });
        Ok(())
    }

    /// LT ideal of `ideal + ⟨t_k − x^{m_k}⟩` with every `t_k` below all
    /// earlier variables.
    fn lt(&self, ideal: &MonomialIdeal, order: &MonomialOrder) -> Result<(MonomialIdeal, MonomialOrder)> {
        let n0 = order.len();
        let n = self.vars.len();
        let ext = order.extended(n - n0);
        let mut gens: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .map(|g| {
                let mut e = g.clone();
                e.resize(n, 0);
                Polynomial::monomial(e, CoeffExt::one())
            })
            .collect();
        for d in &self.aux {
            let mut t = vec![0; n];
            t[d.index] = 1;
            let rel = Polynomial::monomial(t, CoeffExt::one())
                .sub(&Polynomial::monomial(d.monomial.clone(), CoeffExt::one()));
            gens.push(rel);
        }
        if gens.is_empty() {
            return Ok((MonomialIdeal::new(Vec::new()), ext));
        }
        let gb = buchberger(&gens, &ext)?;
        Ok((lt_ideal(&gb), ext))
    }
}

fn describe(names: &[String], ideal: &MonomialIdeal, aux: &[AuxDefinition]) -> (String, String) {
    let aux_s = aux
        .iter()
        .map(|d| format!("{}={}", names[d.index], format_monomial(names, &d.monomial)))
        .collect::<Vec<_>>()
        .join(", ");
    let rem = ideal
        .generators()
        .iter()
        .filter(|g| g.iter().sum::<u32>() != 2)
        .map(|g| format_monomial(names, g))
        .collect::<Vec<_>>()
        .join(", ");
    (aux_s, rem)
}

/// Quadratize the monomial ideal `ideal` over `vars`. With explicit
/// substitutions each aux variable is adjoined in the given sequence;
/// otherwise aux variables are chosen greedily.
pub fn quadratize(
    vars: &[GradedVariable],
    ideal: &MonomialIdeal,
    order: &MonomialOrder,
    substitutions: Option<&[Substitution]>,
) -> Result<Quadratization> {
    quadratize_with_limit(vars, ideal, order, substitutions, DEFAULT_AUX_LIMIT)
}

pub fn quadratize_with_limit(
    vars: &[GradedVariable],
    ideal: &MonomialIdeal,
    order: &MonomialOrder,
    substitutions: Option<&[Substitution]>,
    aux_limit: usize,
) -> Result<Quadratization> {
    if vars.len() != order.len() {
        return Err(Error::Domain("order does not cover the variable set".into()));
    }
    if ideal.generators().iter().any(|g| g.len() != vars.len()) {
        return Err(Error::Domain("ideal generators live in a different ring".into()));
    }
    let mut ext = Extended { vars: vars.to_vec(), aux: Vec::new() };
    if let Some(subs) = substitutions {
        for s in subs {
            if ext.aux.len() >= aux_limit {
                break;
            }
            let e = crate::groebner::parse_monomial(&ext.names(), &s.monomial)?;
            ext.push(s.name.clone(), e)?;
        }
        let (lt, ord) = ext.lt(ideal, order)?;
        if !lt.is_quadratic() {
            let (aux, remaining) = describe(&ext.names(), &lt, &ext.aux);
            return Err(Error::QuadratizationFailed {
                reason: "given substitutions leave higher-degree leading terms".into(),
                aux,
                remaining,
            });
        }
        let model = QuadraticModel::from_ideal(ext.vars, &lt, ext.aux)?;
        return Ok(Quadratization { model, order: ord });
    }

    let mut seen: HashSet<Exponents> = HashSet::new();
    loop {
        let (lt, ord) = ext.lt(ideal, order)?;
        let Some(g) = lt.generators().iter().find(|g| g.iter().sum::<u32>() > 2) else {
            let model = QuadraticModel::from_ideal(ext.vars, &lt, ext.aux)?;
            return Ok(Quadratization { model, order: ord });
        };
        if ext.aux.len() >= aux_limit {
            let (aux, remaining) = describe(&ext.names(), &lt, &ext.aux);
            return Err(Error::QuadratizationFailed {
                reason: format!("aux variable limit {aux_limit} reached"),
                aux,
                remaining,
            });
        }
        // the two largest variables of g, with multiplicity
        let mut picked = vec![0u32; g.len()];
        let mut need = 2;
        for &i in ord.sequence() {
            while need > 0 && picked[i] < g[i] {
                picked[i] += 1;
                need -= 1;
            }
        }
        if !seen.insert(picked.clone()) {
            let (aux, remaining) = describe(&ext.names(), &lt, &ext.aux);
            return Err(Error::QuadratizationFailed {
                reason: "greedy step repeated an existing auxiliary monomial".into(),
                aux,
                remaining,
            });
        }
        let name = format!("t{}", ext.aux.len() + 1);
        ext.push(name, picked)?;
    }
}

/// Weightless variables `x_1..x_n`, `x_i` of unit multidegree `e_i`.
pub fn unit_variables(n: usize) -> Vec<GradedVariable> {
    (0..n)
        .map(|i| {
            let mut deg = vec![0u32; n];
            deg[i] = 1;
            GradedVariable::new(format!("x{}", i + 1), deg, Weight(Vec::new()))
        })
        .collect()
}

/// The chain `t_1 = x_1x_2`, `t_k = t_{k-1}x_{k+1}` for `⟨x_1⋯x_n⟩`.
pub fn chain_substitutions(n: usize) -> Vec<Substitution> {
    (1..n.saturating_sub(1))
        .map(|k| Substitution {
            name: format!("t{k}"),
            monomial: if k == 1 { "x1*x2".to_string() } else { format!("t{}*x{}", k - 1, k + 1) },
        })
        .collect()
}

/// `⟨x_1⋯x_n⟩` quadratized along the chain, `n ≥ 2`.
pub fn product_ideal_model(n: usize) -> Result<Quadratization> {
    if n < 2 {
        return Err(Error::Domain("the product ideal needs n ≥ 2".into()));
    }
    let vars = unit_variables(n);
    let ideal = MonomialIdeal::new(vec![vec![1u32; n]]);
    quadratize(&vars, &ideal, &MonomialOrder::identity(n), Some(&chain_substitutions(n)))
}

/// All `m` with `Σ m_a deg_a = target`, in decreasing lexicographic order.
pub fn enumerate_compositions(vars: &[GradedVariable], target: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let reach = Reachability::new(vars, target);
    let mut m = vec![0u32; vars.len()];
    fn rec(k: usize, rem: &mut Vec<u32>, m: &mut Vec<u32>, vars: &[GradedVariable], reach: &Reachability, out: &mut Vec<Vec<u32>>) {
        if k == vars.len() {
            if rem.iter().all(|&r| r == 0) {
                out.push(m.clone());
            }
            return;
        }
        let deg = &vars[k].multidegree;
        let cap = max_copies(deg, rem);
        for c in (0..=cap).rev() {
            for (r, d) in rem.iter_mut().zip(deg) {
                *r -= c * d;
            }
            if reach.feasible(k + 1, rem) {
                m[k] = c;
                rec(k + 1, rem, m, vars, reach, out);
            }
            for (r, d) in rem.iter_mut().zip(deg) {
                *r += c * d;
            }
        }
        m[k] = 0;
    }
    let mut rem = target.to_vec();
    if reach.feasible(0, &rem) {
        rec(0, &mut rem, &mut m, vars, &reach, &mut out);
    }
    out
}

fn max_copies(deg: &[u32], rem: &[u32]) -> u32 {
    deg.iter()
        .zip(rem)
        .filter(|(d, _)| **d > 0)
        .map(|(d, r)| r / d)
        .min()
        .unwrap_or(0)
}

/// For each suffix of the variable list, which multidegrees inside the
/// target box are sums of suffix variables.
struct Reachability {
    dims: Vec<usize>,
    table: Vec<Vec<bool>>,
}

impl Reachability {
    fn new(vars: &[GradedVariable], target: &[u32]) -> Self {
        let dims: Vec<usize> = target.iter().map(|&t| t as usize + 1).collect();
        let size: usize = dims.iter().product();
        let mut table = vec![vec![false; size]; vars.len() + 1];
        table[vars.len()][0] = true;
        for k in (0..vars.len()).rev() {
            let deg: Vec<usize> = vars[k].multidegree.iter().map(|&d| d as usize).collect();
            let mut cur = table[k + 1].clone();
            // unbounded knapsack step: cur[x] |= cur[x − deg]
            if deg.iter().any(|&d| d > 0) {
                for idx in 0..size {
                    if cur[idx] {
                        continue;
                    }
                    let coords = unflatten(idx, &dims);
                    if coords.iter().zip(&deg).all(|(c, d)| c >= d) {
                        let prev: Vec<usize> = coords.iter().zip(&deg).map(|(c, d)| c - d).collect();
                        if cur[flatten(&prev, &dims)] {
                            cur[idx] = true;
                        }
                    }
                }
            }
            table[k] = cur;
        }
        Reachability { dims, table }
    }

    fn feasible(&self, k: usize, rem: &[u32]) -> bool {
        let coords: Vec<usize> = rem.iter().map(|&r| r as usize).collect();
        self.table[k][flatten(&coords, &self.dims)]
    }
}

// row-major with the first coordinate slowest, so that `x − deg` precedes `x`
fn flatten(coords: &[usize], dims: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (c, d)| acc * d + c)
}

fn unflatten(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for i in (0..dims.len()).rev() {
        out[i] = idx % dims[i];
        idx /= dims[i];
    }
    out
}

/// Character-valued Hilbert series
/// `Σ_m q^{Q(m)} e^{Σ m_a λ_a} ∏_a 1/(q)_{m_a}` over compositions of `M`,
/// through `q^order`.
pub fn hilbert_affinized(model: &QuadraticModel, target: &[u32], order: usize) -> CharacterQSeries {
    hilbert_affinized_jobs(model, target, order, 1)
}

/// As [`hilbert_affinized`], splitting the sum by the first variable's
/// multiplicity over `jobs` threads. The result does not depend on `jobs`.
pub fn hilbert_affinized_jobs(model: &QuadraticModel, target: &[u32], order: usize, jobs: usize) -> CharacterQSeries {
    let vars = &model.variables;
    let rank = model.rank();
    if vars.is_empty() {
        return if target.iter().all(|&t| t == 0) {
            CharacterQSeries::one(rank, order)
        } else {
            CharacterQSeries::zero(order)
        };
    }
    let max_m = target.iter().copied().max().unwrap_or(0) as usize;
    let inv = inv_poch_table(max_m, order);
    let reach = Reachability::new(vars, target);
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); vars.len()];
    for &(a, b) in &model.pairs {
        nbrs[b].push(a);
    }
    let ctx = Ctx { vars, nbrs: &nbrs, inv: &inv, reach: &reach, order };
    let deg = &vars[0].multidegree;
    let cap = max_copies(deg, target);
    let firsts: Vec<u32> = (0..=cap).rev().collect();
    let run = |c: u32| -> BTreeMap<Weight, QSeries> {
        let mut acc = BTreeMap::new();
        let mut rem: Vec<u32> = target.iter().zip(deg).map(|(t, d)| t - c * d).collect();
        if reach.feasible(1, &rem) {
            let mut m = vec![0u32; vars.len()];
            m[0] = c;
            let w = vars[0].weight.scale(c as i64);
            ctx.rec(1, &mut rem, &mut m, 0, &w, &inv[c as usize], &mut acc);
        }
        acc
    };
    let parts: Vec<BTreeMap<Weight, QSeries>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
        match pool {
            Ok(pool) => pool.install(|| firsts.par_iter().map(|&c| run(c)).collect()),
            Err(_) => firsts.iter().map(|&c| run(c)).collect(),
        }
    } else {
        firsts.iter().map(|&c| run(c)).collect()
    };
    let mut out = CharacterQSeries::zero(order);
    for part in parts {
        for (w, s) in part {
            out.add_term(w, &s);
        }
    }
    out
}

struct Ctx<'a> {
    vars: &'a [GradedVariable],
    nbrs: &'a [Vec<usize>],
    inv: &'a [QSeries],
    reach: &'a Reachability,
    order: usize,
}

impl Ctx<'_> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        k: usize,
        rem: &mut Vec<u32>,
        m: &mut Vec<u32>,
        q: u64,
        w: &Weight,
        series: &QSeries,
        acc: &mut BTreeMap<Weight, QSeries>,
    ) {
        // Q only grows along the recursion
        if q > self.order as u64 {
            return;
        }
        if k == self.vars.len() {
            let term = series.shift(q as usize);
            match acc.get_mut(w) {
                Some(s) => s.add_assign(&term),
                None => {
                    acc.insert(w.clone(), term);
                }
            }
            return;
        }
        let deg = &self.vars[k].multidegree;
        let cap = max_copies(deg, rem);
        let linear: u64 = self.nbrs[k].iter().map(|&a| m[a] as u64).sum();
        for c in (0..=cap).rev() {
            let dq = c as u64 * linear;
            if q + dq > self.order as u64 {
                continue;
            }
            for (r, d) in rem.iter_mut().zip(deg) {
                *r -= c * d;
            }
            if self.reach.feasible(k + 1, rem) {
                m[k] = c;
                let (w2, s2) = if c == 0 {
                    (w.clone(), series.clone())
                } else {
                    (w.add(&self.vars[k].weight.scale(c as i64)), series.mul(&self.inv[c as usize]))
                };
                self.rec(k + 1, rem, m, q + dq, &w2, &s2, acc);
                m[k] = 0;
            }
            for (r, d) in rem.iter_mut().zip(deg) {
                *r += c * d;
            }
        }
    }
}

/// Hilbert series at a possibly negative multidegree; zero off the cone.
pub fn hilbert_affinized_at(model: &QuadraticModel, target: &[i64], order: usize) -> CharacterQSeries {
    if target.iter().any(|&t| t < 0) {
        return CharacterQSeries::zero(order);
    }
    let t: Vec<u32> = target.iter().map(|&t| t as u32).collect();
    hilbert_affinized(model, &t, order)
}

/// Coordinates of the listed fundamental representations, graded by unit
/// multidegree vectors of length `rank`.
pub fn graded_variables(algebra: &LieAlgebra, reps: &[usize]) -> Result<Vec<GradedVariable>> {
    let mut out = Vec::new();
    for &i in reps {
        if i == 0 || i > algebra.rank {
            return Err(Error::Domain(format!("fundamental index {i} out of range")));
        }
        let mut deg = vec![0u32; algebra.rank];
        deg[i - 1] = 1;
        for (name, w) in algebra.rep_weights(i)? {
            out.push(GradedVariable::new(name, deg.clone(), w));
        }
    }
    Ok(out)
}

/// Hilbert series of the affinized polynomial ring on the listed
/// representations (no relations).
pub fn hilbert_free_affinized(algebra: &LieAlgebra, reps: &[usize], target: &[u32], order: usize) -> Result<CharacterQSeries> {
    let model = QuadraticModel::new(graded_variables(algebra, reps)?, Vec::new(), Vec::new())?;
    Ok(hilbert_affinized(&model, target, order))
}

/// Weight multiset of the degree-`M` piece of the polynomial ring on the
/// listed representations; zero when some `M_i < 0`.
pub fn hilbert_free_finite(algebra: &LieAlgebra, reps: &[usize], target: &[i64]) -> Result<Character> {
    if target.len() != algebra.rank {
        return Err(Error::Domain("multidegree length differs from the rank".into()));
    }
    if target.iter().any(|&t| t < 0) {
        return Ok(Character::new());
    }
    for (i, &t) in target.iter().enumerate() {
        if t > 0 && !reps.contains(&(i + 1)) {
            return Ok(Character::new());
        }
    }
    let mut total = Character::trivial(algebra.rank);
    for &i in reps {
        let weights = algebra.rep_weights(i)?;
        let vars: Vec<GradedVariable> =
            weights.into_iter().map(|(n, w)| GradedVariable::new(n, vec![1], w)).collect();
        let mut sym = Character::new();
        for m in enumerate_compositions(&vars, &[target[i - 1] as u32]) {
            let mut w = algebra.zero();
            for (v, &k) in vars.iter().zip(&m) {
                w = w.add(&v.weight.scale(k as i64));
            }
            sym.add_term(w, 1);
        }
        total = total.mul(&sym);
    }
    Ok(total)
}
