use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coeff::CoeffExt;
use crate::error::{Error, Result};
use crate::lie::Weight;

pub type Exponents = Vec<u32>;

/// A coordinate carrying a multidegree and a weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedVariable {
    pub name: String,
    pub multidegree: Vec<u32>,
    pub weight: Weight,
}

impl GradedVariable {
    pub fn new(name: impl Into<String>, multidegree: Vec<u32>, weight: Weight) -> Self {
        GradedVariable { name: name.into(), multidegree, weight }
    }
}

/// Multidegree and weight of the monomial `x^e`.
pub fn monomial_grading(vars: &[GradedVariable], e: &[u32]) -> (Vec<u32>, Weight) {
    let grading_len = vars.first().map_or(0, |v| v.multidegree.len());
    let rank = vars.first().map_or(0, |v| v.weight.rank());
    let mut deg = vec![0u32; grading_len];
    let mut wt = Weight::zero(rank);
    for (v, &k) in vars.iter().zip(e) {
        if k == 0 {
            continue;
        }
        for (d, vd) in deg.iter_mut().zip(&v.multidegree) {
            *d += k * vd;
        }
        wt = wt.add(&v.weight.scale(k as i64));
    }
    (deg, wt)
}

pub fn format_monomial(names: &[String], e: &[u32]) -> String {
    let mut s = String::new();
    for (name, &k) in names.iter().zip(e) {
        if k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(name);
        if k > 1 {
            let _ = write!(s, "^{k}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Parse `x1*x23^2` against the given variable names.
pub fn parse_monomial(names: &[String], text: &str) -> Result<Exponents> {
    let mut e = vec![0u32; names.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(e);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => (
                n.trim(),
                p.trim().parse::<u32>().map_err(|_| Error::Fixture(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Fixture(format!("unknown variable `{name}` in monomial `{text}`")))?;
        e[idx] += power;
    }
    Ok(e)
}

/// Lexicographic order along an explicit variable sequence, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    sequence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; sequence.len()];
        for &i in &sequence {
            if i >= sequence.len() || seen[i] {
                return Err(Error::Domain("order sequence is not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder { sequence })
    }

    /// Order `names[0] > names[1] > …` given as variable names.
    pub fn from_names(ambient: &[String], order: &[String]) -> Result<Self> {
        if ambient.len() != order.len() {
            return Err(Error::Domain(format!(
                "order lists {} variables but the ring has {}",
                order.len(),
                ambient.len()
            )));
        }
        let seq = order
            .iter()
            .map(|n| {
                ambient
                    .iter()
                    .position(|a| a == n)
                    .ok_or_else(|| Error::Domain(format!("order mentions unknown variable `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(seq)
    }

    pub fn identity(n: usize) -> Self {
        MonomialOrder { sequence: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Append new variables (indices `len..len+k`) below all existing ones.
    pub fn extended(&self, k: usize) -> Self {
        let n = self.sequence.len();
        let mut sequence = self.sequence.clone();
        sequence.extend(n..n + k);
        MonomialOrder { sequence }
    }

    pub fn compare(&self, m1: &[u32], m2: &[u32]) -> Result<Ordering> {
        if m1.len() != self.len() || m2.len() != self.len() {
            return Err(Error::Domain("exponent vector length does not match the order".into()));
        }
        Ok(self.compare_unchecked(m1, m2))
    }

    pub(crate) fn compare_unchecked(&self, m1: &[u32], m2: &[u32]) -> Ordering {
        for &i in &self.sequence {
            match m1[i].cmp(&m2[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Exponents rearranged so that plain lexicographic `Vec` comparison
    /// realizes this order.
    pub(crate) fn to_key(&self, e: &[u32]) -> Exponents {
        self.sequence.iter().map(|&i| e[i]).collect()
    }

    pub(crate) fn from_key(&self, key: &[u32]) -> Exponents {
        let mut e = vec![0; key.len()];
        for (p, &i) in self.sequence.iter().enumerate() {
            e[i] = key[p];
        }
        e
    }
}

pub fn lex_compare(order: &MonomialOrder, m1: &[u32], m2: &[u32]) -> Result<Ordering> {
    order.compare(m1, m2)
}

/// A polynomial over ℚ(√2) in a fixed number of variables. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, CoeffExt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, CoeffExt)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Domain("exponent vector length mismatch".into()));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn monomial(e: Exponents, c: CoeffExt) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, &c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, CoeffExt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, CoeffExt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponents, c: &CoeffExt) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CoeffExt::integer(-1)))
    }

    pub fn scale(&self, k: &CoeffExt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &(c * k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    /// Embed into a ring with `extra` further variables.
    pub fn extend_vars(&self, extra: usize) -> Self {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.extend(std::iter::repeat_n(0, extra));
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponents, &CoeffExt)> {
        self.terms.iter().max_by(|a, b| order.compare_unchecked(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Exponents> {
        self.leading_term(order).map(|(e, _)| e)
    }

    /// Scaled so that the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Common multidegree and weight of all terms, or `None` if mixed.
    pub fn homogeneous_grading(&self, vars: &[GradedVariable]) -> Option<(Vec<u32>, Weight)> {
        let mut it = self.terms.keys().map(|e| monomial_grading(vars, e));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous(&self, vars: &[GradedVariable]) -> bool {
        self.is_zero() || self.homogeneous_grading(vars).is_some()
    }

    /// Terms listed largest-first under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Exponents, &CoeffExt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.compare_unchecked(b.0, a.0));
        t
    }

    pub fn format(&self, names: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            // pure rational or pure √2 multiples print with their sign pulled out
            let negative = (c.b.is_zero() && c.a.is_negative()) || (c.a.is_zero() && c.b.is_negative());
            let c = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if c.a.is_zero() && c.b.is_one() {
                s.push_str("sqrt2*");
            } else if !c.is_one() {
                let _ = write!(s, "{c}*");
            }
            s.push_str(&format_monomial(names, e));
        }
        s
    }
}
