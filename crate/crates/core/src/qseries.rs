//! Exact q-polynomials, truncated q-series and character-valued q-series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{CharCoeff, Character, Weight};

pub const DEFAULT_ORDER: usize = 10;

/// An exact polynomial in q with integer coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(power: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::from_coeffs(self.coeffs.iter().map(|c| c * &k).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        QSeries::from_coeffs((0..=order).map(|k| self.coeff(k)).collect(), order)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coeff_list(f, &self.coeffs)
    }
}

fn write_coeff_list(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    write!(f, "[")?;
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

impl CharCoeff for QPolynomial {
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn sub_scaled(&mut self, other: &Self, k: i64) {
        *self = QPolynomial::sub(self, &other.scale(k));
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(k)
    }
}

/// A power series in q known through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
    order: usize,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1], order }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `c q^power`, zero when `power > order`.
    pub fn monomial(power: usize, c: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = BigInt::from(c);
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        QSeries { coeffs, order }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        QSeries { coeffs: self.coeffs[..=order].to_vec(), order }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        QSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
            order,
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.order < self.order {
            *self = self.truncate(other.order);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        QSeries { coeffs: self.coeffs.iter().map(|c| c * &k).collect(), order: self.order }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in k..=self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &QPolynomial) -> Self {
        self.mul(&p.truncate(self.order))
    }

    pub fn eval_at_one(&self) -> Result<BigInt> {
        Err(Error::Domain("q=1 evaluation of a truncated series is meaningless".into()))
    }

    /// The exact polynomial, when the series is known to vanish above
    /// `max_degree` (checked against the stored coefficients).
    pub fn to_polynomial(&self, max_degree: usize) -> Result<QPolynomial> {
        if max_degree > self.order {
            return Err(Error::Domain(format!(
                "degree bound {max_degree} exceeds truncation order {}",
                self.order
            )));
        }
        if self.coeffs[max_degree + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!("series has terms above degree {max_degree}")));
        }
        Ok(QPolynomial::from_coeffs(self.coeffs[..=max_degree].to_vec()))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coeff_list(f, &self.coeffs)
    }
}

impl CharCoeff for QSeries {
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn sub_scaled(&mut self, other: &Self, k: i64) {
        *self = QSeries::sub(self, &other.scale(k));
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(k)
    }
}

/// `(q)_m = ∏_{k=1..m} (1 − q^k)`.
pub fn poch(m: usize) -> QPolynomial {
    let mut coeffs = vec![BigInt::one()];
    for k in 1..=m {
        let mut next = coeffs.clone();
        next.resize(coeffs.len() + k, BigInt::zero());
        for (i, c) in coeffs.iter().enumerate() {
            next[i + k] -= c;
        }
        coeffs = next;
    }
    QPolynomial::from_coeffs(coeffs)
}

/// `1/(q)_m` through `q^order`.
pub fn inv_poch(m: usize, order: usize) -> QSeries {
    let mut s = QSeries::one(order);
    for k in 1..=m {
        // divide by (1 − q^k)
        for i in k..=order {
            let prev = s.coeffs[i - k].clone();
            s.coeffs[i] += prev;
        }
    }
    s
}

/// Table of `1/(q)_m` for `m = 0..=max_m`.
pub fn inv_poch_table(max_m: usize, order: usize) -> Vec<QSeries> {
    let mut table = Vec::with_capacity(max_m + 1);
    let mut s = QSeries::one(order);
    table.push(s.clone());
    for k in 1..=max_m {
        for i in k..=order {
            let prev = s.coeffs[i - k].clone();
            s.coeffs[i] += prev;
        }
        table.push(s.clone());
    }
    table
}

/// Gaussian binomial; zero unless `0 ≤ bottom ≤ top`.
pub fn qbinom(top: i64, bottom: i64) -> QPolynomial {
    if bottom < 0 || top < bottom {
        return QPolynomial::zero();
    }
    let (n, k) = (top as usize, bottom as usize);
    let degree = k * (n - k);
    poch(n)
        .truncate(degree)
        .mul(&inv_poch(k, degree))
        .mul(&inv_poch(n - k, degree))
        .to_polynomial(degree)
        .expect("Gaussian binomial is a polynomial")
}

/// A character whose multiplicities are truncated q-series of a common order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterQSeries {
    terms: BTreeMap<Weight, QSeries>,
    order: usize,
}

impl CharacterQSeries {
    pub fn zero(order: usize) -> Self {
        CharacterQSeries { terms: BTreeMap::new(), order }
    }

    /// The constant series 1 at weight 0.
    pub fn one(rank: usize, order: usize) -> Self {
        Self::monomial(Weight::zero(rank), QSeries::one(order))
    }

    pub fn monomial(w: Weight, s: QSeries) -> Self {
        let order = s.order();
        let mut c = Self::zero(order);
        c.add_term(w, &s);
        c
    }

    pub fn from_character(ch: &Character, order: usize) -> Self {
        let mut c = Self::zero(order);
        for (w, m) in &ch.support {
            c.add_term(w.clone(), &QSeries::monomial(0, *m, order));
        }
        c
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Weight, QSeries> {
        &self.terms
    }

    pub fn get(&self, w: &Weight) -> QSeries {
        self.terms.get(w).cloned().unwrap_or_else(|| QSeries::zero(self.order))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Weight, s: &QSeries) {
        if s.order() < self.order {
            *self = self.truncate(s.order());
        }
        let order = self.order;
        let entry = self.terms.entry(w.clone()).or_insert_with(|| QSeries::zero(order));
        entry.add_assign(&s.truncate(order));
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(order);
        for (w, s) in &self.terms {
            out.add_term(w.clone(), &s.truncate(order));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.order);
        for (w, s) in &other.terms {
            out.add_term(w.clone(), s);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.order < self.order {
            *self = self.truncate(other.order);
        }
        for (w, s) in &other.terms {
            self.add_term(w.clone(), s);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        CharacterQSeries {
            terms: self.terms.iter().map(|(w, s)| (w.clone(), s.scale(k))).filter(|(_, s)| !s.is_zero()).collect(),
            order: self.order,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order.min(other.order));
        for (a, sa) in &self.terms {
            for (b, sb) in &other.terms {
                out.add_term(a.add(b), &sa.mul(sb));
            }
        }
        out
    }

    pub fn mul_series(&self, s: &QSeries) -> Self {
        let mut out = Self::zero(self.order.min(s.order()));
        for (w, t) in &self.terms {
            out.add_term(w.clone(), &t.mul(s));
        }
        out
    }

    pub fn mul_poly(&self, p: &QPolynomial) -> Self {
        self.mul_series(&p.truncate(self.order))
    }

    pub fn mul_character(&self, ch: &Character) -> Self {
        self.mul(&Self::from_character(ch, self.order))
    }

    pub fn as_map(&self) -> &BTreeMap<Weight, QSeries> {
        &self.terms
    }

    /// Total mass of the q^0 layer.
    pub fn constant_layer(&self) -> Character {
        let mut ch = Character::new();
        for (w, s) in &self.terms {
            let c: i64 = s.coeff(0).try_into().expect("small multiplicity");
            ch.add_term(w.clone(), c);
        }
        ch
    }
}
