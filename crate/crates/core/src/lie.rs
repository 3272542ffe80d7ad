//! Root data, fundamental-representation weights and characters for the
//! classical series A_{n-1} (sl_n) and B_n (so_{2n+1}).
//!
//! Weights are stored canonically as Dynkin labels `(λ, α_i∨)`. The
//! ε-coordinates (overcomplete for type A, half-integral for spinors) are only
//! a presentation layer: two weights are equal iff their labels agree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

/// An integral weight in Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut d = vec![0; rank];
        d[i - 1] = 1;
        Weight(d)
    }

    /// `Σ M_i Λ_i`.
    pub fn from_multidegree(m: &[u32]) -> Self {
        Weight(m.iter().map(|&x| x as i64).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Coefficients that a character can carry: plain multiplicities, exact
/// q-polynomials or truncated q-series.
pub trait CharCoeff: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    /// `self -= k * other`
    fn sub_scaled(&mut self, other: &Self, k: i64);
    fn scaled(&self, k: i64) -> Self;
}

impl CharCoeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sub_scaled(&mut self, other: &Self, k: i64) {
        *self -= k * other;
    }
    fn scaled(&self, k: i64) -> Self {
        k * self
    }
}

/// A (virtual) character: weight multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    pub support: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trivial(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn monomial(w: Weight, mult: i64) -> Self {
        let mut c = Self::new();
        c.add_term(w, mult);
        c
    }

    pub fn add_term(&mut self, w: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.support.entry(w.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.support.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.support.get(w).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        out.add_assign_scaled(other, 1);
        out
    }

    pub fn add_assign_scaled(&mut self, other: &Character, k: i64) {
        for (w, m) in &other.support {
            self.add_term(w.clone(), k * m);
        }
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Character::new();
        out.add_assign_scaled(self, k);
        out
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (a, ma) in &self.support {
            for (b, mb) in &other.support {
                out.add_term(a.add(b), ma * mb);
            }
        }
        out
    }

    /// Character of the contragredient module.
    pub fn dual(&self) -> Character {
        Character {
            support: self.support.iter().map(|(w, m)| (w.neg(), *m)).collect(),
        }
    }

    /// Sum of multiplicities (dimension for a genuine module).
    pub fn mass(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub family: Family,
    pub rank: usize,
    /// Simple roots in ε-coordinates.
    pub simple_roots: Vec<Vec<Rational>>,
    /// Fundamental weights in ε-coordinates.
    pub fundamental_weights: Vec<Vec<Rational>>,
    /// Gram matrix of the ε basis.
    pub gram: Vec<Vec<Rational>>,
    /// `cartan[i][j] = (α_i, α_j∨)`; row i holds the Dynkin labels of α_i.
    pub cartan: Vec<Vec<i64>>,
    /// `(Λ_i, α_j∨)`, the identity by construction; kept as a checked invariant.
    pub cartan_pairing: Vec<Vec<i64>>,
    pub root_norms: Vec<Rational>,
    /// Positive roots in ε-coordinates.
    pub positive_roots: Vec<Vec<Rational>>,
    positive_roots_dynkin: Vec<Weight>,
    /// `(Λ_i, Λ_j)`.
    form: Vec<Vec<Rational>>,
    /// Inverse Cartan matrix: root coordinates are `d · inv_cartan`.
    inv_cartan: Vec<Vec<Rational>>,
    pub fund_rep_dims: Vec<u64>,
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn dot(gram: &[Vec<Rational>], u: &[Rational], v: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..u.len() {
        if u[i].is_zero() {
            continue;
        }
        for j in 0..v.len() {
            s += u[i] * gram[i][j] * v[j];
        }
    }
    s
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..n).map(|j| if i == j { r(1) } else { r(0) }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero()).expect("singular Cartan matrix");
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[i].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Parse an algebra name such as `sl3` or `so5`.
pub fn parse_algebra_name(name: &str) -> Result<(Family, usize)> {
    let bad = || Error::Config(format!("unknown algebra `{name}` (expected slN or soM with M odd)"));
    if let Some(n) = name.strip_prefix("sl") {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(bad());
        }
        Ok((Family::A, n - 1))
    } else if let Some(m) = name.strip_prefix("so") {
        let m: usize = m.parse().map_err(|_| bad())?;
        if m < 5 || m % 2 == 0 {
            return Err(bad());
        }
        Ok((Family::B, (m - 1) / 2))
    } else {
        Err(bad())
    }
}

pub fn build_algebra(family: Family, rank: usize) -> Result<LieAlgebra> {
    if rank == 0 {
        return Err(Error::Config("rank must be positive".into()));
    }
    if family == Family::B && rank < 2 {
        return Err(Error::Config("B_n requires n >= 2".into()));
    }
    let (dim, gram, simple_roots, fundamental_weights, positive_roots, fund_rep_dims) = match family {
        Family::A => {
            let n = rank + 1;
            let gram: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { r(1) } else { r(0) } - Rational::new(1, n as i64))
                        .collect()
                })
                .collect();
            let e = |i: usize| -> Vec<Rational> {
                let mut v = vec![r(0); n];
                v[i] = r(1);
                v
            };
            let sub = |u: Vec<Rational>, v: Vec<Rational>| -> Vec<Rational> {
                u.into_iter().zip(v).map(|(a, b)| a - b).collect()
            };
            let simple: Vec<_> = (0..rank).map(|i| sub(e(i), e(i + 1))).collect();
            let fund: Vec<_> = (0..rank)
                .map(|i| (0..n).map(|k| if k <= i { r(1) } else { r(0) }).collect())
                .collect();
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(sub(e(i), e(j)));
                }
            }
            let dims = (1..=rank).map(|i| binomial(n as u64, i as u64)).collect();
            (n, gram, simple, fund, pos, dims)
        }
        Family::B => {
            let n = rank;
            let gram: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { r(1) } else { r(0) }).collect())
                .collect();
            let e = |i: usize, s: i64| -> Vec<Rational> {
                let mut v = vec![r(0); n];
                v[i] = r(s);
                v
            };
            let add = |u: Vec<Rational>, v: Vec<Rational>| -> Vec<Rational> {
                u.into_iter().zip(v).map(|(a, b)| a + b).collect()
            };
            let mut simple: Vec<_> = (0..n - 1).map(|i| add(e(i, 1), e(i + 1, -1))).collect();
            simple.push(e(n - 1, 1));
            let mut fund: Vec<Vec<Rational>> = (0..n - 1)
                .map(|i| (0..n).map(|k| if k <= i { r(1) } else { r(0) }).collect())
                .collect();
            fund.push(vec![half(); n]);
            let mut pos = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pos.push(add(e(i, 1), e(j, -1)));
                    pos.push(add(e(i, 1), e(j, 1)));
                }
                pos.push(e(i, 1));
            }
            let mut dims: Vec<u64> = (1..n).map(|i| binomial(2 * n as u64 + 1, i as u64)).collect();
            dims.push(1u64 << n);
            (n, gram, simple, fund, pos, dims)
        }
    };
    let _ = dim;
    let root_norms: Vec<Rational> = simple_roots.iter().map(|a| dot(&gram, a, a)).collect();
    let coroot_pair = |u: &[Rational], j: usize| -> Rational {
        r(2) * dot(&gram, u, &simple_roots[j]) / root_norms[j]
    };
    let to_int = |x: Rational| -> i64 {
        assert!(x.is_integer(), "non-integral Cartan entry");
        x.to_integer()
    };
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| to_int(coroot_pair(&simple_roots[i], j))).collect())
        .collect();
    let cartan_pairing: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| to_int(coroot_pair(&fundamental_weights[i], j))).collect())
        .collect();
    let form: Vec<Vec<Rational>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| dot(&gram, &fundamental_weights[i], &fundamental_weights[j]))
                .collect()
        })
        .collect();
    let cartan_rat: Vec<Vec<Rational>> =
        cartan.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect();
    let inv_cartan = invert(&cartan_rat);
    let positive_roots_dynkin = positive_roots
        .iter()
        .map(|a| Weight((0..rank).map(|j| to_int(coroot_pair(a, j))).collect()))
        .collect();
    Ok(LieAlgebra {
        family,
        rank,
        simple_roots,
        fundamental_weights,
        gram,
        cartan,
        cartan_pairing,
        root_norms,
        positive_roots,
        positive_roots_dynkin,
        form,
        inv_cartan,
        fund_rep_dims,
    })
}

impl LieAlgebra {
    /// Build from a name such as `sl2`, `sl4`, `so5`, `so7`.
    pub fn named(name: &str) -> Result<Self> {
        let (family, rank) = parse_algebra_name(name)?;
        build_algebra(family, rank)
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::A => format!("sl{}", self.rank + 1),
            Family::B => format!("so{}", 2 * self.rank + 1),
        }
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots_dynkin(&self) -> &[Weight] {
        &self.positive_roots_dynkin
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    /// Inner product of two weights given in Dynkin labels.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += r(a.0[i] * b.0[j]) * self.form[i][j];
            }
        }
        s
    }

    /// Coordinates of a weight in the basis of simple roots.
    pub fn root_coordinates(&self, w: &Weight) -> Vec<Rational> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| r(w.0[i]) * self.inv_cartan[i][j]).sum())
            .collect()
    }

    /// Nonnegative integer coefficients `k` with `w = Σ k_i α_i`, if they exist.
    pub fn positive_root_combination(&self, w: &Weight) -> Option<Vec<u32>> {
        self.root_coordinates(w)
            .into_iter()
            .map(|c| {
                if c.is_integer() && c >= Rational::zero() {
                    Some(c.to_integer() as u32)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn height(&self, w: &Weight) -> Rational {
        self.root_coordinates(w).into_iter().sum()
    }

    /// `μ ≤ λ` in dominance order.
    pub fn dominated_by(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.positive_root_combination(&lambda.sub(mu)).is_some()
    }

    pub fn epsilon_coords(&self, w: &Weight) -> Vec<Rational> {
        let dim = self.gram.len();
        let mut c = vec![r(0); dim];
        for (i, d) in w.0.iter().enumerate() {
            for k in 0..dim {
                c[k] += r(*d) * self.fundamental_weights[i][k];
            }
        }
        c
    }

    pub fn weight_from_epsilon(&self, coords: &[Rational]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| {
                    let v = r(2) * dot(&self.gram, coords, &self.simple_roots[j]) / self.root_norms[j];
                    assert!(v.is_integer(), "non-integral weight");
                    v.to_integer()
                })
                .collect(),
        )
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let d = w.0[i];
        Weight(w.0.iter().zip(&self.cartan[i]).map(|(x, a)| x - d * a).collect())
    }

    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.0.iter().position(|&d| d < 0) {
            w = self.reflect(&w, i);
        }
        w
    }

    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let u = self.reflect(&v, i);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weights of the fundamental representation `L(Λ_i)` (1-based `i`) with
    /// their coordinate labels, in the coordinate order used by the fixtures.
    pub fn rep_weights(&self, i: usize) -> Result<Vec<(String, Weight)>> {
        if i == 0 || i > self.rank {
            return Err(Error::Domain(format!("fundamental index {i} out of range for {}", self.name())));
        }
        let dim = self.gram.len();
        let mut out = Vec::new();
        match self.family {
            Family::A => {
                for subset in k_subsets(dim, i) {
                    let mut c = vec![r(0); dim];
                    let mut label = String::from("x");
                    for &s in &subset {
                        c[s] = r(1);
                        label.push_str(&(s + 1).to_string());
                    }
                    out.push((label, self.weight_from_epsilon(&c)));
                }
            }
            Family::B if i == 1 => {
                let n = self.rank;
                let unit = |k: usize, s: i64| {
                    let mut c = vec![r(0); n];
                    c[k] = r(s);
                    c
                };
                for k in 0..n {
                    out.push((format!("x{}", k + 1), self.weight_from_epsilon(&unit(k, 1))));
                }
                out.push(("x0".into(), self.zero()));
                for k in (0..n).rev() {
                    out.push((format!("xb{}", k + 1), self.weight_from_epsilon(&unit(k, -1))));
                }
            }
            Family::B if i == self.rank => {
                let n = self.rank;
                for minus in 0..=n {
                    let mut layer = Vec::new();
                    for subset in k_subsets(n, minus) {
                        let mut c = vec![half(); n];
                        let mut label = vec!['p'; n];
                        for &s in &subset {
                            c[s] = -half();
                            label[s] = 'm';
                        }
                        let label: String = std::iter::once('x').chain(label).collect();
                        layer.push((label, self.weight_from_epsilon(&c)));
                    }
                    // lex with p < m
                    layer.sort_by(|a, b| b.0.cmp(&a.0));
                    out.extend(layer);
                }
            }
            Family::B => {
                return Err(Error::WeightsNotImplemented(format!(
                    "{} only supports L(Λ_1) and L(Λ_{})",
                    self.name(),
                    self.rank
                )))
            }
        }
        Ok(out)
    }

    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        self.check_dominant(lambda)?;
        let lr = lambda.add(&self.rho());
        let rho = self.rho();
        let mut num = BigRational::one();
        for alpha in &self.positive_roots_dynkin {
            let a = self.inner(&lr, alpha);
            let b = self.inner(&rho, alpha);
            num *= BigRational::new(BigInt::from(*a.numer()), BigInt::from(*a.denom()));
            num /= BigRational::new(BigInt::from(*b.numer()), BigInt::from(*b.denom()));
        }
        if !num.is_integer() || num.is_negative() {
            return Err(Error::Computation(format!("Weyl dimension of {lambda} is not a natural number")));
        }
        num.to_integer()
            .to_u64()
            .ok_or_else(|| Error::Computation("dimension overflow".into()))
    }

    fn check_dominant(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::Domain(format!("weight {w} has wrong length for {}", self.name())));
        }
        if !w.is_dominant() {
            return Err(Error::Domain(format!("weight {w} is not dominant")));
        }
        Ok(())
    }

    /// Dominant weights `μ` with `λ − μ` a nonnegative integer combination of
    /// simple roots, sorted by increasing depth below `λ` (ties lexicographic).
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check_dominant(lambda)?;
        // every such μ lies above the lowest weight w0 λ
        let lowest = match self.family {
            Family::B => lambda.neg(),
            Family::A => Weight(lambda.0.iter().rev().map(|d| -d).collect()),
        };
        let bounds = self
            .positive_root_combination(&lambda.sub(&lowest))
            .expect("λ − w0 λ lies in the positive root cone");
        let mut found = Vec::new();
        let mut k = vec![0u32; self.rank];
        loop {
            let mut mu = lambda.clone();
            for (i, &ki) in k.iter().enumerate() {
                if ki > 0 {
                    mu = mu.sub(&self.simple_root(i).scale(ki as i64));
                }
            }
            if mu.is_dominant() {
                let depth: u32 = k.iter().sum();
                found.push((depth, mu));
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == self.rank {
                    found.sort();
                    return Ok(found.into_iter().map(|(_, w)| w).collect());
                }
                if k[pos] < bounds[pos] {
                    k[pos] += 1;
                    break;
                }
                k[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Dominant-weight multiplicities of `L(λ)` via Freudenthal's recursion.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, i64>> {
        let dominant = self.dominant_weights_below(lambda)?;
        let lr = lambda.add(&self.rho());
        let top = self.inner(&lr, &lr);
        let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
        for mu in dominant {
            if &mu == lambda {
                mult.insert(mu, 1);
                continue;
            }
            let mut sum = Rational::zero();
            for alpha in &self.positive_roots_dynkin {
                let mut nu = mu.add(alpha);
                loop {
                    let m = mult.get(&self.dominant_conjugate(&nu)).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    sum += r(m) * self.inner(&nu, alpha);
                    nu = nu.add(alpha);
                }
            }
            let mr = mu.add(&self.rho());
            let denom = top - self.inner(&mr, &mr);
            let m = r(2) * sum / denom;
            if !m.is_integer() || m < Rational::zero() {
                return Err(Error::Computation(format!("Freudenthal produced {m} at {mu}")));
            }
            if !m.is_zero() {
                mult.insert(mu, m.to_integer());
            }
        }
        Ok(mult)
    }

    pub fn irreducible_character(&self, lambda: &Weight) -> Result<Character> {
        let dom = self.dominant_multiplicities(lambda)?;
        let mut ch = Character::new();
        for (mu, m) in dom {
            for w in self.orbit(&mu) {
                ch.add_term(w, m);
            }
        }
        Ok(ch)
    }

    /// Character of the `i`-th fundamental representation assembled from its
    /// coordinate weights.
    pub fn rep_character(&self, i: usize) -> Result<Character> {
        let mut ch = Character::new();
        for (_, w) in self.rep_weights(i)? {
            ch.add_term(w, 1);
        }
        Ok(ch)
    }

    /// Write a Weyl-symmetric weight map as `Σ_μ c_μ χ_μ` by repeatedly
    /// stripping the highest dominant weight.
    pub fn decompose<C: CharCoeff>(&self, input: &BTreeMap<Weight, C>) -> Result<BTreeMap<Weight, C>> {
        let mut rest: BTreeMap<Weight, C> =
            input.iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c.clone())).collect();
        for (w, c) in &rest {
            for i in 0..self.rank {
                let image = self.reflect(w, i);
                if rest.get(&image) != Some(c) {
                    return Err(Error::NotVirtualCharacter(format!(
                        "coefficient at {w} differs from its reflection {image}"
                    )));
                }
            }
        }
        let mut out = BTreeMap::new();
        let mut cache: BTreeMap<Weight, Character> = BTreeMap::new();
        let mut guard = 0usize;
        while !rest.is_empty() {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::NotVirtualCharacter("stripping did not terminate".into()));
            }
            let top = rest
                .keys()
                .filter(|w| w.is_dominant())
                .max_by(|a, b| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)))
                .cloned()
                .ok_or_else(|| Error::NotVirtualCharacter("no dominant weight in support".into()))?;
            let c = rest[&top].clone();
            if !cache.contains_key(&top) {
                cache.insert(top.clone(), self.irreducible_character(&top)?);
            }
            for (w, m) in &cache[&top].support {
                match rest.get_mut(w) {
                    Some(entry) => {
                        entry.sub_scaled(&c, *m);
                        if entry.is_zero() {
                            rest.remove(w);
                        }
                    }
                    None => {
                        rest.insert(w.clone(), c.scaled(-*m));
                    }
                }
            }
            out.insert(top, c);
        }
        Ok(out)
    }

    /// Decompose an integer character into irreducibles.
    pub fn decompose_character(&self, ch: &Character) -> Result<BTreeMap<Weight, i64>> {
        self.decompose(&ch.support)
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
