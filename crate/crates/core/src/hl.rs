//! Modified Hall-Littlewood polynomials through the fermionic sum over
//! configurations `m_a^{(i)}`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Rational, Weight};
use crate::qseries::{qbinom, CharacterQSeries, QPolynomial};

/// `Φ_ab^{ij} = 2(α_i,α_j)/(α_i² α_j²) · min(a α_i², b α_j²)`, with 0-based
/// root indices and 1-based string lengths.
pub fn phi(algebra: &LieAlgebra, i: usize, j: usize, a: usize, b: usize) -> Result<Rational> {
    let l = algebra.rank;
    if i >= l || j >= l {
        return Err(Error::Domain(format!("root index out of range for {}", algebra.name())));
    }
    if a == 0 || b == 0 {
        return Err(Error::Domain("string lengths start at 1".into()));
    }
    let ni = algebra.root_norms[i];
    let nj = algebra.root_norms[j];
    let ip = algebra.inner(&algebra.simple_root(i), &algebra.simple_root(j));
    let lhs = ni * Rational::from_integer(a as i64);
    let rhs = nj * Rational::from_integer(b as i64);
    Ok(Rational::from_integer(2) * ip / (ni * nj) * lhs.min(rhs))
}

/// A configuration: `m[i][a-1] = m_a^{(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HLConfiguration {
    pub m: Vec<Vec<u32>>,
}

impl HLConfiguration {
    /// `Σ_a a m_a^{(i)}` for each `i`.
    pub fn root_content(&self) -> Vec<u32> {
        self.m
            .iter()
            .map(|row| row.iter().enumerate().map(|(a, &k)| (a as u32 + 1) * k).sum())
            .collect()
    }

    fn max_len(&self) -> usize {
        self.m.iter().map(|r| r.len()).max().unwrap_or(0)
    }
}

/// Vacancies and cocharge of a configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct FermionicData {
    /// `P[i][a-1]` for `a = 1..=span`.
    pub vacancy: Vec<Vec<i64>>,
    pub cocharge: i64,
}

/// Partitions of `n` as multiplicity vectors `m[a-1]`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            let mut m = vec![0u32; cur.first().copied().unwrap_or(0) as usize];
            for &p in cur.iter() {
                m[p as usize - 1] += 1;
            }
            out.push(m);
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All configurations with root content `k`.
pub fn configurations(k: &[u32]) -> Vec<HLConfiguration> {
    let mut out = vec![HLConfiguration { m: Vec::new() }];
    for &ki in k {
        let parts = partitions(ki);
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for c in &out {
            for p in &parts {
                let mut m = c.m.clone();
                m.push(p.clone());
                next.push(HLConfiguration { m });
            }
        }
        out = next;
    }
    out
}

/// Vacancies `P_a^{(i)} = (λ, α_i∨) − Σ_{j,b} Φ_ab^{ij} m_b^{(j)}` for
/// `a ≤ span`, and the cocharge `½ Σ m Φ m`.
pub fn fermionic_data(algebra: &LieAlgebra, lambda: &Weight, config: &HLConfiguration, span: usize) -> Result<FermionicData> {
    let l = algebra.rank;
    let mut vacancy = vec![vec![0i64; span]; l];
    let mut twice = Rational::zero();
    for i in 0..l {
        for a in 1..=span {
            let mut s = Rational::zero();
            for j in 0..l {
                for (b0, &mb) in config.m[j].iter().enumerate() {
                    if mb == 0 {
                        continue;
                    }
                    s += phi(algebra, i, j, a, b0 + 1)? * Rational::from_integer(mb as i64);
                }
            }
            let p = Rational::from_integer(lambda.0[i]) - s;
            if !p.is_integer() {
                return Err(Error::Computation(format!("vacancy P_{a}^({}) = {p} is not an integer", i + 1)));
            }
            vacancy[i][a - 1] = p.to_integer();
            if let Some(&ma) = config.m[i].get(a - 1) {
                twice += Rational::from_integer(ma as i64) * s;
            }
        }
    }
    let c = twice / Rational::from_integer(2);
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Computation(format!("cocharge {c} of {:?} is not a nonnegative integer", config.m)));
    }
    Ok(FermionicData { vacancy, cocharge: c.to_integer() })
}

/// `M_{μλ}(q)` for `μ ≤ λ`: sum over configurations with root content
/// `λ − μ` of `q^{c̃} ∏ [P_a + m_a, m_a]`. Any negative vacancy, including
/// one at a string length with `m_a = 0`, kills the configuration.
pub fn fermionic_poly(algebra: &LieAlgebra, mu: &Weight, lambda: &Weight) -> Result<QPolynomial> {
    for w in [mu, lambda] {
        if w.rank() != algebra.rank || !w.is_dominant() {
            return Err(Error::Domain(format!("weight {w} is not dominant for {}", algebra.name())));
        }
    }
    let coords = algebra.root_coordinates(&lambda.sub(mu));
    if coords.iter().any(|c| c.is_negative()) {
        return Ok(QPolynomial::zero());
    }
    if coords.iter().any(|c| !c.is_integer()) {
        return Err(Error::Computation(format!("{lambda} − {mu} has non-integral root coordinates")));
    }
    let k: Vec<u32> = coords.iter().map(|c| c.to_integer() as u32).collect();
    let mut total = QPolynomial::zero();
    for config in configurations(&k) {
        // vacancies are piecewise linear in a with breaks below 2·max + 2
        let span = 2 * config.max_len() + 2;
        let data = fermionic_data(algebra, lambda, &config, span)?;
        if data.vacancy.iter().flatten().any(|&p| p < 0) {
            continue;
        }
        let mut term = QPolynomial::monomial(data.cocharge as usize, 1);
        for (i, row) in config.m.iter().enumerate() {
            for (a0, &ma) in row.iter().enumerate() {
                if ma > 0 {
                    let p = data.vacancy[i][a0];
                    term = term.mul(&qbinom(p + ma as i64, ma as i64));
                }
            }
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// `{μ ↦ M_{μλ}(q)}`, zero entries omitted.
pub fn modified_hl(algebra: &LieAlgebra, lambda: &Weight) -> Result<BTreeMap<Weight, QPolynomial>> {
    let mut out = BTreeMap::new();
    for mu in algebra.dominant_weights_below(lambda)? {
        let p = fermionic_poly(algebra, &mu, lambda)?;
        if !p.is_zero() {
            out.insert(mu, p);
        }
    }
    Ok(out)
}

/// `Σ_μ M_{μλ}(q) χ_μ` as a character-valued series through `q^order`.
pub fn modified_hl_character(algebra: &LieAlgebra, lambda: &Weight, order: usize) -> Result<CharacterQSeries> {
    let mut out = CharacterQSeries::zero(order);
    for (mu, p) in modified_hl(algebra, lambda)? {
        let chi = CharacterQSeries::from_character(&algebra.irreducible_character(&mu)?, order);
        out.add_assign(&chi.mul_poly(&p));
    }
    Ok(out)
}
