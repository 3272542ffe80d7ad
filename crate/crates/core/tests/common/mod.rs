//! Independent oracles: plain `i128` series arithmetic, partition counting
//! and brute-force monomial enumeration. Nothing here calls the series or
//! enumeration code under test.
#![allow(dead_code)]

use std::collections::BTreeMap;

use qflag::fixtures::Fixture;
use qflag::groebner::MonomialIdeal;
use qflag::lie::{Character, Weight};
use qflag::qseries::QSeries;

pub type Series = Vec<i128>;

/// Partitions of `k` with parts at most `m`, for `k = 0..=n`: the series of `1/(q)_m`.
pub fn inv_poch(m: usize, n: usize) -> Series {
    let mut t = vec![vec![0i128; n + 1]; m + 1];
    for row in t.iter_mut() {
        row[0] = 1;
    }
    for part in 1..=m {
        for k in 1..=n {
            t[part][k] = t[part - 1][k] + if k >= part { t[part][k - part] } else { 0 };
        }
    }
    t[m].clone()
}

pub fn mul(a: &Series, b: &Series) -> Series {
    let n = a.len().min(b.len());
    let mut out = vec![0i128; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

pub fn add(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `±q^k` truncated at order `n`.
pub fn monomial(k: i64, sign: i128, n: usize) -> Series {
    let mut s = vec![0i128; n + 1];
    if (0..=n as i64).contains(&k) {
        s[k as usize] = sign;
    }
    s
}

pub fn to_i128(s: &QSeries) -> Series {
    (0..=s.order()).map(|k| i128::try_from(s.coeff(k)).unwrap()).collect()
}

/// Coefficients of the Gaussian binomial `[n, k]` by counting partitions
/// inside a `k × (n − k)` box.
pub fn box_partitions(n: usize, k: usize) -> Vec<i128> {
    if k > n {
        return vec![0];
    }
    let (rows, cols) = (k, n - k);
    let mut counts = vec![0i128; rows * cols + 1];
    fn rec(rows_left: usize, max_part: usize, size: usize, counts: &mut [i128]) {
        if rows_left == 0 {
            counts[size] += 1;
            return;
        }
        for p in 0..=max_part {
            rec(rows_left - 1, p, size + p, counts);
        }
    }
    rec(rows, cols, 0, &mut counts);
    counts
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of nonnegative `m` with `Σ_{a ∈ block i} m_a = M_i`, blocks of size `D_i`.
pub fn stars_and_bars(dims: &[u64], m: &[u32]) -> u64 {
    dims.iter().zip(m).map(|(&d, &mi)| binomial(mi as u64 + d - 1, d - 1)).product()
}

/// Exponent vectors of total multidegree `m` over variables of unit
/// multidegree, by brute-force recursion.
pub fn monomials_of_degree(multideg: &[Vec<u32>], m: &[u32]) -> Vec<Vec<u32>> {
    fn rec(i: usize, multideg: &[Vec<u32>], left: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == multideg.len() {
            if left.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let dir = multideg[i].iter().position(|&d| d == 1).unwrap();
        for e in 0..=left[dir] {
            left[dir] -= e;
            cur.push(e);
            rec(i + 1, multideg, left, cur, out);
            cur.pop();
            left[dir] += e;
        }
    }
    let mut out = Vec::new();
    rec(0, multideg, &mut m.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Character of the degree-`m` piece of `S/⟨LT⟩` from standard monomials.
pub fn standard_monomial_character(fx: &Fixture, lt: &MonomialIdeal, m: &[u32]) -> Character {
    let degs: Vec<Vec<u32>> = fx.variables.iter().map(|v| v.multidegree.clone()).collect();
    let rank = fx.algebra.rank;
    let mut ch = Character::new();
    for e in monomials_of_degree(&degs, m) {
        if lt.contains(&e) {
            continue;
        }
        let mut w = Weight::zero(rank);
        for (v, &k) in fx.variables.iter().zip(&e) {
            w = w.add(&v.weight.scale(k as i64));
        }
        ch.add_term(w, 1);
    }
    ch
}

/// `Sym²` of a character through the Adams operation.
pub fn sym2(ch: &Character) -> Character {
    let mut out = BTreeMap::<Weight, i64>::new();
    for (a, ma) in &ch.support {
        for (b, mb) in &ch.support {
            *out.entry(a.add(b)).or_default() += ma * mb;
        }
        *out.entry(a.scale(2)).or_default() += ma;
    }
    let mut c = Character::new();
    for (w, m) in out {
        assert_eq!(m % 2, 0);
        c.add_term(w, m / 2);
    }
    c
}

/// sl2 fermionic sum written out directly: `M_{(L−2k)Λ, LΛ}(q)` from
/// partitions of `k`, vacancies `P_a = L − 2Σ_b min(a,b) m_b`, cocharge
/// `Σ_{a,b} min(a,b) m_a m_b`.
pub fn sl2_fermionic(l: i64, k: u32) -> Vec<i128> {
    fn parts(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in (1..=max.min(n)).rev() {
            for mut rest in parts(n - p, p) {
                rest.insert(0, p);
                out.push(rest);
            }
        }
        out
    }
    fn gauss(top: i64, bottom: i64) -> Vec<i128> {
        if bottom < 0 || top < bottom {
            return vec![];
        }
        box_partitions(top as usize, bottom as usize)
    }
    let mut total: Vec<i128> = vec![0; 1];
    for p in parts(k, k) {
        let maxlen = p.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0i64; maxlen + 1];
        for &x in &p {
            m[x as usize] += 1;
        }
        let vac = |a: usize| -> i64 { l - 2 * (1..=maxlen).map(|b| a.min(b) as i64 * m[b]).sum::<i64>() };
        if (1..=2 * maxlen + 2).any(|a| vac(a) < 0) {
            continue;
        }
        let mut cc = 0i64;
        for a in 1..=maxlen {
            for b in 1..=maxlen {
                cc += a.min(b) as i64 * m[a] * m[b];
            }
        }
        let mut term = vec![0i128; cc as usize + 1];
        term[cc as usize] = 1;
        for a in 1..=maxlen {
            if m[a] > 0 {
                let g = gauss(vac(a) + m[a], m[a]);
                let mut next = vec![0i128; term.len() + g.len() - 1];
                for (i, x) in term.iter().enumerate() {
                    for (j, y) in g.iter().enumerate() {
                        next[i + j] += x * y;
                    }
                }
                term = next;
            }
        }
        if total.len() < term.len() {
            total.resize(term.len(), 0);
        }
        for (i, x) in term.iter().enumerate() {
            total[i] += x;
        }
    }
    while total.len() > 1 && *total.last().unwrap() == 0 {
        total.pop();
    }
    total
}

/// Two-variable identity sides in oracle arithmetic.
pub fn identity_35(m1: i64, m2: i64, n: usize) -> (Series, Series) {
    let lhs = mul(&mul(&monomial(m1 * m2, 1, n), &inv_poch(m1 as usize, n)), &inv_poch(m2 as usize, n));
    let mut rhs = vec![0; n + 1];
    for m in 0..=m1.min(m2) {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let t = mul(
            &mul(&monomial(m * (m - 1) / 2, sign, n), &inv_poch(m as usize, n)),
            &mul(&inv_poch((m1 - m) as usize, n), &inv_poch((m2 - m) as usize, n)),
        );
        rhs = add(&rhs, &t);
    }
    (lhs, rhs)
}

pub fn identity_36(m1: i64, m2: i64, n: usize) -> (Series, Series) {
    let lhs = mul(&inv_poch(m1 as usize, n), &inv_poch(m2 as usize, n));
    let mut rhs = vec![0; n + 1];
    for m in 0..=m1.min(m2) {
        let t = mul(
            &mul(&monomial((m1 - m) * (m2 - m), 1, n), &inv_poch(m as usize, n)),
            &mul(&inv_poch((m1 - m) as usize, n), &inv_poch((m2 - m) as usize, n)),
        );
        rhs = add(&rhs, &t);
    }
    (lhs, rhs)
}
