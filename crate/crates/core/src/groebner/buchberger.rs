//! Reduced lexicographic Gröbner bases by Buchberger's algorithm with the
//! coprime and chain criteria and the normal selection strategy.

use std::collections::{BTreeSet, HashSet};

use super::coeff::CoeffExt;
use super::ideal::MonomialIdeal;
use super::poly::{Exponents, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

pub const DEFAULT_PAIR_LIMIT: usize = 200_000;

/// Polynomial in order-key coordinates, terms strictly decreasing.
#[derive(Clone, Debug, PartialEq)]
struct Sorted {
    terms: Vec<(Exponents, CoeffExt)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn quotient(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Sorted {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().iter().map(|(e, c)| (order.to_key(e), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Sorted { terms }
    }

    fn to_poly(&self, order: &MonomialOrder) -> Polynomial {
        let nvars = order.len();
        Polynomial::from_terms(nvars, self.terms.iter().map(|(k, c)| (order.from_key(k), c.clone())))
            .expect("consistent arity")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Exponents {
        &self.terms[0].0
    }

    fn monic(mut self) -> Self {
        if let Some(inv) = self.terms.first().and_then(|t| t.1.inv()) {
            for t in &mut self.terms {
                t.1 = &t.1 * &inv;
            }
        }
        self
    }

    /// `self − c · x^shift · other`, merging the sorted term lists.
    fn sub_mul(&self, c: &CoeffExt, shift: &[u32], other: &Sorted) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let scaled = other.terms.iter().map(|(e, oc)| {
            let e: Exponents = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            (e, -&(c * oc))
        });
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = scaled.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (e, c1) = a.next().unwrap();
                        let (_, c2) = b.next().unwrap();
                        let s = &c1 + &c2;
                        if !s.is_zero() {
                            out.push((e, s));
                        }
                    }
                },
            }
        }
        Sorted { terms: out }
    }

    /// Full reduction modulo a list of monic polynomials.
    fn normal_form(&self, basis: &[Sorted]) -> Sorted {
        let mut p = self.clone();
        let mut rem: Vec<(Exponents, CoeffExt)> = Vec::new();
        while !p.is_zero() {
            let (lm, lc) = p.terms[0].clone();
            match basis.iter().find(|g| divides(g.lead(), &lm)) {
                Some(g) => {
                    let shift = quotient(&lm, g.lead());
                    p = p.sub_mul(&lc, &shift, g);
                }
                None => {
                    rem.push((lm, lc));
                    p.terms.remove(0);
                }
            }
        }
        Sorted { terms: rem }
    }

    fn s_poly(f: &Sorted, g: &Sorted) -> Sorted {
        let l = lcm(f.lead(), g.lead());
        let fs = Sorted { terms: Vec::new() }.sub_mul(&CoeffExt::integer(-1), &quotient(&l, f.lead()), f);
        fs.sub_mul(&CoeffExt::one(), &quotient(&l, g.lead()), g)
    }
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    /// Monic, inter-reduced, sorted by leading monomial (largest first).
    pub polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<_> = self.polys.iter().map(|p| Sorted::from_poly(p, &self.order)).collect();
        Sorted::from_poly(f, &self.order).normal_form(&basis).to_poly(&self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let basis: Vec<_> = self.polys.iter().map(|p| Sorted::from_poly(p, &self.order)).collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !Sorted::s_poly(&basis[i], &basis[j]).normal_form(&basis).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_limit(generators, order, DEFAULT_PAIR_LIMIT)
}

pub fn buchberger_with_limit(
    generators: &[Polynomial],
    order: &MonomialOrder,
    pair_limit: usize,
) -> Result<GroebnerBasis> {
    if generators.iter().any(|g| g.nvars() != order.len()) {
        return Err(Error::Domain("generators and order have different ambient rings".into()));
    }
    if generators.iter().any(|g| g.is_zero()) {
        return Err(Error::Domain("zero generator".into()));
    }
    let mut basis: Vec<Sorted> = Vec::new();
    // pending pairs keyed by lcm so that the smallest lcm is selected first
    let mut queue: BTreeSet<(Exponents, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Sorted>,
                    queue: &mut BTreeSet<(Exponents, usize, usize)>,
                    pending: &mut HashSet<(usize, usize)>,
                    g: Sorted|
     -> Result<()> {
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            queue.insert((lcm(b.lead(), g.lead()), i, k));
            pending.insert((i, k));
        }
        basis.push(g);
        if queue.len() > pair_limit {
            return Err(Error::PairQueueOverflow { limit: pair_limit });
        }
        Ok(())
    };

    for g in generators {
        let s = Sorted::from_poly(g, order).normal_form(&basis);
        if !s.is_zero() {
            push(&mut basis, &mut queue, &mut pending, s.monic())?;
        }
    }

    while let Some((l, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if coprime(basis[i].lead(), basis[j].lead()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead(), &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = Sorted::s_poly(&basis[i], &basis[j]).normal_form(&basis);
        if !r.is_zero() {
            push(&mut basis, &mut queue, &mut pending, r.monic())?;
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by another one
    let mut keep: Vec<Sorted> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && divides(h.lead(), g.lead()) && (h.lead() != g.lead() || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // inter-reduce the tails
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Sorted> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let head = Sorted { terms: vec![keep[i].terms[0].clone()] };
        let tail = Sorted { terms: keep[i].terms[1..].to_vec() }.normal_form(&others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(Sorted { terms }.monic());
    }
    reduced.sort_by(|a, b| b.lead().cmp(a.lead()));
    Ok(GroebnerBasis { order: order.clone(), polys: reduced.iter().map(|s| s.to_poly(order)).collect() })
}

/// Minimal generators of the ideal of leading terms.
pub fn lt_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.leading_monomials())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nvars: usize, i: usize) -> Polynomial {
        Polynomial::variable(nvars, i)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        // x1 xb1 + x2 xb2 + x3 xb3 with x1 > x2 > x3 > xb1 > xb2 > xb3
        let n = 6;
        let sigma = x(n, 0).mul(&x(n, 3)).add(&x(n, 1).mul(&x(n, 4))).add(&x(n, 2).mul(&x(n, 5)));
        let ord = MonomialOrder::identity(n);
        let gb = buchberger(&[sigma.scale(&CoeffExt::integer(3))], &ord).unwrap();
        assert_eq!(gb.polys, vec![sigma]);
        assert_eq!(lt_ideal(&gb).generators(), &[vec![1, 0, 0, 1, 0, 0]]);
    }

    #[test]
    fn textbook_example() {
        // CLO: x^3 − 2xy, x^2 y − 2y^2 + x in lex x > y
        let n = 2;
        let c = CoeffExt::integer;
        let f1 = Polynomial::from_terms(n, [(vec![3, 0], c(1)), (vec![1, 1], c(-2))]).unwrap();
        let f2 = Polynomial::from_terms(n, [(vec![2, 1], c(1)), (vec![0, 2], c(-2)), (vec![1, 0], c(1))]).unwrap();
        let gb = buchberger(&[f1.clone(), f2.clone()], &MonomialOrder::identity(n)).unwrap();
        // reduced basis is {x − 2y², y³}
        let g1 = Polynomial::from_terms(n, [(vec![1, 0], c(1)), (vec![0, 2], c(-2))]).unwrap();
        let g2 = Polynomial::from_terms(n, [(vec![0, 3], c(1))]).unwrap();
        assert_eq!(gb.polys, vec![g1, g2]);
        assert!(gb.contains(&f1) && gb.contains(&f2));
        assert!(gb.s_pairs_reduce_to_zero());
    }

    #[test]
    fn pair_limit_is_enforced() {
        let n = 2;
        let c = CoeffExt::integer;
        let f1 = Polynomial::from_terms(n, [(vec![3, 0], c(1)), (vec![1, 1], c(-2))]).unwrap();
        let f2 = Polynomial::from_terms(n, [(vec![2, 1], c(1)), (vec![0, 2], c(-2)), (vec![1, 0], c(1))]).unwrap();
        let err = buchberger_with_limit(&[f1, f2], &MonomialOrder::identity(n), 0).unwrap_err();
        assert!(matches!(err, Error::PairQueueOverflow { limit: 0 }));
    }

    #[test]
    fn zero_generator_rejected() {
        assert!(buchberger(&[Polynomial::zero(2)], &MonomialOrder::identity(2)).is_err());
    }
}
