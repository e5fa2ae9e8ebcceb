//! Buchberger's algorithm producing reduced Gröbner bases.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Terms sorted increasingly under a fixed order, so the leading term is last.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    fn new(p: &MultiPoly, order: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("zero polynomial in basis").0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    fn to_poly(&self, nvars: usize) -> MultiPoly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        MultiPoly::from_sorted_terms(nvars, terms)
    }

    /// `self - c * shift * g`, where `g` is sorted under the same order.
    fn sub_mul(&self, c: &Rational, shift: &Monomial, g: &Sorted, order: MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, x)| (m.mul(shift), x * c)).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (m, x) = b.next().unwrap();
                    out.push((m, -x));
                }
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let d = x - &y;
                    if !d.is_zero() {
                        out.push((m.clone(), d));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

/// Full reduction of `f` modulo monic `basis`.
fn reduce(f: &Sorted, basis: &[Sorted], order: MonomialOrder) -> Sorted {
    let mut work = f.clone();
    // Irreducible terms, collected highest first.
    let mut rest: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = work.lead().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let shift = m.div(g.lm());
                work = work.sub_mul(&c, &shift, g, order);
            }
            None => {
                work.terms.pop();
                rest.push((m, c));
            }
        }
    }
    rest.reverse();
    Sorted { terms: rest }
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: MonomialOrder) -> Sorted {
    let lcm = f.lm().lcm(g.lm());
    let fm = lcm.div(f.lm());
    let gm = lcm.div(g.lm());
    let zero = Sorted { terms: Vec::new() };
    let lhs = zero.sub_mul(&-Rational::one(), &fm, f, order);
    lhs.sub_mul(&Rational::one(), &gm, g, order)
}

/// A reduced Gröbner basis: monic generators, sorted by decreasing leading
/// monomial, none with a term divisible by another's leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<MultiPoly>,
    sorted: Vec<SortedKey>,
}

// Wrapper so the derived impls on `GroebnerBasis` only look at `generators`.
#[derive(Clone, Debug)]
struct SortedKey(Sorted);

impl PartialEq for SortedKey {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for SortedKey {}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The zero ideal has an empty basis.
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].total_degree() == Some(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.0.lm().clone()).collect()
    }

    /// Remainder of `f` on division by the basis. Unique for a reduced basis.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, f.nvars()));
        }
        let basis: Vec<Sorted> = self.sorted.iter().map(|s| s.0.clone()).collect();
        Ok(reduce(&Sorted::new(f, self.order), &basis, self.order).to_poly(self.nvars))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let basis: Vec<Sorted> = self.sorted.iter().map(|s| s.0.clone()).collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = s_polynomial(&basis[i], &basis[j], self.order);
                if !reduce(&s, &basis, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the reducedness conditions.
    pub fn is_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, g)| {
            g.0.lead().is_some_and(|(_, c)| c.is_one())
                && g.0
                    .terms
                    .iter()
                    .all(|(m, _)| self.sorted.iter().enumerate().all(|(j, h)| i == j || !h.0.lm().divides(m)))
        })
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: u32,
    serial: usize,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// Pairs are processed by increasing degree of the lcm of their leading
/// monomials. Pairs with coprime leading monomials are skipped (product
/// criterion), as are pairs of two monomials, whose S-polynomial vanishes.
pub fn buchberger(gens: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let nvars = gens.first().map_or(0, MultiPoly::nvars);
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::AmbientMismatch(nvars, g.nvars()));
    }
    let mut basis: Vec<Sorted> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut heap = BinaryHeap::new();
    let mut serial = 0;

    let mut install =
        |s: Sorted, basis: &mut Vec<Sorted>, alive: &mut Vec<bool>, heap: &mut BinaryHeap<Reverse<Pair>>| -> bool {
            let unit = s.lm().is_one();
            let idx = basis.len();
            for (j, g) in basis.iter().enumerate() {
                if !alive[j] {
                    continue;
                }
                let degree = g.lm().lcm(s.lm()).degree();
                heap.push(Reverse(Pair { degree, serial, i: j, j: idx }));
                serial += 1;
            }
            // Older elements whose leading monomial the newcomer divides stay for
            // pair generation but are dropped from the final basis.
            for (j, g) in basis.iter().enumerate() {
                if alive[j] && s.lm().divides(g.lm()) {
                    alive[j] = false;
                }
            }
            basis.push(s);
            alive.push(true);
            unit
        };

    let mut input: Vec<Sorted> = gens.iter().filter(|g| !g.is_zero()).map(|g| Sorted::new(g, order)).collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in input {
        let active: Vec<Sorted> = basis.iter().zip(&alive).filter(|(_, a)| **a).map(|(b, _)| b.clone()).collect();
        let mut r = reduce(&g, &active, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if install(r, &mut basis, &mut alive, &mut heap) {
            return Ok(unit_basis(nvars, order));
        }
    }

    while let Some(Reverse(pair)) = heap.pop() {
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        if f.lm().is_coprime(g.lm()) || (f.terms.len() == 1 && g.terms.len() == 1) {
            continue;
        }
        let s = s_polynomial(f, g, order);
        let active: Vec<Sorted> = basis.iter().zip(&alive).filter(|(_, a)| **a).map(|(b, _)| b.clone()).collect();
        let mut r = reduce(&s, &active, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if install(r, &mut basis, &mut alive, &mut heap) {
            return Ok(unit_basis(nvars, order));
        }
    }

    let mut minimal: Vec<Sorted> = basis.into_iter().zip(alive).filter(|(_, a)| *a).map(|(b, _)| b).collect();
    // Equal leading monomials cannot both survive `install`, so what is left
    // is a minimal basis; inter-reduce tails.
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    for i in 0..minimal.len() {
        let others: Vec<Sorted> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let mut r = reduce(&minimal[i], &others, order);
        debug_assert!(r.lm() == minimal[i].lm());
        r.make_monic();
        minimal[i] = r;
    }
    Ok(GroebnerBasis {
        nvars,
        order,
        generators: minimal.iter().map(|s| s.to_poly(nvars)).collect(),
        sorted: minimal.into_iter().map(SortedKey).collect(),
    })
}

fn unit_basis(nvars: usize, order: MonomialOrder) -> GroebnerBasis {
    let one = MultiPoly::one(nvars);
    GroebnerBasis { nvars, order, sorted: vec![SortedKey(Sorted::new(&one, order))], generators: vec![one] }
}
