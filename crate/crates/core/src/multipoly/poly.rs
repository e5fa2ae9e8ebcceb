use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// Sparse polynomial in a fixed number of variables. Terms are kept sorted by
/// exponent vector with no zero coefficients, so derived equality is
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::from_terms(nvars, vec![(Monomial::var(nvars, i), Rational::one())])
    }

    /// Sums duplicate monomials and drops zeros. Panics if a monomial has the
    /// wrong number of variables.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            *map.entry(m).or_default() += &c;
        }
        MultiPoly { nvars, terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Builds from `(coefficient, exponents)` pairs with integer coefficients.
    pub fn from_ints(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(c, e)| (Monomial::from_exponents(e.to_vec()), Rational::from(*c))))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_unipoly(nvars: usize, var: usize, p: &UniPoly) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut m = Monomial::one(nvars);
                m.exponents_mut()[var] = k as u32;
                (m, c.clone())
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.binary_search_by(|(t, _)| t.cmp(m)).map(|i| self.terms[i].1.clone()).unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Whether variable `v` occurs in some term.
    pub fn involves(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[v] > 0)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0)).map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_degree(&self, bound: u32) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().filter(|(m, _)| m.degree() < bound).cloned().collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, point.len()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `subs[i]` for variable `i`. All substitutes must share one
    /// target ring.
    pub fn substitute(&self, subs: &[MultiPoly], target_nvars: usize) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, subs.len()));
        }
        if let Some(s) = subs.iter().find(|s| s.nvars != target_nvars) {
            return Err(Error::AmbientMismatch(target_nvars, s.nvars));
        }
        let mut powers: Vec<Vec<MultiPoly>> = subs.iter().map(|s| vec![Self::one(target_nvars), s.clone()]).collect();
        let mut acc = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target_nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `f(x + shift)`, which moves the point `shift` to the origin.
    pub fn translate(&self, shift: &[Rational]) -> Result<Self> {
        if shift.len() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, shift.len()));
        }
        let subs: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| &Self::var(self.nvars, i) + &Self::constant(self.nvars, shift[i].clone()))
            .collect();
        self.substitute(&subs, self.nvars)
    }

    /// Removes a variable that does not occur.
    pub(crate) fn drop_var(&self, v: usize) -> Self {
        debug_assert!(!self.involves(v));
        Self::from_terms(self.nvars - 1, self.terms.iter().map(|(m, c)| (m.without_var(v), c.clone())))
    }

    /// Keeps the last `nvars - k` variables. Panics if one of the first `k`
    /// occurs.
    pub fn project_out_leading(&self, k: usize) -> Self {
        Self::from_terms(
            self.nvars - k,
            self.terms.iter().map(|(m, c)| {
                assert!(m.exponents()[..k].iter().all(|&e| e == 0), "projected variable occurs");
                (Monomial::from_exponents(m.exponents()[k..].to_vec()), c.clone())
            }),
        )
    }

    /// Prepends `k` unused variables.
    pub fn lift(&self, k: usize) -> Self {
        Self::from_terms(
            self.nvars + k,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; k];
                e.extend_from_slice(m.exponents());
                (Monomial::from_exponents(e), c.clone())
            }),
        )
    }

    /// Converts a polynomial that only involves variable `var` to a
    /// univariate one.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &x)| i != var && x > 0) {
                return None;
            }
            let k = e[var] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayPoly { p: self, names }
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }

    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        MultiPoly { nvars, terms }
    }
}

fn merge(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    assert_eq!(a.nvars, b.nvars, "polynomials from different rings");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        match a.terms[i].0.cmp(&b.terms[j].0) {
            Ordering::Less => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b.terms[j].0.clone(), fix(&b.terms[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a.terms[i].1 + &fix(&b.terms[j].1);
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    MultiPoly { nvars: a.nvars, terms: out }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, false)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *map.entry(a.mul(b)).or_default() += &(x * y);
            }
        }
        MultiPoly { nvars: self.nvars, terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

struct DisplayPoly<'a> {
    p: &'a MultiPoly,
    names: &'a [String],
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        // Highest grevlex term first reads naturally.
        let mut terms: Vec<&(Monomial, Rational)> = self.p.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display_with(self.names))?;
            } else {
                write!(f, "{mag}*{}", m.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::default_names(self.nvars);
        fmt::Display::fmt(&DisplayPoly { p: self, names: &names }, f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
