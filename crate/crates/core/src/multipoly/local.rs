//! Local length of `Q[x]/J` at a point, by m-adic truncation.
//!
//! For a point `p` isolated in `V(J)`, the sequence
//! `d_N = dim Q[x]/(J + m_p^N)` is nondecreasing and becomes constant as soon
//! as two consecutive values agree: `d_N = d_{N+1}` means
//! `m^N ⊆ J + m^{N+1}` in the local ring, hence `m^N ⊆ J` there by
//! Nakayama. The stable value is the length of the local ring.

use super::groebner::buchberger;
use super::ideal::quotient_dimension;
use super::monomial::{monomials_of_degree, Monomial};
use super::order::MonomialOrder;
use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unipoly::ExtNat;

pub const DEFAULT_MAX_TRUNCATION: usize = 64;

/// Outcome of [`local_multiplicity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMultiplicity {
    /// The length of the local ring.
    pub value: usize,
    /// The least `N` with `d_N = d_{N+1}`, or 1 when the point is off `V(J)`.
    pub stabilized_at: usize,
    /// `d_1, ..., d_{N+1}`.
    pub sequence: Vec<usize>,
}

/// Generators centred at the origin, with each variable that some generator
/// expresses as `c·x_v + h(other variables)` substituted away.
///
/// Substituting `x_v = -h/c` with `h(0) = 0` maps `m^N` onto the `N`-th
/// power of the maximal ideal of the smaller ring, so every `d_N` is
/// unchanged.
enum Centred {
    /// Some generator is a unit at the point.
    Unit,
    Ideal {
        nvars: usize,
        gens: Vec<MultiPoly>,
    },
}

fn centre(gens: &[MultiPoly], point: &[Rational]) -> Result<Centred> {
    let nvars = point.len();
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::AmbientMismatch(g.nvars(), nvars));
        }
        let t = g.translate(point)?;
        if !t.constant_term().is_zero() {
            return Ok(Centred::Unit);
        }
        if !t.is_zero() {
            out.push(t);
        }
    }
    Ok(Centred::Ideal { nvars, gens: out })
}

/// A variable `v` and generator index such that the generator is
/// `c·x_v + h` with `h` free of `x_v`.
fn find_solvable(gens: &[MultiPoly], nvars: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (gi, g) in gens.iter().enumerate() {
        for v in 0..nvars {
            let linear_only = g.terms().iter().all(|(m, _)| {
                let e = m.exponents()[v];
                e == 0 || (e == 1 && m.degree() == 1)
            });
            if linear_only && g.involves(v) && best.is_none_or(|(_, _, len)| g.len() < len) {
                best = Some((gi, v, g.len()));
            }
        }
    }
    best.map(|(gi, v, _)| (gi, v))
}

fn reduce_variables(mut nvars: usize, mut gens: Vec<MultiPoly>) -> (usize, Vec<MultiPoly>) {
    while let Some((gi, v)) = find_solvable(&gens, nvars) {
        let g = gens.swap_remove(gi);
        let xv = MultiPoly::var(nvars, v);
        let c = g.coeff(&Monomial::var(nvars, v));
        let h = &g - &xv.scale(&c);
        let value = h.scale(&-c.recip());
        let subs: Vec<MultiPoly> =
            (0..nvars).map(|i| if i == v { value.clone() } else { MultiPoly::var(nvars, i) }).collect();
        gens = gens
            .iter()
            .map(|f| f.substitute(&subs, nvars).expect("same ring").drop_var(v))
            .filter(|f| !f.is_zero())
            .collect();
        nvars -= 1;
    }
    (nvars, gens)
}

/// `dim Q[x]/(<gens> + m^N)` for generators at the origin, via a reduced
/// Gröbner basis of the ideal with all degree-`N` monomials adjoined.
fn truncated_dimension(nvars: usize, gens: &[MultiPoly], n: usize) -> usize {
    let mut all = gens.to_vec();
    all.extend(
        monomials_of_degree(nvars, n as u32).into_iter().map(|m| MultiPoly::from_terms(nvars, [(m, Rational::one())])),
    );
    if all.is_empty() {
        // The zero-variable ring Q modulo the zero ideal.
        return 1;
    }
    let gb = buchberger(&all, MonomialOrder::GrevLex).expect("generators share a ring");
    match quotient_dimension(&gb) {
        ExtNat::Finite(d) => d,
        ExtNat::Infinite => unreachable!("m^N is adjoined"),
    }
}

struct Prepared(Centred);

impl Prepared {
    fn new(gens: &[MultiPoly], point: &[Rational]) -> Result<Self> {
        Ok(Prepared(match centre(gens, point)? {
            Centred::Unit => Centred::Unit,
            Centred::Ideal { nvars, gens } => {
                let (nvars, gens) = reduce_variables(nvars, gens);
                Centred::Ideal { nvars, gens }
            }
        }))
    }

    fn dimension(&self, n: usize) -> usize {
        match &self.0 {
            Centred::Unit => 0,
            Centred::Ideal { nvars, gens } => truncated_dimension(*nvars, gens, n),
        }
    }
}

/// `d_N = dim Q[x]/(<gens> + m_p^N)` at `point`, computed along the same route
/// as [`local_multiplicity`].
pub fn local_dimension(gens: &[MultiPoly], point: &[Rational], n: usize) -> Result<usize> {
    assert!(n >= 1, "truncation order must be positive");
    Ok(Prepared::new(gens, point)?.dimension(n))
}

/// `d_N` without eliminating solvable variables: translate, adjoin every
/// degree-`N` monomial in the full ring and count standard monomials.
pub fn local_dimension_direct(gens: &[MultiPoly], point: &[Rational], n: usize) -> Result<usize> {
    assert!(n >= 1, "truncation order must be positive");
    Ok(match centre(gens, point)? {
        Centred::Unit => 0,
        Centred::Ideal { nvars, gens } => truncated_dimension(nvars, &gens, n),
    })
}

/// Length of the local ring of `Q[x]/<gens>` at `point`. Fails when `d_N`
/// is still growing at `N = max_truncation`.
pub fn local_multiplicity(gens: &[MultiPoly], point: &[Rational], max_truncation: usize) -> Result<LocalMultiplicity> {
    let prepared = Prepared::new(gens, point)?;
    let mut sequence = vec![prepared.dimension(1)];
    if sequence[0] == 0 {
        return Ok(LocalMultiplicity { value: 0, stabilized_at: 1, sequence });
    }
    for n in 2..=max_truncation.max(2) {
        let d = prepared.dimension(n);
        let prev = *sequence.last().unwrap();
        sequence.push(d);
        if d == prev {
            return Ok(LocalMultiplicity { value: d, stabilized_at: n - 1, sequence });
        }
    }
    Err(Error::NotIsolated { bound: max_truncation, last: *sequence.last().unwrap() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(n, i)).collect()
    }

    fn worked_example_ideal() -> Vec<MultiPoly> {
        let v = vars(4);
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        let one = MultiPoly::one(4);
        vec![&(x * t) - &(y * z), &(x - &(y * y)) + &one, y - z, t.clone()]
    }

    fn point(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn worked_example_length() {
        let r = local_multiplicity(&worked_example_ideal(), &point(&[-1, 0, 0, 0]), DEFAULT_MAX_TRUNCATION).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.sequence, vec![1, 2, 2]);
        assert_eq!(r.stabilized_at, 2);
    }

    #[test]
    fn single_variable_examples() {
        let x = MultiPoly::var(1, 0);
        assert_eq!(local_multiplicity(std::slice::from_ref(&x), &point(&[0]), 64).unwrap().value, 1);
        assert_eq!(local_multiplicity(&[x.pow(3)], &point(&[0]), 64).unwrap().value, 3);
        // off the variety
        assert_eq!(local_multiplicity(&[x.pow(3)], &point(&[1]), 64).unwrap().value, 0);
    }

    #[test]
    fn non_isolated_point_is_diagnosed() {
        let v = vars(2);
        let err = local_multiplicity(&v[..1], &point(&[0, 0]), 8).unwrap_err();
        assert_eq!(err, Error::NotIsolated { bound: 8, last: 8 });
    }

    #[test]
    fn variable_reduction_preserves_truncated_dimensions() {
        let gens = worked_example_ideal();
        let p = point(&[-1, 0, 0, 0]);
        for n in 1..=4 {
            assert_eq!(local_dimension(&gens, &p, n).unwrap(), local_dimension_direct(&gens, &p, n).unwrap());
        }
        // a node: xy + x^3 + y^3 together with a transversal line
        let v = vars(3);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let gens = vec![&(&(x * y) + &x.pow(3)) + &y.pow(3), &(z - x) - &(y * y)];
        let p = point(&[0, 0, 0]);
        for n in 1..=5 {
            assert_eq!(local_dimension(&gens, &p, n).unwrap(), local_dimension_direct(&gens, &p, n).unwrap());
        }
    }

    #[test]
    fn zero_ideal_in_no_variables() {
        let v = vars(1);
        // x = 0 leaves the zero ideal in Q
        let r = local_multiplicity(&[v[0].clone()], &point(&[0]), 64).unwrap();
        assert_eq!(r.sequence, vec![1, 1]);
    }
}
