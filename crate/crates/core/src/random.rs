//! Seeded generators for random test instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::matpoly::MatrixPolynomial;
use crate::multipoly::{Monomial, MultiPoly};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> Rational {
        Rational::from(self.rng.gen_range(lo..=hi))
    }

    /// Numerator in `[-bound, bound]`, denominator in `1..=max_denom`.
    pub fn rational(&mut self, bound: i64, max_denom: i64) -> Rational {
        Rational::new(self.rng.gen_range(-bound..=bound), self.rng.gen_range(1..=max_denom))
    }

    /// A small rational from a short list, so eigenvalues repeat often.
    pub fn eigenvalue(&mut self) -> Rational {
        let pool = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2), (3, 1)];
        let &(p, q) = pool.choose(&mut self.rng).unwrap();
        Rational::new(p, q)
    }

    pub fn matrix(&mut self, n: usize, bound: i64, max_denom: i64) -> Matrix {
        Matrix::from_rows((0..n).map(|_| (0..n).map(|_| self.rational(bound, max_denom)).collect()).collect())
    }

    pub fn nonzero_matrix(&mut self, n: usize, bound: i64, max_denom: i64) -> Matrix {
        loop {
            let m = self.matrix(n, bound, max_denom);
            if !m.is_zero() {
                return m;
            }
        }
    }

    pub fn invertible_matrix(&mut self, n: usize, bound: i64) -> Matrix {
        loop {
            let m = self.matrix(n, bound, 1);
            if !m.det().unwrap().is_zero() {
                return m;
            }
        }
    }

    /// Upper-triangular matrix whose diagonal is drawn from [`Self::eigenvalue`].
    pub fn upper_triangular(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.eigenvalue();
            for j in i + 1..n {
                m[(i, j)] = if self.rng.gen_bool(0.5) { self.int(-2, 2) } else { Rational::zero() };
            }
        }
        m
    }

    /// `P·J·P⁻¹` with `J` upper triangular: a matrix with rational, often
    /// repeated, eigenvalues and nontrivial Jordan structure.
    pub fn split_matrix(&mut self, n: usize) -> Matrix {
        let j = self.upper_triangular(n);
        let p = self.invertible_matrix(n, 2);
        let inv = p.inverse().unwrap();
        &(&p * &j) * &inv
    }

    /// `λ·T1 + T0` with independent random coefficients and `T1 ≠ 0`.
    pub fn pencil(&mut self, n: usize) -> MatrixPolynomial {
        let t1 = self.nonzero_matrix(n, 3, 2);
        let t0 = self.matrix(n, 3, 2);
        MatrixPolynomial::pencil(t1, t0).unwrap()
    }

    fn uni(&mut self, max_deg: usize, bound: i64) -> UniPoly {
        UniPoly::new((0..=max_deg).map(|_| self.int(-bound, bound)).collect())
    }

    /// A diagonal entry with chosen rational roots: a constant, `c(λ-a)`,
    /// `c(λ-a)(λ-b)` or `c(λ-a)²`, capped at degree `max_deg`.
    fn diagonal_entry(&mut self, max_deg: usize) -> UniPoly {
        let c = loop {
            let c = self.int(-2, 2);
            if !c.is_zero() {
                break c;
            }
        };
        let shape = self.rng.gen_range(0..=max_deg.min(2) + usize::from(max_deg >= 2));
        let roots: Vec<Rational> = match shape {
            0 => vec![],
            1 => vec![self.eigenvalue()],
            2 => vec![self.eigenvalue(), self.eigenvalue()],
            _ => {
                let a = self.eigenvalue();
                vec![a.clone(), a]
            }
        };
        roots.iter().fold(UniPoly::constant(c), |acc, r| &acc * &UniPoly::linear_root(r))
    }

    /// `P·D(λ)·Q` with `P, Q` invertible constants and `D` upper triangular
    /// with entries of degree `≤ max_deg`: the determinant has known
    /// rational roots while the entries look generic.
    pub fn curve_with_rational_spectrum(&mut self, n: usize, max_deg: usize) -> MatrixPolynomial {
        loop {
            let mut d = vec![UniPoly::zero(); n * n];
            for i in 0..n {
                d[i * n + i] = self.diagonal_entry(max_deg);
                for j in i + 1..n {
                    if self.rng.gen_bool(0.6) {
                        d[i * n + j] = self.uni(max_deg, 2);
                    }
                }
            }
            let p = self.invertible_matrix(n, 2);
            let q = self.invertible_matrix(n, 2);
            let entries = conjugate_entries(&p, &d, &q, n);
            if let Ok(l) = MatrixPolynomial::from_entries(n, &entries) {
                if l.degree() >= 1 {
                    return l;
                }
            }
        }
    }

    /// Monic `λ²I + λA + B`.
    pub fn monic_quadratic(&mut self, n: usize) -> MatrixPolynomial {
        let a = self.matrix(n, 3, 1);
        let b = self.matrix(n, 3, 1);
        MatrixPolynomial::new(vec![b, a, Matrix::identity(n)]).unwrap()
    }

    /// Sparse polynomial with small integer coefficients, terms of degree
    /// `1..=max_deg` and, with probability `constant_prob`, a constant term.
    pub fn polynomial(&mut self, nvars: usize, max_deg: u32, max_terms: usize, constant_prob: f64) -> MultiPoly {
        loop {
            let count = self.rng.gen_range(1..=max_terms);
            let mut terms = Vec::with_capacity(count + 1);
            for _ in 0..count {
                let deg = self.rng.gen_range(1..=max_deg);
                let mut e = vec![0u32; nvars];
                for _ in 0..deg {
                    e[self.rng.gen_range(0..nvars)] += 1;
                }
                let c = loop {
                    let c = self.rng.gen_range(-3i64..=3);
                    if c != 0 {
                        break c;
                    }
                };
                terms.push((Monomial::from_exponents(e), Rational::from(c)));
            }
            if self.rng.gen_bool(constant_prob) {
                terms.push((Monomial::one(nvars), self.int(1, 3)));
            }
            let p = MultiPoly::from_terms(nvars, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A generator set with `1..=max_gens` members.
    pub fn ideal(&mut self, nvars: usize, max_deg: u32, max_gens: usize) -> Vec<MultiPoly> {
        let count = self.rng.gen_range(1..=max_gens);
        (0..count).map(|_| self.polynomial(nvars, max_deg, 3, 0.1)).collect()
    }
}

/// Row-major entries of `P·D·Q` for a matrix `D` of polynomials.
fn conjugate_entries(p: &Matrix, d: &[UniPoly], q: &Matrix, n: usize) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = UniPoly::zero();
            for k in 0..n {
                for l in 0..n {
                    let e = &d[k * n + l];
                    if e.is_zero() {
                        continue;
                    }
                    let c = &p[(i, k)] * &q[(l, j)];
                    acc = &acc + &e.scale(&c);
                }
            }
            out[i * n + j] = acc;
        }
    }
    out
}
