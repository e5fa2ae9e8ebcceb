//! Ideals attached to a matrix polynomial and the local intersection
//! indices with the singular-matrix hypersurface `det = 0`.
//!
//! Matrix space has coordinates `x_1, ..., x_{n²}`, flattened row-major:
//! entry `(i, j)` (0-based) is variable `i·n + j`. The resolution ring puts
//! the parameter λ first, before the `n²` matrix coordinates.

use crate::error::{Error, Result};
use crate::matpoly::MatrixPolynomial;
use crate::multipoly::{
    buchberger, eliminate, local_multiplicity, LocalMultiplicity, Monomial, MonomialOrder, MultiPoly,
    DEFAULT_MAX_TRUNCATION,
};
use crate::rational::Rational;
use crate::unipoly::{poly_gcd, UniPoly};

/// Variable names `x11, x12, ...` for matrix space.
pub fn matrix_variable_names(n: usize) -> Vec<String> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}"))).collect()
}

/// `λ` followed by [`matrix_variable_names`].
pub fn resolution_variable_names(n: usize) -> Vec<String> {
    std::iter::once("λ".to_string()).chain(matrix_variable_names(n)).collect()
}

/// Determinant of the generic `n×n` matrix of variables, by the Leibniz
/// expansion.
pub fn det_generator(n: usize) -> MultiPoly {
    assert!(n >= 1, "matrix size must be positive");
    let nvars = n * n;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut terms = Vec::new();
    // Heap's algorithm; each step is one transposition, so the sign flips.
    let mut c = vec![0; n];
    let mut sign = 1i64;
    let mut push = |perm: &[usize], sign: i64| {
        let mut e = vec![0; nvars];
        for (i, &j) in perm.iter().enumerate() {
            e[i * n + j] = 1;
        }
        terms.push((Monomial::from_exponents(e), Rational::from(sign)));
    };
    push(&perm, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            push(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

/// Generators of `ker(x_i ↦ L_i(λ))`, the ideal of the closure of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveIdeal {
    pub generators: Vec<MultiPoly>,
    pub admissible: bool,
}

/// `x_i - L_i(λ)` in `Q[λ, x_1, ..., x_{n²}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionIdeal {
    pub n: usize,
    pub generators: Vec<MultiPoly>,
}

pub fn resolution_ideal(l: &MatrixPolynomial) -> ResolutionIdeal {
    let n = l.n();
    let nvars = n * n + 1;
    let generators = l
        .entries()
        .iter()
        .enumerate()
        .map(|(k, e)| &MultiPoly::var(nvars, k + 1) - &MultiPoly::from_unipoly(nvars, 0, e))
        .collect();
    ResolutionIdeal { n, generators }
}

/// Whether `Q[L_1, ..., L_{n²}] = Q[λ]`: λ reduces to a polynomial in the
/// `x_i` alone modulo the resolution ideal under a λ-elimination order.
pub fn is_admissible(l: &MatrixPolynomial) -> bool {
    let res = resolution_ideal(l);
    let gb = buchberger(&res.generators, MonomialOrder::BlockElim(1)).expect("one ring");
    let lambda = MultiPoly::var(res.generators[0].nvars(), 0);
    !gb.normal_form(&lambda).expect("one ring").involves(0)
}

pub fn curve_ideal(l: &MatrixPolynomial) -> CurveIdeal {
    let res = resolution_ideal(l);
    let generators = eliminate(&res.generators, 1).expect("one ring");
    CurveIdeal { generators, admissible: is_admissible(l) }
}

/// Monic `gcd_i (L_i(λ) - L_i(λ0))`.
pub fn gcd_witness(l: &MatrixPolynomial, at: &Rational) -> Result<UniPoly> {
    let diffs: Vec<UniPoly> =
        l.entries().iter().map(|e| e - &UniPoly::constant(e.eval(at))).filter(|d| !d.is_zero()).collect();
    let (first, rest) = diffs.split_first().ok_or(Error::ConstantCurve)?;
    rest.iter().try_fold(first.monic(), |acc, d| poly_gcd(&acc, d))
}

fn ensure_regular(l: &MatrixPolynomial) -> Result<()> {
    if l.is_identically_singular() {
        Err(Error::IdenticallySingular)
    } else {
        Ok(())
    }
}

/// Local index of `det = 0` and the curve closure at `L(λ0)`, from the
/// eliminated curve ideal. Zero when `λ0` is not an eigenvalue.
pub fn intersection_index_affine_local(
    l: &MatrixPolynomial,
    at: &Rational,
    max_truncation: usize,
) -> Result<LocalMultiplicity> {
    ensure_regular(l)?;
    let mut gens = vec![det_generator(l.n())];
    gens.extend(curve_ideal(l).generators);
    let point = l.evaluate(at).entries().to_vec();
    local_multiplicity(&gens, &point, max_truncation)
}

pub fn intersection_index_affine(l: &MatrixPolynomial, at: &Rational) -> Result<usize> {
    Ok(intersection_index_affine_local(l, at, DEFAULT_MAX_TRUNCATION)?.value)
}

/// Local index of `π⁻¹(det = 0)` and the resolution at `(λ0, L(λ0))`.
pub fn intersection_index_resolution_local(
    l: &MatrixPolynomial,
    at: &Rational,
    max_truncation: usize,
) -> Result<LocalMultiplicity> {
    ensure_regular(l)?;
    let mut gens = vec![det_generator(l.n()).lift(1)];
    gens.extend(resolution_ideal(l).generators);
    let mut point = vec![at.clone()];
    point.extend(l.evaluate(at).entries().iter().cloned());
    local_multiplicity(&gens, &point, max_truncation)
}

pub fn intersection_index_resolution(l: &MatrixPolynomial, at: &Rational) -> Result<usize> {
    Ok(intersection_index_resolution_local(l, at, DEFAULT_MAX_TRUNCATION)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::multipoly::GroebnerBasis;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn worked_example() -> MatrixPolynomial {
        MatrixPolynomial::new(vec![
            Matrix::from_ints(&[&[-1, 0], &[0, 0]]),
            Matrix::from_ints(&[&[0, 1], &[1, 0]]),
            Matrix::from_ints(&[&[1, 0], &[0, 0]]),
        ])
        .unwrap()
    }

    fn diag_square() -> MatrixPolynomial {
        MatrixPolynomial::from_entries(
            2,
            &[UniPoly::from_ints(&[0, 0, 1]), UniPoly::zero(), UniPoly::zero(), UniPoly::one()],
        )
        .unwrap()
    }

    fn diag_pencil() -> MatrixPolynomial {
        MatrixPolynomial::characteristic(&Matrix::diagonal(&[q(1), q(2)])).unwrap()
    }

    fn grevlex(gens: &[MultiPoly]) -> GroebnerBasis {
        buchberger(gens, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn det_generator_examples() {
        let x = |i| MultiPoly::var(4, i);
        assert_eq!(det_generator(2), &(&x(0) * &x(3)) - &(&x(1) * &x(2)));
        assert_eq!(det_generator(1), MultiPoly::var(1, 0));
        let d3 = det_generator(3);
        assert_eq!(d3.len(), 6);
        assert_eq!(det_generator(4).len(), 24);
        let m = Matrix::from_ints(&[&[2, -1, 3], &[0, 5, 1], &[7, 2, -4]]);
        assert_eq!(d3.eval(m.entries()).unwrap(), m.det().unwrap());
    }

    #[test]
    fn curve_ideal_examples() {
        let names = matrix_variable_names(2);
        assert_eq!(names, ["x11", "x12", "x21", "x22"]);
        let x = |i| MultiPoly::var(4, i);
        let one = MultiPoly::one(4);

        let c = curve_ideal(&worked_example());
        assert!(c.admissible);
        let expected = grevlex(&[&(&x(0) - &(&x(1) * &x(1))) + &one, &x(1) - &x(2), x(3)]);
        assert_eq!(grevlex(&c.generators), expected);

        let line = MatrixPolynomial::pencil(Matrix::identity(1), Matrix::zeros(1, 1)).unwrap();
        assert!(curve_ideal(&line).generators.is_empty());

        let c = curve_ideal(&diag_square());
        assert!(!c.admissible);
        assert_eq!(grevlex(&c.generators), grevlex(&[x(1), x(2), &x(3) - &one]));
    }

    #[test]
    fn curve_generators_pull_back_to_zero() {
        for l in [worked_example(), diag_square(), diag_pencil()] {
            let subs: Vec<MultiPoly> = l.entries().iter().map(|e| MultiPoly::from_unipoly(1, 0, e)).collect();
            for g in curve_ideal(&l).generators {
                assert!(g.substitute(&subs, 1).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&worked_example()));
        assert!(!is_admissible(&diag_square()));
        let t1 = Matrix::from_ints(&[&[0, 0], &[3, 0]]);
        let t0 = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(is_admissible(&MatrixPolynomial::pencil(t1, t0).unwrap()));
        assert!(!is_admissible(&MatrixPolynomial::constant(Matrix::identity(2)).unwrap()));
    }

    #[test]
    fn gcd_witness_examples() {
        assert_eq!(gcd_witness(&worked_example(), &q(0)).unwrap(), UniPoly::var());
        assert_eq!(gcd_witness(&diag_square(), &q(0)).unwrap(), UniPoly::from_ints(&[0, 0, 1]));
        let scalar = MatrixPolynomial::pencil(Matrix::identity(2), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(gcd_witness(&scalar, &q(5)).unwrap(), UniPoly::from_ints(&[-5, 1]));
        let constant = MatrixPolynomial::constant(Matrix::identity(2)).unwrap();
        assert_eq!(gcd_witness(&constant, &q(0)), Err(Error::ConstantCurve));
    }

    #[test]
    fn resolution_ideal_examples() {
        let r = resolution_ideal(&worked_example());
        let v = |i| MultiPoly::var(5, i);
        let one = MultiPoly::one(5);
        assert_eq!(r.generators.len(), 4);
        assert_eq!(r.generators[0], &(&v(1) - &(&v(0) * &v(0))) + &one);
        assert_eq!(r.generators[1], &v(2) - &v(0));
        assert_eq!(r.generators[2], &v(3) - &v(0));
        assert_eq!(r.generators[3], v(4));

        let t = Matrix::from_ints(&[&[2, 0], &[1, 3]]);
        let r = resolution_ideal(&MatrixPolynomial::constant(t).unwrap());
        assert_eq!(r.generators[0], &v(1) - &MultiPoly::constant(5, q(2)));
        assert_eq!(r.generators[2], &v(3) - &one);

        let r = resolution_ideal(&diag_square());
        assert_eq!(r.generators[0], &v(1) - &(&v(0) * &v(0)));
        assert_eq!(r.generators[3], &v(4) - &one);
    }

    #[test]
    fn affine_index_examples() {
        assert_eq!(intersection_index_affine(&worked_example(), &q(0)).unwrap(), 2);
        assert_eq!(intersection_index_affine(&diag_square(), &q(0)).unwrap(), 1);
        assert_eq!(intersection_index_affine(&diag_pencil(), &q(1)).unwrap(), 1);
        assert_eq!(intersection_index_affine(&diag_pencil(), &q(3)).unwrap(), 0);
        let singular = MatrixPolynomial::pencil(Matrix::from_ints(&[&[1, 0], &[0, 0]]), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(intersection_index_affine(&singular, &q(0)), Err(Error::IdenticallySingular));
    }

    #[test]
    fn resolution_index_examples() {
        assert_eq!(intersection_index_resolution(&worked_example(), &q(0)).unwrap(), 2);
        assert_eq!(intersection_index_resolution(&diag_square(), &q(0)).unwrap(), 2);
        assert_eq!(intersection_index_resolution(&diag_pencil(), &q(2)).unwrap(), 1);
    }
}
