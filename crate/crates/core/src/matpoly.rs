//! Matrix polynomials `L(λ) = Σ T_i λ^i` with square rational coefficients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::unipoly::{rational_roots, squarefree_factor, ExtNat, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPolynomial {
    n: usize,
    coeffs: Vec<Matrix>,
}

impl MatrixPolynomial {
    /// `coeffs[i]` multiplies `λ^i`. The last matrix must be nonzero.
    pub fn new(coeffs: Vec<Matrix>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::NoCoefficients)?;
        if !first.is_square() {
            return Err(Error::NonSquare { rows: first.rows(), cols: first.cols() });
        }
        let n = first.rows();
        for c in &coeffs {
            if !c.is_square() {
                return Err(Error::NonSquare { rows: c.rows(), cols: c.cols() });
            }
            if c.rows() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.rows() });
            }
        }
        if coeffs.last().unwrap().is_zero() {
            return Err(Error::ZeroTopCoefficient);
        }
        let l = MatrixPolynomial { n, coeffs };
        debug_assert_eq!(l.degree(), l.coeffs.len() - 1);
        Ok(l)
    }

    /// From `n²` row-major entry polynomials, not all zero.
    pub fn from_entries(n: usize, entries: &[UniPoly]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        let degree = entries.iter().filter_map(UniPoly::degree).max().ok_or(Error::ZeroTopCoefficient)?;
        let coeffs = (0..=degree)
            .map(|k| {
                let mut m = Matrix::zeros(n, n);
                for (idx, e) in entries.iter().enumerate() {
                    m[(idx / n, idx % n)] = e.coeff(k);
                }
                m
            })
            .collect();
        Self::new(coeffs)
    }

    /// `λ·T1 + T0`.
    pub fn pencil(t1: Matrix, t0: Matrix) -> Result<Self> {
        Self::new(vec![t0, t1])
    }

    pub fn constant(t: Matrix) -> Result<Self> {
        Self::new(vec![t])
    }

    /// The characteristic pencil `λI - T`.
    pub fn characteristic(t: &Matrix) -> Result<Self> {
        if !t.is_square() {
            return Err(Error::NonSquare { rows: t.rows(), cols: t.cols() });
        }
        let n = t.rows();
        Self::new(vec![t.scale(&-Rational::one()), Matrix::identity(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[Matrix] {
        &self.coeffs
    }

    pub fn leading_matrix(&self) -> &Matrix {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        *self.leading_matrix() == Matrix::identity(self.n)
    }

    pub fn entry(&self, i: usize, j: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c[(i, j)].clone()).collect())
    }

    /// Entry polynomials in row-major order: entry `(i, j)` is at `i·n + j`.
    pub fn entries(&self) -> Vec<UniPoly> {
        (0..self.n * self.n).map(|k| self.entry(k / self.n, k % self.n)).collect()
    }

    /// Largest entry degree. Equals the index of the top coefficient.
    pub fn degree(&self) -> usize {
        self.entries().iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    pub fn evaluate(&self, at: &Rational) -> Matrix {
        let mut acc = Matrix::zeros(self.n, self.n);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(at).add(c);
        }
        acc
    }

    /// `det L(λ)` by Bareiss fraction-free elimination over `Q[λ]`.
    pub fn determinant(&self) -> UniPoly {
        let n = self.n;
        let mut m: Vec<Vec<UniPoly>> = (0..n).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect();
        let mut prev = UniPoly::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        negate = !negate;
                    }
                    None => return UniPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev);
                }
                m[i][k] = UniPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -&det
        } else {
            det
        }
    }

    pub fn is_identically_singular(&self) -> bool {
        self.determinant().is_zero()
    }

    /// `ord_{λ=λ0} det L(λ)`; infinite when `L` is identically singular.
    pub fn algebraic_multiplicity(&self, at: &Rational) -> ExtNat {
        self.determinant().ord_at(at)
    }

    pub fn spectrum(&self) -> SpectrumReport {
        SpectrumReport::from_determinant(self.determinant())
    }
}

/// The finite spectrum: rational eigenvalues explicitly, everything else as
/// square-free factors without rational roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub det: UniPoly,
    pub identically_singular: bool,
    pub rational_eigenvalues: Vec<(Rational, usize)>,
    /// Linear factors `λ - r` for rational roots, and square-free cofactors
    /// with no rational roots, each with its multiplicity.
    pub factor_table: Vec<(UniPoly, usize)>,
    /// `deg det`: the multiplicity sum over all complex roots.
    pub total_finite_multiplicity: usize,
}

impl SpectrumReport {
    pub fn from_determinant(det: UniPoly) -> Self {
        if det.is_zero() {
            return SpectrumReport {
                det,
                identically_singular: true,
                rational_eigenvalues: Vec::new(),
                factor_table: Vec::new(),
                total_finite_multiplicity: 0,
            };
        }
        let rational_eigenvalues = rational_roots(&det).expect("nonzero");
        let mut factor_table = Vec::new();
        for (g, e) in squarefree_factor(&det).expect("nonzero").factors {
            let mut cofactor = g;
            let mut linear: Vec<UniPoly> = rational_eigenvalues
                .iter()
                .filter(|(r, _)| cofactor.eval(r).is_zero())
                .map(|(r, _)| UniPoly::linear_root(r))
                .collect();
            for l in &linear {
                cofactor = cofactor.div_exact(l);
            }
            if cofactor.degree().unwrap_or(0) > 0 {
                linear.push(cofactor);
            }
            factor_table.extend(linear.into_iter().map(|f| (f, e)));
        }
        let total_finite_multiplicity = det.degree().unwrap();
        debug_assert_eq!(
            total_finite_multiplicity,
            factor_table.iter().map(|(f, e)| e * f.degree().unwrap()).sum::<usize>()
        );
        SpectrumReport {
            det,
            identically_singular: false,
            rational_eigenvalues,
            factor_table,
            total_finite_multiplicity,
        }
    }

    /// Multiplicity of the roots that are not rational, counted over `C`.
    pub fn irrational_multiplicity(&self) -> usize {
        self.total_finite_multiplicity - self.rational_eigenvalues.iter().map(|(_, e)| e).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    /// `[[λ² - 1, λ], [λ, 0]]` split into its coefficient matrices.
    pub(crate) fn worked_example() -> MatrixPolynomial {
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

    #[test]
    fn construction_checks() {
        assert_eq!(MatrixPolynomial::new(vec![]), Err(Error::NoCoefficients));
        assert_eq!(
            MatrixPolynomial::new(vec![Matrix::identity(2), Matrix::zeros(2, 2)]),
            Err(Error::ZeroTopCoefficient)
        );
        assert!(matches!(
            MatrixPolynomial::new(vec![Matrix::identity(2), Matrix::identity(3)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(MatrixPolynomial::new(vec![Matrix::zeros(2, 3)]), Err(Error::NonSquare { .. })));
        assert_eq!(MatrixPolynomial::from_entries(1, &[UniPoly::zero()]), Err(Error::ZeroTopCoefficient));
    }

    #[test]
    fn evaluate_examples() {
        let l = worked_example();
        assert_eq!(l.evaluate(&q(0)), Matrix::from_ints(&[&[-1, 0], &[0, 0]]));
        assert_eq!(l.evaluate(&q(1)), Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(l.evaluate(&q(0)), l.coefficients()[0]);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(worked_example().determinant(), UniPoly::from_ints(&[0, 0, -1]));
        assert_eq!(diag_square().determinant(), UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(MatrixPolynomial::constant(Matrix::identity(3)).unwrap().determinant(), UniPoly::one());
        // needs a row swap: [[0, 1], [1, λ]] has det -1
        let swap =
            MatrixPolynomial::from_entries(2, &[UniPoly::zero(), UniPoly::one(), UniPoly::one(), UniPoly::var()])
                .unwrap();
        assert_eq!(swap.determinant(), UniPoly::from_ints(&[-1]));
    }

    #[test]
    fn spectrum_examples() {
        let s = worked_example().spectrum();
        assert_eq!(s.rational_eigenvalues, vec![(q(0), 2)]);
        assert_eq!(s.total_finite_multiplicity, 2);

        let s = MatrixPolynomial::pencil(Matrix::identity(3), Matrix::zeros(3, 3)).unwrap().spectrum();
        assert_eq!(s.rational_eigenvalues, vec![(q(0), 3)]);
        assert_eq!(s.total_finite_multiplicity, 3);

        // [[λ, -1], [1, λ]]
        let rot = MatrixPolynomial::pencil(Matrix::identity(2), Matrix::from_ints(&[&[0, -1], &[1, 0]])).unwrap();
        let s = rot.spectrum();
        assert!(s.rational_eigenvalues.is_empty());
        assert_eq!(s.factor_table, vec![(UniPoly::from_ints(&[1, 0, 1]), 1)]);
        assert_eq!(s.total_finite_multiplicity, 2);
        assert_eq!(s.irrational_multiplicity(), 2);

        let singular = MatrixPolynomial::pencil(Matrix::from_ints(&[&[1, 0], &[0, 0]]), Matrix::zeros(2, 2)).unwrap();
        assert!(singular.spectrum().identically_singular);
        assert_eq!(singular.algebraic_multiplicity(&q(3)), ExtNat::Infinite);
    }

    #[test]
    fn multiplicity_and_degree() {
        let l = worked_example();
        assert_eq!(l.algebraic_multiplicity(&q(0)), ExtNat::Finite(2));
        assert_eq!(l.algebraic_multiplicity(&q(1)), ExtNat::Finite(0));
        assert_eq!(diag_square().algebraic_multiplicity(&q(0)), ExtNat::Finite(2));
        assert_eq!(l.degree(), 2);
        let line = MatrixPolynomial::pencil(Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::identity(2)).unwrap();
        assert_eq!(line.degree(), 1);
        assert_eq!(MatrixPolynomial::constant(Matrix::identity(2)).unwrap().degree(), 0);
    }
}
