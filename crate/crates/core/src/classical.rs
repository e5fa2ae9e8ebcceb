//! Generalized eigenspaces of a constant matrix `T` and the classical
//! identity `Σ_λ m[T, λ] = n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matpoly::MatrixPolynomial;
use crate::rational::Rational;
use crate::unipoly::{rational_roots, squarefree_factor};

pub use crate::linalg::nullspace_dim;

/// Data for one eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub eigenvalue: Rational,
    /// Least `ν` with `N[(λI - T)^ν] = N[(λI - T)^{ν+1}]`.
    pub nu: usize,
    /// `dim N[(λI - T)^μ]` for `μ = 1, ..., ν + 1`.
    pub kernel_dims: Vec<usize>,
    pub generalized_dim: usize,
    /// `ord_λ det(λI - T)`.
    pub char_poly_ord: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralIdentityReport {
    pub n: usize,
    pub eigenvalues: Vec<ClassicalReport>,
    pub multiplicity_sum: usize,
    pub generalized_dim_sum: usize,
    /// The generalized eigenspaces together span `Q^n` with no overlap.
    pub direct_sum: bool,
    pub holds: bool,
}

fn shifted(t: &Matrix, at: &Rational) -> Result<Matrix> {
    if !t.is_square() {
        return Err(Error::NonSquare { rows: t.rows(), cols: t.cols() });
    }
    Ok(Matrix::scalar(t.rows(), at).sub(t))
}

/// Kernel dimensions of `(λ0 I - T)^μ` until they stop growing, together
/// with the stabilization index.
fn kernel_chain(t: &Matrix, at: &Rational) -> Result<(usize, Vec<usize>)> {
    let a = shifted(t, at)?;
    let n = t.rows();
    let mut power = a.clone();
    let mut dims = vec![nullspace_dim(&power)?];
    if dims[0] == 0 {
        return Err(Error::NotEigenvalue(at.to_string()));
    }
    // ν ≤ n, so at most n + 1 powers are needed.
    for mu in 1..=n {
        power = &power * &a;
        let d = nullspace_dim(&power)?;
        dims.push(d);
        if d == dims[mu - 1] {
            return Ok((mu, dims));
        }
    }
    unreachable!("kernel chain of an n×n matrix stabilizes by the n-th power")
}

pub fn nu_index(t: &Matrix, at: &Rational) -> Result<usize> {
    Ok(kernel_chain(t, at)?.0)
}

/// `dim N[(λ0 I - T)^ν]`.
pub fn multiplicity_via_nullspace(t: &Matrix, at: &Rational) -> Result<usize> {
    let (nu, dims) = kernel_chain(t, at)?;
    Ok(dims[nu - 1])
}

pub fn classical_report(t: &Matrix, at: &Rational) -> Result<ClassicalReport> {
    let (nu, kernel_dims) = kernel_chain(t, at)?;
    let char_poly = MatrixPolynomial::characteristic(t)?.determinant();
    Ok(ClassicalReport {
        eigenvalue: at.clone(),
        nu,
        generalized_dim: kernel_dims[nu - 1],
        kernel_dims,
        char_poly_ord: char_poly.ord_at(at).finite().expect("char poly is monic"),
    })
}

/// Checks `Σ m[T, λ] = n`, generalized dimension = order of the
/// characteristic polynomial, and that the generalized eigenspaces form a
/// direct sum. Requires the characteristic polynomial to split over `Q`.
pub fn verify_spectral_identity(t: &Matrix) -> Result<SpectralIdentityReport> {
    let char_poly = MatrixPolynomial::characteristic(t)?.determinant();
    let roots = rational_roots(&char_poly)?;
    for (g, _) in squarefree_factor(&char_poly)?.factors {
        let split = roots.iter().filter(|(r, _)| g.eval(r).is_zero()).count();
        if split != g.degree().unwrap() {
            return Err(Error::NotSplit(g.to_string()));
        }
    }
    let n = t.rows();
    let mut eigenvalues = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (r, _) in &roots {
        let report = classical_report(t, r)?;
        let a = shifted(t, r)?.pow(report.nu as u32);
        basis.extend(a.nullspace_basis());
        eigenvalues.push(report);
    }
    let multiplicity_sum = eigenvalues.iter().map(|e| e.char_poly_ord).sum();
    let generalized_dim_sum: usize = eigenvalues.iter().map(|e| e.generalized_dim).sum();
    let direct_sum = basis.len() == generalized_dim_sum
        && (basis.is_empty() || Matrix::from_rows(basis).rank() == generalized_dim_sum)
        && generalized_dim_sum == n;
    let holds = multiplicity_sum == n
        && generalized_dim_sum == n
        && direct_sum
        && eigenvalues.iter().all(|e| e.generalized_dim == e.char_poly_ord);
    Ok(SpectralIdentityReport { n, eigenvalues, multiplicity_sum, generalized_dim_sum, direct_sum, holds })
}
