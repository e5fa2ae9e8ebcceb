//! The curve in projective matrix space: the contribution at infinity and
//! the Bézout degree count `Σ m[L, λ] + m_∞ = d·n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matpoly::{MatrixPolynomial, SpectrumReport};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// `μ^{dn} det L(1/μ)`: coefficient reversal of `det L(λ)` padded to degree
/// `d·n`.
pub fn reversed_det(l: &MatrixPolynomial) -> Result<UniPoly> {
    let det = l.determinant();
    let top = det.degree().ok_or(Error::IdenticallySingular)?;
    let dn = l.degree() * l.n();
    debug_assert!(top <= dn);
    let mut coeffs = vec![Rational::zero(); dn + 1];
    for (j, c) in det.coeffs().iter().enumerate() {
        coeffs[dn - j] = c.clone();
    }
    Ok(UniPoly::new(coeffs))
}

/// Order of [`reversed_det`] at `μ = 0`, i.e. `d·n - deg det`.
pub fn infinity_multiplicity(l: &MatrixPolynomial) -> Result<usize> {
    let rev = reversed_det(l)?;
    Ok(rev.ord_at(&Rational::zero()).finite().expect("nonzero"))
}

/// Whether `det L̄([λ:0]) = 0`, i.e. the top-degree coefficient matrix is
/// singular.
pub fn meets_infinity(l: &MatrixPolynomial) -> bool {
    l.leading_matrix().det().expect("square").is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectiveSpectrum {
    pub finite: SpectrumReport,
    pub meets_infinity: bool,
    /// `None` when identically singular.
    pub infinity_multiplicity: Option<usize>,
}

pub fn projective_spectrum(l: &MatrixPolynomial) -> ProjectiveSpectrum {
    let finite = l.spectrum();
    let infinity_multiplicity = if finite.identically_singular { None } else { infinity_multiplicity(l).ok() };
    let meets_infinity = meets_infinity(l);
    debug_assert!(infinity_multiplicity.is_none_or(|m| (m >= 1) == meets_infinity));
    ProjectiveSpectrum { finite, meets_infinity, infinity_multiplicity }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BezoutReport {
    pub n: usize,
    pub d: usize,
    /// `deg det L`.
    pub finite_sum: usize,
    pub infinity_multiplicity: usize,
    pub meets_infinity: bool,
    pub total: usize,
    /// `total = d·n`.
    pub identity_holds: bool,
    /// Whether the affine sum alone equals `d·n`, i.e. nothing at infinity.
    pub affine_identity_holds: bool,
}

pub fn bezout_check(l: &MatrixPolynomial) -> Result<BezoutReport> {
    let det = l.determinant();
    let finite_sum = det.degree().ok_or(Error::IdenticallySingular)?;
    let infinity_multiplicity = infinity_multiplicity(l)?;
    let (n, d) = (l.n(), l.degree());
    let total = finite_sum + infinity_multiplicity;
    Ok(BezoutReport {
        n,
        d,
        finite_sum,
        infinity_multiplicity,
        meets_infinity: meets_infinity(l),
        total,
        identity_holds: total == d * n,
        affine_identity_holds: finite_sum == d * n,
    })
}
