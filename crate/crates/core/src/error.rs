use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials live in different rings ({0} vs {1} variables)")]
    AmbientMismatch(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not an eigenvalue")]
    NotEigenvalue(String),
    #[error("characteristic polynomial does not split over Q (irreducible factor {0})")]
    NotSplit(String),
    #[error("matrix polynomial is identically singular: its spectrum is the whole field")]
    IdenticallySingular,
    #[error("curve is constant: every difference L_i(λ) - L_i(λ0) vanishes")]
    ConstantCurve,
    #[error("top coefficient matrix is zero")]
    ZeroTopCoefficient,
    #[error("matrix polynomial needs at least one coefficient matrix")]
    NoCoefficients,
    #[error("point is not an isolated solution: d_N still growing at N = {bound} (d_N = {last})")]
    NotIsolated { bound: usize, last: usize },
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}
