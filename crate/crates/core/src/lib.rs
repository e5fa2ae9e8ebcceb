//! Exact computation of algebraic multiplicities of matrix polynomials and of
//! the matching local intersection indices with the singular-matrix
//! hypersurface.
//!
//! Everything is computed over the rationals with arbitrary precision. The
//! two sides of each multiplicity identity are computed along independent
//! routes:
//!
//! * the determinant route ([`matpoly`]): fraction-free determinant over
//!   `Q[λ]` followed by order of vanishing;
//! * the ideal route ([`geometry`]): implicitization of the curve by
//!   Gröbner-basis elimination ([`multipoly`]) followed by an m-adic length
//!   computation at the intersection point.
//!
//! [`projective`] accounts for the contribution at infinity and checks the
//! Bézout degree identity, and [`classical`] covers the constant-matrix case
//! through generalized eigenspaces.

pub mod classical;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod matpoly;
pub mod multipoly;
pub mod projective;
pub mod random;
pub mod rational;
pub mod unipoly;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use matpoly::{MatrixPolynomial, SpectrumReport};
pub use multipoly::{GroebnerBasis, Monomial, MonomialOrder, MultiPoly};
pub use projective::BezoutReport;
pub use rational::Rational;
pub use unipoly::{ExtNat, UniPoly};
