//! Multivariate polynomials over `Q`, Gröbner bases and the quotient-ring
//! dimension computations built on them.

mod groebner;
mod ideal;
mod local;
mod monomial;
mod order;
mod poly;

pub use groebner::{buchberger, GroebnerBasis};
pub use ideal::{eliminate, quotient_dimension, quotient_dimension_truncated};
pub use local::{
    local_dimension, local_dimension_direct, local_multiplicity, LocalMultiplicity, DEFAULT_MAX_TRUNCATION,
};
pub use monomial::{monomials_below_degree, monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use poly::MultiPoly;
