//! Sparse multivariate polynomials.

mod monomial;
mod multipoly;
mod param;

pub use monomial::{binomial, count_monomials, monomials_of_degree, Monomial, MonomialBasis};
pub use multipoly::{poly_from, MultiPoly};
pub use param::ParamPoly;

pub(crate) use multipoly::falling;

use crate::scalar::{QScalar, Rational};

/// Polynomials with rational coefficients.
pub type QPoly = MultiPoly<Rational>;
/// Polynomials with coefficients in `Q(q)`.
pub type QqPoly = MultiPoly<QScalar>;
