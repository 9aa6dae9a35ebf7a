//! Sparse multivariate polynomials over `Q[q, q^-1]` and the restricted
//! factorization toolkit the point-scheme pipeline needs.

mod monomial;
mod poly;
mod quadratic;

use thiserror::Error;

use crate::scalars::ScalarError;

pub use monomial::AlphaMonomial;
pub use poly::MultiPoly;
pub(crate) use poly::{display_sign, render_coeff_times};
pub use quadratic::{split_quadratic_form, FactoredPoly, QuadraticForm, QuadraticSplit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder contains {remainder}")]
    NotDivisible { remainder: String },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a homogeneous quadratic form")]
    NotQuadraticForm(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Componentwise-minimum monomial dividing every term.
pub fn monomial_content(p: &MultiPoly) -> Result<AlphaMonomial, PolyError> {
    p.monomial_content()
}

/// Deletes every term containing `a_{var+1}`.
pub fn substitute_zero(p: &MultiPoly, var: usize) -> MultiPoly {
    p.substitute_zero(var)
}
