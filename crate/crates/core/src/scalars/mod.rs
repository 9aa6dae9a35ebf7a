//! Exact scalars: rationals and Laurent polynomials in the parameter `q`.

mod constraints;
mod laurent;
pub(crate) mod upoly;

use thiserror::Error;

pub use constraints::{is_unit_under, QConstraintSet};
pub use laurent::LaurentScalar;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} in Q[q, q^-1]")]
    NotDivisible { dividend: String, divisor: String },
    #[error("{0} has no inverse in Q[q, q^-1]")]
    NotInvertible(String),
    #[error("constraint polynomial is zero")]
    ZeroConstraint,
}

/// Parses a decimal integer or `a/b` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse::<num_bigint::BigInt>().ok()?;
            let d = d.trim().parse::<num_bigint::BigInt>().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    }
}
