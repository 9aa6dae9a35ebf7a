use std::fmt;

use num_traits::Zero;

use super::upoly::UPoly;
use super::{LaurentScalar, Rational, ScalarError};

/// Parameter conditions of the form `c(q) != 0`.
///
/// `q != 0` always holds implicitly; only the explicitly declared
/// polynomials are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QConstraintSet {
    nonzero: Vec<LaurentScalar>,
}

impl QConstraintSet {
    /// The implicit constraint set `{q}`.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polys<I: IntoIterator<Item = LaurentScalar>>(iter: I) -> Result<Self, ScalarError> {
        let mut set = Self::new();
        for c in iter {
            set.push(c)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, c: LaurentScalar) -> Result<(), ScalarError> {
        if c.is_zero() {
            return Err(ScalarError::ZeroConstraint);
        }
        self.nonzero.push(c);
        Ok(())
    }

    /// The explicitly declared constraints, in declaration order.
    pub fn declared(&self) -> &[LaurentScalar] {
        &self.nonzero
    }

    /// Product of the `q`-free parts of all declared constraints.
    fn constraint_product(&self) -> UPoly {
        self.nonzero
            .iter()
            .map(|c| c.to_upoly().1)
            .fold(UPoly::one(), |acc, p| acc.mul(&p))
    }

    /// Splits `s = unit * rest`, where `unit` is the largest divisor of `s`
    /// that is nonvanishing under these constraints and `rest` is a
    /// polynomial in `q` with leading coefficient one and no root at zero.
    pub fn split_unit(&self, s: &LaurentScalar) -> (LaurentScalar, LaurentScalar) {
        if s.is_zero() {
            return (LaurentScalar::one(), LaurentScalar::zero());
        }
        let (shift, poly) = s.to_upoly();
        let lead = poly.lead().cloned().unwrap();
        let product = self.constraint_product();
        let mut rest = poly.monic();
        let mut unit_poly = UPoly::one();
        loop {
            let g = rest.gcd(&product);
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            rest = rest.div_rem(&g).0;
            unit_poly = unit_poly.mul(&g);
        }
        let unit = LaurentScalar::from_upoly(shift, &unit_poly.scale(&lead));
        (unit, LaurentScalar::from_upoly(0, &rest))
    }

    /// True iff `s` cannot vanish for any admissible `q`: every irreducible
    /// factor of `s` is `q` or divides a declared constraint.
    pub fn is_unit_under(&self, s: &LaurentScalar) -> bool {
        !s.is_zero() && self.split_unit(s).1.is_one()
    }

    /// Whether a concrete value `q0` satisfies all constraints.
    pub fn admits(&self, q0: &Rational) -> bool {
        !q0.is_zero()
            && self
                .nonzero
                .iter()
                .all(|c| c.eval(q0).map(|v| !v.is_zero()).unwrap_or(false))
    }
}

/// Free-function form of [`QConstraintSet::is_unit_under`].
pub fn is_unit_under(s: &LaurentScalar, c: &QConstraintSet) -> bool {
    c.is_unit_under(s)
}

impl fmt::Display for QConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q != 0")?;
        for c in &self.nonzero {
            write!(f, ", {c} != 0")?;
        }
        Ok(())
    }
}
