use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;
use super::{Rational, ScalarError};

/// An element of `Q[q, q^-1]`.
///
/// Stored as a map from exponent to nonzero rational coefficient, so the
/// empty map is zero and the representation is canonical. Exponents are
/// machine integers; arithmetic that overflows them panics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c * q^exp`.
    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentScalar { terms }
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs, combining
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(iter: I) -> Self {
        let mut out = LaurentScalar::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the lowest power of `q`.
    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// The constant value, if this scalar does not involve `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// True for `c * q^k` with `c != 0`: the units of `Q[q, q^-1]`.
    pub fn is_ring_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (checked_exp(e.checked_add(k)), c.clone()))
                .collect(),
        }
    }

    /// Integer power; negative exponents are only defined for ring units.
    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        if k < 0 {
            if !self.is_ring_unit() {
                return Err(ScalarError::NotInvertible(self.to_string()));
            }
            let (e, c) = self.terms.iter().next().unwrap();
            let ex = checked_exp(e.checked_mul(k));
            let mag = c.recip().pow(-k);
            return Ok(Self::monomial(mag, ex));
        }
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        Ok(out)
    }

    /// Inverse in `Q[q, q^-1]`, defined only for units `c * q^k`.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        self.pow(-1)
    }

    /// Evaluates at `q = q0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if q0.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(ScalarError::DivisionByZero);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * q0.pow(*e);
        }
        Ok(acc)
    }

    /// Splits off the lowest power of `q`: `self = q^shift * poly(q)` with
    /// `poly(0) != 0`.
    pub(crate) fn to_upoly(&self) -> (i32, UPoly) {
        let Some(lo) = self.min_exp() else {
            return (0, UPoly(Vec::new()));
        };
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi as i64 - lo as i64) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(*e as i64 - lo as i64) as usize] = c.clone();
        }
        (lo, UPoly::new(coeffs))
    }

    pub(crate) fn from_upoly(shift: i32, p: &UPoly) -> Self {
        let terms =
            p.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    (
                        checked_exp(i32::try_from(i).ok().and_then(|i| i.checked_add(shift))),
                        c.clone(),
                    )
                })
                .collect();
        LaurentScalar { terms }
    }

    /// Exact quotient in `Q[q, q^-1]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, pa) = self.to_upoly();
        let (sb, pb) = divisor.to_upoly();
        let (quot, rem) = pa.div_rem(&pb);
        if !rem.is_zero() {
            return Err(ScalarError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Self::from_upoly(checked_exp(sa.checked_sub(sb)), &quot))
    }

    /// Greatest common divisor, normalized to a polynomial in `q` with
    /// nonzero constant term and leading coefficient one. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, a) = self.to_upoly();
        let (_, b) = other.to_upoly();
        Self::from_upoly(0, &a.gcd(&b))
    }

    /// Square root in `Q[q, q^-1]` when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let (shift, p) = self.to_upoly();
        if shift % 2 != 0 {
            return None;
        }
        p.sqrt().map(|r| Self::from_upoly(shift / 2, &r))
    }

    /// Sign normalization: the coefficient of the lowest power of `q` is
    /// made positive. Returns `(sign, normalized)` with `sign * normalized
    /// == self`.
    pub fn sign_normalized(&self) -> (i32, Self) {
        match self.lowest_coeff() {
            Some(c) if c.is_negative() => (-1, -self),
            _ => (1, self.clone()),
        }
    }

    /// The unit `c * q^k` that makes the lowest term of `self` equal to `1`.
    pub fn lowest_term_unit(&self) -> Option<Self> {
        self.terms.iter().next().map(|(e, c)| Self::monomial(c.clone(), *e))
    }

    /// Degree span `max_exp - min_exp` (zero for units).
    pub fn span(&self) -> u32 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => (b as i64 - a as i64) as u32,
            _ => 0,
        }
    }
}

fn checked_exp(e: Option<i32>) -> i32 {
    e.expect("exponent of q overflowed the machine integer range")
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(checked_exp(ea.checked_add(*eb)), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_qpow(e: i32) -> String {
    match e {
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

impl fmt::Display for LaurentScalar {
    /// Highest power first, e.g. `q^2 - 1`, `q - q^-1`, `3/2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", fmt_qpow(*e))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), fmt_qpow(*e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentScalar {
        LaurentScalar::q()
    }
    fn c(x: i64) -> LaurentScalar {
        LaurentScalar::from_int(x)
    }

    #[test]
    fn unit_factors_multiply_out() {
        let prod = (&q() - &c(1)) * (&q() + &c(1));
        assert_eq!(prod.to_string(), "q^2 - 1");
    }

    #[test]
    fn q_times_inverse_is_one() {
        let inv = q().inverse().unwrap();
        assert_eq!(inv.to_string(), "q^-1");
        assert!((&q() * &inv).is_one());
    }

    #[test]
    fn exact_division() {
        let a = &(&q() * &q()) - &c(1);
        let b = &q() + &c(1);
        assert_eq!(a.exact_div(&b).unwrap(), &q() - &c(1));
        assert!(matches!(
            (&q() + &c(2)).exact_div(&b),
            Err(ScalarError::NotDivisible { .. })
        ));
        assert_eq!(a.exact_div(&LaurentScalar::zero()), Err(ScalarError::DivisionByZero));
        // Laurent shifts: (q - q^-1) / q^-1 = q^2 - 1
        let qq = &q() - &q().inverse().unwrap();
        assert_eq!(qq.exact_div(&q().inverse().unwrap()).unwrap(), a);
    }

    #[test]
    fn rendering() {
        let s = &(&q() - &q().inverse().unwrap()).scale(&Rational::new(3.into(), 2.into())) - &c(1);
        assert_eq!(s.to_string(), "3/2*q - 1 - 3/2*q^-1");
        assert_eq!((-q()).to_string(), "-q");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
    }

    #[test]
    fn sqrt_and_normalization() {
        let sq = &(&q() + &c(1)) * &(&q() + &c(1));
        assert_eq!(sq.shift(-2).sqrt(), Some((&q() + &c(1)).shift(-1)));
        assert_eq!(q().sqrt(), None);
        let (sign, n) = (&c(-2) + &q()).sign_normalized();
        assert_eq!(sign, -1);
        assert_eq!(n.to_string(), "-q + 2");
    }

    #[test]
    #[should_panic(expected = "overflowed")]
    fn exponent_overflow_is_hard_error() {
        let big = LaurentScalar::monomial(Rational::one(), i32::MAX);
        let _ = &big * &q();
    }
}
