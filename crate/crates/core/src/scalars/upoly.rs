//! Dense univariate polynomials over the rationals.
//!
//! Only used internally to implement gcd, division and square roots for
//! [`LaurentScalar`](super::LaurentScalar) once its `q`-power shift has been
//! factored out.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub(crate) Vec<Rational>);

impl UPoly {
    pub(crate) fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub(crate) fn one() -> Self {
        UPoly(vec![Rational::one()])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub(crate) fn scale(&self, c: &Rational) -> Self {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub(crate) fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub(crate) fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.lead().expect("division by zero polynomial");
        let ddeg = divisor.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= ddeg {
            return (UPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square root in `Q[q]`, if this polynomial is a perfect square.
    pub(crate) fn sqrt(&self) -> Option<Self> {
        let deg = match self.degree() {
            None => return Some(self.clone()),
            Some(d) => d,
        };
        if deg % 2 == 1 {
            return None;
        }
        let half = deg / 2;
        let lead_root = rational_sqrt(self.lead()?)?;
        // Match coefficients from the top: (r_half q^half + ...)^2.
        let mut root = vec![Rational::zero(); half + 1];
        root[half] = lead_root.clone();
        let two_lead = &lead_root * Rational::from_integer(BigInt::from(2));
        for k in (0..half).rev() {
            // coefficient of q^(half + k) in root^2 uses root[k] * root[half] twice
            let target = &self.0[half + k];
            let mut acc = Rational::zero();
            for i in (k + 1)..=half {
                let j = half + k - i;
                if j > k && j <= half {
                    acc += &root[i] * &root[j];
                }
            }
            root[k] = (target - acc) / &two_lead;
        }
        let root = UPoly::new(root);
        if root.mul(&root) == *self {
            Some(root)
        } else {
            None
        }
    }
}

/// Square root of a rational number, when it is the square of a rational.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
