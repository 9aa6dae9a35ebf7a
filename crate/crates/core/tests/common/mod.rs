#![allow(dead_code)]

use num_traits::Zero;
use pointscheme::corpus::ENTRIES;
use pointscheme::relparse::{parse_presentation, Presentation, Relation};
use pointscheme::scalars::{LaurentScalar, QConstraintSet, Rational};
use rand::Rng;

pub fn corpus(i: usize) -> Presentation {
    parse_presentation(ENTRIES[i - 1].source).unwrap()
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// A random Laurent scalar with small integer coefficients and exponents
/// in `-2..=2`.
pub fn random_scalar<R: Rng>(rng: &mut R) -> LaurentScalar {
    loop {
        let k = rng.gen_range(1..=2);
        let s = LaurentScalar::from_terms((0..k).map(|_| (rng.gen_range(-2..=2), int(rng.gen_range(-3..=3)))));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random relation in `n` generators with up to four words.
pub fn random_relation<R: Rng>(rng: &mut R, n: usize, q_coeffs: bool) -> Relation {
    loop {
        let k = rng.gen_range(1..=4);
        let words = (0..k).map(|_| {
            let c = if q_coeffs {
                random_scalar(rng)
            } else {
                LaurentScalar::from_int([1, -1, 2, -2][rng.gen_range(0..4)])
            };
            ((rng.gen_range(0..n), rng.gen_range(0..n)), c)
        });
        if let Some(r) = Relation::new(words) {
            return r;
        }
    }
}

pub fn random_presentation<R: Rng>(rng: &mut R, n: usize, m: usize, q_coeffs: bool) -> Presentation {
    let relations = (0..m).map(|_| random_relation(rng, n, q_coeffs)).collect();
    let mut c = QConstraintSet::new();
    if q_coeffs && rng.gen_bool(0.5) {
        c.push(random_scalar(rng)).unwrap();
    }
    Presentation::new(n, relations, c)
}
