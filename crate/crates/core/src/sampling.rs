//! Random rational points on and off scheme components, for spot checks.

use num_traits::{One, Zero};
use rand::Rng;

use crate::multipoly::MultiPoly;
use crate::scalars::upoly::rational_sqrt;
use crate::scalars::{QConstraintSet, Rational};
use crate::scheme::{SchemeComponent, SchemeDescription};

const ATTEMPTS: usize = 500;

/// A small random rational `a/b` with `|a| <= 12` and `1 <= b <= 5`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-12..=12);
    let den: i64 = rng.gen_range(1..=5);
    Rational::new(num.into(), den.into())
}

/// A random `q0` satisfying the constraints (and `q0 != 0`).
pub fn admissible_q<R: Rng + ?Sized>(rng: &mut R, c: &QConstraintSet) -> Rational {
    loop {
        let q0 = random_rational(rng);
        if c.admits(&q0) {
            return q0;
        }
    }
}

/// Whether `alpha` lies on the component when `q = q0`.
pub fn lies_on(comp: &SchemeComponent, alpha: &[Rational], q0: &Rational) -> bool {
    let zero_ok = comp.zero_vars().iter().all(|&v| alpha[v].is_zero());
    match comp {
        SchemeComponent::Hypersurface { equation, .. } => {
            zero_ok && equation.eval(alpha, q0).map(|v| v.is_zero()).unwrap_or(false)
        }
        _ => zero_ok,
    }
}

/// A random nonzero rational point on the component, or `None` if none
/// was found (for instance on a quadric without rational points).
pub fn point_on<R: Rng + ?Sized>(
    rng: &mut R,
    comp: &SchemeComponent,
    n: usize,
    q0: &Rational,
) -> Option<Vec<Rational>> {
    for _ in 0..ATTEMPTS {
        let mut alpha: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
        for &v in comp.zero_vars() {
            alpha[v] = Rational::zero();
        }
        if let SchemeComponent::Hypersurface { equation, within, .. } = comp {
            let f = equation.specialize_q(q0).ok()?;
            if !solve_for_one(rng, &f, within, &mut alpha) {
                continue;
            }
        }
        if alpha.iter().any(|x| !x.is_zero()) && lies_on(comp, &alpha, q0) {
            return Some(alpha);
        }
    }
    None
}

/// Overwrites one coordinate of `alpha` so that `f(alpha) = 0`, using a
/// variable in which `f` is linear, or a quadratic with a square
/// discriminant.
fn solve_for_one<R: Rng + ?Sized>(rng: &mut R, f: &MultiPoly, fixed: &[usize], alpha: &mut [Rational]) -> bool {
    let q1 = Rational::one();
    let at = |p: &MultiPoly, a: &[Rational]| p.eval(a, &q1).expect("q already specialized");
    let candidates: Vec<usize> = f.variables().into_iter().filter(|v| !fixed.contains(v)).collect();
    if candidates.is_empty() {
        return false;
    }
    let linear: Vec<usize> = candidates.iter().copied().filter(|&v| f.degree_in(v) == 1).collect();
    let pool = if linear.is_empty() { &candidates } else { &linear };
    let v = pool[rng.gen_range(0..pool.len())];
    match f.degree_in(v) {
        1 => {
            let c = at(&f.coefficient_in(v, 1), alpha);
            if c.is_zero() {
                return false;
            }
            alpha[v] = -at(&f.coefficient_in(v, 0), alpha) / c;
            true
        }
        2 => {
            let a = at(&f.coefficient_in(v, 2), alpha);
            let b = at(&f.coefficient_in(v, 1), alpha);
            let c = at(&f.coefficient_in(v, 0), alpha);
            if a.is_zero() {
                return false;
            }
            let four = Rational::from_integer(4.into());
            let two = Rational::from_integer(2.into());
            match rational_sqrt(&(&b * &b - four * &a * &c)) {
                Some(s) => {
                    let sign = if rng.gen_bool(0.5) { s } else { -s };
                    alpha[v] = (-b + sign) / (two * a);
                    true
                }
                None => false,
            }
        }
        _ => false,
    }
}

/// A random nonzero point lying on no component of the description.
pub fn point_off<R: Rng + ?Sized>(rng: &mut R, d: &SchemeDescription, q0: &Rational) -> Option<Vec<Rational>> {
    for _ in 0..ATTEMPTS {
        let alpha: Vec<Rational> = (0..d.n).map(|_| random_rational(rng)).collect();
        if alpha.iter().all(Zero::is_zero) {
            continue;
        }
        if !d.components.iter().any(|c| lies_on(c, &alpha, q0)) {
            return Some(alpha);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::relparse::parse_poly;

    #[test]
    fn points_land_on_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q0 = Rational::from_integer(3.into());
        let comps = [
            SchemeComponent::subspace([1, 2]),
            SchemeComponent::hypersurface(&parse_poly("a1*a4 - a2*a3", 4).unwrap()),
            SchemeComponent::hypersurface(&parse_poly("a1^2 - q*a2^2 + a3*a4", 4).unwrap()),
            SchemeComponent::hypersurface(&parse_poly("a1^2 + a2^2 - a3^2 - a4^2", 4).unwrap()),
        ];
        for c in &comps {
            for _ in 0..20 {
                let a = point_on(&mut rng, c, 4, &q0).expect("sample found");
                assert!(lies_on(c, &a, &q0));
            }
        }
    }

    #[test]
    fn admissible_values_respect_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = QConstraintSet::from_polys([crate::relparse::parse_scalar("q^2 - 1").unwrap()]).unwrap();
        for _ in 0..100 {
            let q0 = admissible_q(&mut rng, &c);
            assert!(!q0.is_zero() && q0 != Rational::one() && q0 != -Rational::one());
        }
    }
}
