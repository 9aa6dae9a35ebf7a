//! Partner coordinates: the kernel of `D(a)` for a point `a` of the scheme.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::elim;
use crate::linmat::{LinearFormMatrix, LinmatError};
use crate::multipoly::MultiPoly;
use crate::scalars::{LaurentScalar, QConstraintSet, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiberError {
    #[error("the zero vector is not a projective point")]
    ZeroAlpha,
    #[error("q = {0} violates the declared constraints")]
    Inadmissible(Rational),
    #[error(transparent)]
    Matrix(#[from] LinmatError),
}

/// Rank of `D(a)` and a kernel basis; `rank + kernel_basis.len() == n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberResult<T> {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<T>>,
}

impl<T> FiberResult<T> {
    /// One kernel direction, i.e. a unique partner point up to scale.
    pub fn unique(&self) -> Option<&[T]> {
        match self.kernel_basis.as_slice() {
            [v] => Some(v),
            _ => None,
        }
    }
}

fn check_alpha(alpha: &[Rational]) -> Result<(), FiberError> {
    if alpha.iter().all(Zero::is_zero) {
        return Err(FiberError::ZeroAlpha);
    }
    Ok(())
}

/// First nonzero coordinate scaled to one.
fn normalize_rational(v: Vec<Rational>) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()).cloned() {
        Some(lead) => v.into_iter().map(|x| x / &lead).collect(),
        None => v,
    }
}

fn normalize_laurent(v: Vec<LaurentScalar>) -> Vec<LaurentScalar> {
    let g = v.iter().fold(LaurentScalar::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let v: Vec<LaurentScalar> = v.iter().map(|x| x.exact_div(&g).expect("gcd divides")).collect();
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .and_then(LaurentScalar::lowest_term_unit);
    match lead.and_then(|u| u.inverse().ok()) {
        Some(inv) => v.iter().map(|x| x * &inv).collect(),
        None => v,
    }
}

fn normalize_poly(v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let g = v
        .iter()
        .fold(LaurentScalar::zero(), |acc, x| acc.gcd(&x.scalar_content()));
    if g.is_zero() {
        return v;
    }
    let v: Vec<MultiPoly> = v
        .iter()
        .map(|x| {
            MultiPoly::from_terms(
                x.nvars(),
                x.terms()
                    .map(|(m, c)| (m.clone(), c.exact_div(&g).expect("content divides"))),
            )
        })
        .collect();
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .and_then(|x| x.leading_term().and_then(|(_, c)| c.lowest_term_unit()));
    match lead.and_then(|u| u.inverse().ok()) {
        Some(inv) => v.iter().map(|x| x.scale(&inv)).collect(),
        None => v,
    }
}

/// Exact kernel of `D(a)` with `q = q0`.
pub fn kernel_at(
    d: &LinearFormMatrix,
    constraints: &QConstraintSet,
    alpha: &[Rational],
    q0: &Rational,
) -> Result<FiberResult<Rational>, FiberError> {
    check_alpha(alpha)?;
    if !constraints.admits(q0) {
        return Err(FiberError::Inadmissible(q0.clone()));
    }
    let m = d.at(alpha, q0)?;
    let n = d.cols();
    let rank = elim::rank(m.clone(), n);
    let kernel_basis = elim::kernel(m, n, &Rational::one())
        .into_iter()
        .map(normalize_rational)
        .collect();
    Ok(FiberResult { rank, kernel_basis })
}

/// Kernel of `D(a)` over `Q(q)`, with denominators cleared.
pub fn kernel_at_generic_q(d: &LinearFormMatrix, alpha: &[Rational]) -> Result<FiberResult<LaurentScalar>, FiberError> {
    check_alpha(alpha)?;
    let m = d.at_alpha(alpha)?;
    let n = d.cols();
    let rank = elim::rank(m.clone(), n);
    let kernel_basis = elim::kernel(m, n, &LaurentScalar::one())
        .into_iter()
        .map(normalize_laurent)
        .collect();
    Ok(FiberResult { rank, kernel_basis })
}

/// Kernel of `D` at the generic point of the coordinate subspace
/// `V(a_v : v in vars)`: the remaining coordinates stay symbolic.
pub fn kernel_on_subspace(d: &LinearFormMatrix, vars: &[usize]) -> FiberResult<MultiPoly> {
    let mut restricted = d.clone();
    for &v in vars {
        restricted = restricted.substitute_zero(v);
    }
    let m: Vec<Vec<MultiPoly>> = restricted.entries().to_vec();
    let n = d.cols();
    let sample = MultiPoly::one(n);
    let rank = elim::rank(m.clone(), n);
    let kernel_basis = elim::kernel(m, n, &sample).into_iter().map(normalize_poly).collect();
    FiberResult { rank, kernel_basis }
}

/// Renders a rational vector as `(1, 0, -1/2, 0)`.
pub fn render_vector<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
