//! Gram-matrix classification and splitting of quadratic forms.

use num_bigint::BigInt;
use num_traits::One;

use super::{AlphaMonomial, MultiPoly, PolyError};
use crate::elim;
use crate::scalars::{LaurentScalar, Rational};

/// A homogeneous quadratic `sum gram[i][j] * a_i * a_j` with a symmetric
/// Gram matrix: diagonal entries are the square coefficients, off-diagonal
/// entries carry half of each cross coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    gram: Vec<Vec<LaurentScalar>>,
}

/// How a quadratic form factors over `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticSplit {
    /// Gram rank at least three.
    Irreducible { rank: usize },
    /// `f = scalar * factor^2`.
    Square { scalar: LaurentScalar, factor: MultiPoly },
    /// `f = scalar * left * right` with independent linear factors.
    Product {
        scalar: LaurentScalar,
        left: MultiPoly,
        right: MultiPoly,
    },
    /// Rank two, but the factors need a square root outside `Q(q)`.
    SplitOverClosure,
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

impl QuadraticForm {
    pub fn from_poly(p: &MultiPoly) -> Result<Self, PolyError> {
        if p.homogeneous_degree() != Some(2) {
            return Err(PolyError::NotQuadraticForm(p.to_string()));
        }
        let n = p.nvars();
        let mut gram = vec![vec![LaurentScalar::zero(); n]; n];
        for (m, c) in p.terms() {
            let s = m.support();
            match s.as_slice() {
                [i] => gram[*i][*i] = c.clone(),
                [i, j] => {
                    let h = c.scale(&half());
                    gram[*i][*j] = h.clone();
                    gram[*j][*i] = h;
                }
                _ => unreachable!("degree-2 monomial with support {s:?}"),
            }
        }
        Ok(QuadraticForm { gram })
    }

    pub fn nvars(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<LaurentScalar>] {
        &self.gram
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.nvars();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                terms.push((AlphaMonomial::new(e), self.gram[i][j].clone()));
            }
        }
        MultiPoly::from_terms(n, terms)
    }

    /// Rank of the Gram matrix over `Q(q)`.
    pub fn rank(&self) -> usize {
        elim::rank(self.gram.clone(), self.nvars())
    }

    /// Classifies the form by Gram rank and returns explicit factors where
    /// they exist over `Q(q)`.
    pub fn split(&self) -> QuadraticSplit {
        let f = self.to_poly();
        match self.rank() {
            0 => unreachable!("zero quadratic form"),
            1 => {
                let i = (0..self.nvars())
                    .find(|&i| !self.gram[i][i].is_zero())
                    .expect("rank-one symmetric matrix has a nonzero diagonal entry");
                let factor = linear_poly(&self.gram[i]).normalized();
                let scalar = scalar_quotient(&f, &(&factor * &factor));
                QuadraticSplit::Square { scalar, factor }
            }
            2 => match split_rank_two(&self.gram) {
                Some((l, r)) => {
                    let (left, right) = (linear_poly(&l).normalized(), linear_poly(&r).normalized());
                    let scalar = scalar_quotient(&f, &(&left * &right));
                    let (left, right) = if left >= right { (left, right) } else { (right, left) };
                    QuadraticSplit::Product { scalar, left, right }
                }
                None => QuadraticSplit::SplitOverClosure,
            },
            r => QuadraticSplit::Irreducible { rank: r },
        }
    }
}

/// Free-function form of [`QuadraticForm::split`].
pub fn split_quadratic_form(f: &QuadraticForm) -> QuadraticSplit {
    f.split()
}

fn linear_poly(coeffs: &[LaurentScalar]) -> MultiPoly {
    let n = coeffs.len();
    MultiPoly::from_terms(
        n,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (AlphaMonomial::var(n, i), c.clone())),
    )
}

fn scalar_quotient(f: &MultiPoly, g: &MultiPoly) -> LaurentScalar {
    f.exact_div(g)
        .ok()
        .and_then(|s| s.as_constant())
        .expect("factors reproduce the quadratic form up to a scalar")
}

/// Linear factors of a rank-two Gram matrix, as coefficient vectors.
fn split_rank_two(gram: &[Vec<LaurentScalar>]) -> Option<(Vec<LaurentScalar>, Vec<LaurentScalar>)> {
    let n = gram.len();
    if let Some(i) = (0..n).find(|&i| !gram[i][i].is_zero()) {
        return split_with_pivot(gram, i);
    }
    // All squares absent: substitute a_i = a'_i + a'_j for a nonzero cross
    // term so that a'_j^2 appears, split, then substitute back.
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && !gram[i][j].is_zero())?;
    let mut t = vec![vec![LaurentScalar::zero(); n]; n];
    for (k, row) in t.iter_mut().enumerate() {
        row[k] = LaurentScalar::one();
    }
    t[i][j] = LaurentScalar::one();
    let transformed = congruence(gram, &t);
    let (a, b) = split_with_pivot(&transformed, j)?;
    let back = |mut c: Vec<LaurentScalar>| {
        c[j] = &c[j] - &c[i];
        c
    };
    Some((back(a), back(b)))
}

/// `t^T g t`.
fn congruence(g: &[Vec<LaurentScalar>], t: &[Vec<LaurentScalar>]) -> Vec<Vec<LaurentScalar>> {
    let n = g.len();
    let mut gt = vec![vec![LaurentScalar::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            for k in 0..n {
                gt[r][c] = &gt[r][c] + &(&g[r][k] * &t[k][c]);
            }
        }
    }
    let mut out = vec![vec![LaurentScalar::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            for k in 0..n {
                out[r][c] = &out[r][c] + &(&t[k][r] * &gt[k][c]);
            }
        }
    }
    out
}

/// Completes the square on `a_i` (with `gram[i][i] != 0`):
/// `g_ii * r_jj * f = m^2 - (-r_jj) * l^2`.
fn split_with_pivot(gram: &[Vec<LaurentScalar>], i: usize) -> Option<(Vec<LaurentScalar>, Vec<LaurentScalar>)> {
    let n = gram.len();
    let gii = &gram[i][i];
    let l = gram[i].clone();
    let schur: Vec<Vec<LaurentScalar>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| &(gii * &gram[r][c]) - &(&gram[i][r] * &gram[i][c]))
                .collect()
        })
        .collect();
    let j = (0..n).find(|&j| !schur[j][j].is_zero())?;
    let m = schur[j].clone();
    let t = (-&schur[j][j]).sqrt()?;
    let minus: Vec<LaurentScalar> = m.iter().zip(&l).map(|(a, b)| a - &(&t * b)).collect();
    let plus: Vec<LaurentScalar> = m.iter().zip(&l).map(|(a, b)| a + &(&t * b)).collect();
    debug_assert!(minus.iter().any(|c| !c.is_zero()) && plus.iter().any(|c| !c.is_zero()));
    Some((minus, plus))
}

/// A polynomial written as `unit * monomial * prod(factor^mult)` using only
/// the factorizations this crate supports (monomials, linear forms,
/// quadratic forms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: LaurentScalar,
    pub monomial: AlphaMonomial,
    pub factors: Vec<(MultiPoly, u32)>,
    /// False when a factor was left unsplit because it fell outside the
    /// supported class (degree three or more, or rank two over the closure).
    pub complete: bool,
}

impl FactoredPoly {
    /// Factors a nonzero polynomial within the restricted class.
    pub fn of(p: &MultiPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (mut unit, normalized) = p.unit_normalize();
        let monomial = normalized.monomial_content()?;
        let residual = normalized.div_monomial(&monomial)?;
        let mut factors = Vec::new();
        let mut complete = true;
        match residual.total_degree() {
            Some(0) => {}
            Some(1) => factors.push((residual, 1)),
            Some(2) if residual.homogeneous_degree() == Some(2) => match QuadraticForm::from_poly(&residual)?.split() {
                QuadraticSplit::Square { scalar, factor } => {
                    unit = &unit * &scalar;
                    factors.push((factor, 2));
                }
                QuadraticSplit::Product { scalar, left, right } => {
                    unit = &unit * &scalar;
                    factors.push((left, 1));
                    factors.push((right, 1));
                }
                QuadraticSplit::Irreducible { .. } => factors.push((residual, 1)),
                QuadraticSplit::SplitOverClosure => {
                    complete = false;
                    factors.push((residual, 1));
                }
            },
            _ => {
                complete = false;
                factors.push((residual, 1));
            }
        }
        Ok(FactoredPoly {
            unit,
            monomial,
            factors,
            complete,
        })
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self) -> MultiPoly {
        let n = self.monomial.nvars();
        let mut out = MultiPoly::term(self.unit.clone(), self.monomial.clone());
        for (f, k) in &self.factors {
            out = &out * &f.pow(*k);
        }
        debug_assert_eq!(out.nvars(), n);
        out
    }

    /// Renders as `(q^2 - 1)*a3^2*(a1*a4 - a2*a3)`; `with_unit = false`
    /// drops the scalar unit.
    pub fn render(&self, prefix: &str, with_unit: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut lead = String::new();
        if with_unit && !self.unit.is_one() {
            let (neg, mag) = super::poly::display_sign(&self.unit);
            if neg {
                lead.push('-');
            }
            if !mag.is_one() {
                parts.push(if mag.num_terms() > 1 {
                    format!("({mag})")
                } else {
                    mag.to_string()
                });
            }
        }
        if !self.monomial.is_one() {
            parts.push(self.monomial.render(prefix));
        }
        for (f, k) in &self.factors {
            let body = if f.num_terms() > 1 {
                format!("({})", f.render(prefix))
            } else {
                f.render(prefix)
            };
            parts.push(if *k > 1 { format!("{body}^{k}") } else { body });
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        format!("{lead}{}", parts.join("*"))
    }
}
