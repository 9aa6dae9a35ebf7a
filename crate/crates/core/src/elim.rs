//! Fraction-free (Bareiss) elimination over an exact integral domain.
//!
//! One engine serves determinants of polynomial matrices, ranks of Gram
//! matrices over `Q[q, q^-1]`, and kernels of specialized matrices. Every
//! division performed is exact in the domain; a failed division is an
//! internal invariant violation and panics.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::scalars::{LaurentScalar, Rational};

/// An integral domain with exact division.
pub trait ExactDomain: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn dom_add(&self, other: &Self) -> Self;
    fn dom_sub(&self, other: &Self) -> Self;
    fn dom_mul(&self, other: &Self) -> Self;
    fn dom_neg(&self) -> Self;
    /// `self / divisor` when the quotient lies in the domain.
    fn dom_div(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDomain for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn dom_add(&self, other: &Self) -> Self {
        self + other
    }
    fn dom_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn dom_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn dom_neg(&self) -> Self {
        -self.clone()
    }
    fn dom_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl ExactDomain for LaurentScalar {
    fn zero_like(&self) -> Self {
        LaurentScalar::zero()
    }
    fn one_like(&self) -> Self {
        LaurentScalar::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn dom_add(&self, other: &Self) -> Self {
        self + other
    }
    fn dom_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn dom_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn dom_neg(&self) -> Self {
        -self
    }
    fn dom_div(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor).ok()
    }
}

/// Row echelon form produced by fraction-free elimination.
///
/// `rows[i][pivots[i]]` is the `(i+1)`-st leading principal minor of the
/// row-permuted matrix restricted to the pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
    /// Parity of the row permutation applied (`true` = odd).
    pub odd_permutation: bool,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn exact<T: ExactDomain>(num: &T, den: &T) -> T {
    num.dom_div(den)
        .unwrap_or_else(|| panic!("fraction-free step is not exact: {num:?} / {den:?}"))
}

/// Fraction-free row echelon form of `m` (`ncols` columns).
pub fn echelon<T: ExactDomain>(mut m: Vec<Vec<T>>, ncols: usize) -> Echelon<T> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut odd = false;
    let mut prev: Option<T> = None;
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero_elem()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            odd = !odd;
        }
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[col].clone();
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in (col + 1)..ncols {
                let t = piv.dom_mul(&row[j]).dom_sub(&lead.dom_mul(&pivot_row[j]));
                row[j] = match &prev {
                    Some(d) => exact(&t, d),
                    None => t,
                };
            }
            row[col] = piv.zero_like();
        }
        prev = Some(piv);
        pivots.push(col);
        r += 1;
    }
    Echelon {
        rows: m,
        pivots,
        ncols,
        odd_permutation: odd,
    }
}

/// Determinant of a square matrix. The matrix must be nonempty.
pub fn determinant<T: ExactDomain>(m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "determinant needs a nonempty square matrix"
    );
    let zero = m[0][0].zero_like();
    let ech = echelon(m, n);
    if ech.rank() < n {
        return zero;
    }
    let d = ech.rows[n - 1][n - 1].clone();
    if ech.odd_permutation {
        d.dom_neg()
    } else {
        d
    }
}

pub fn rank<T: ExactDomain>(m: Vec<Vec<T>>, ncols: usize) -> usize {
    echelon(m, ncols).rank()
}

/// A basis of the right kernel `{ v : m v = 0 }` with entries in the
/// domain (denominators cleared). `sample` supplies the zero and one of
/// the domain when `m` has no entries.
pub fn kernel<T: ExactDomain>(m: Vec<Vec<T>>, ncols: usize, sample: &T) -> Vec<Vec<T>> {
    let ech = echelon(m, ncols);
    let zero = sample.zero_like();
    let r = ech.rank();
    let scale = if r == 0 {
        sample.one_like()
    } else {
        ech.rows[r - 1][ech.pivots[r - 1]].clone()
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![zero.clone(); ncols];
        v[f] = scale.clone();
        for i in (0..r).rev() {
            let pc = ech.pivots[i];
            let mut acc = zero.clone();
            for (x, a) in v.iter().zip(&ech.rows[i]).skip(pc + 1) {
                if !x.is_zero_elem() && !a.is_zero_elem() {
                    acc = acc.dom_add(&a.dom_mul(x));
                }
            }
            v[pc] = exact(&acc.dom_neg(), &ech.rows[i][pc]);
        }
        basis.push(v);
    }
    basis
}
