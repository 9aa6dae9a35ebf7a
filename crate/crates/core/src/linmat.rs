//! Multilinearization of relations, the matrix `D` with `D b = (g_k(a, b))_k`,
//! and its maximal minors.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::elim;
use crate::multipoly::MultiPoly;
use crate::relparse::{Presentation, Relation};
use crate::scalars::{LaurentScalar, Rational, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinmatError {
    #[error("matrix has {rows} rows but {cols} columns; maximal minors need rows >= columns")]
    TooFewRows { rows: usize, cols: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    Dimension { got: usize, expected: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `g(a, b) = a^T B b` for a quadratic relation `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    coeffs: Vec<Vec<LaurentScalar>>,
}

impl BilinearForm {
    pub fn coeff(&self, i: usize, j: usize) -> &LaurentScalar {
        &self.coeffs[i][j]
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// `sum_ij B[i][j] a_i b_j` with `q` kept symbolic.
    pub fn eval(&self, alpha: &[LaurentScalar], beta: &[LaurentScalar]) -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() && !alpha[i].is_zero() && !beta[j].is_zero() {
                    acc = &acc + &(&(c * &alpha[i]) * &beta[j]);
                }
            }
        }
        acc
    }

    /// Evaluation at rational points with `q = q0`.
    pub fn eval_rational(&self, alpha: &[Rational], beta: &[Rational], q0: &Rational) -> Result<Rational, ScalarError> {
        let mut acc = Rational::from_integer(0.into());
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc += c.eval(q0)? * &alpha[i] * &beta[j];
                }
            }
        }
        Ok(acc)
    }
}

/// Substitutes `x_i x_j -> a_i b_j`.
pub fn multilinearize(r: &Relation, n: usize) -> BilinearForm {
    let mut coeffs = vec![vec![LaurentScalar::zero(); n]; n];
    for (&(i, j), c) in r.words() {
        coeffs[i][j] = c.clone();
    }
    BilinearForm { coeffs }
}

/// `m x n` matrix whose entries are linear forms in `a1..an`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearFormMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<MultiPoly>>,
}

impl LinearFormMatrix {
    pub fn from_entries(entries: Vec<Vec<MultiPoly>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        LinearFormMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, k: usize, j: usize) -> &MultiPoly {
        &self.entries[k][j]
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn submatrix(&self, rows: &[usize]) -> Vec<Vec<MultiPoly>> {
        rows.iter().map(|&r| self.entries[r].clone()).collect()
    }

    /// Sets `a_{var+1} = 0` in every entry.
    pub fn substitute_zero(&self, var: usize) -> Self {
        self.map(|e| e.substitute_zero(var))
    }

    pub fn specialize_q(&self, q0: &Rational) -> Result<Self, ScalarError> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.specialize_q(q0)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinearFormMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// `D(a)` with `q` kept symbolic.
    pub fn at_alpha(&self, alpha: &[Rational]) -> Result<Vec<Vec<LaurentScalar>>, LinmatError> {
        self.check_dim(alpha)?;
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval_alpha(alpha)).collect())
            .collect())
    }

    /// `D(a)` with `q = q0`.
    pub fn at(&self, alpha: &[Rational], q0: &Rational) -> Result<Vec<Vec<Rational>>, LinmatError> {
        self.check_dim(alpha)?;
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.eval(alpha, q0).map_err(LinmatError::from))
                    .collect()
            })
            .collect()
    }

    fn check_dim(&self, alpha: &[Rational]) -> Result<(), LinmatError> {
        if alpha.len() != self.cols {
            return Err(LinmatError::Dimension {
                got: alpha.len(),
                expected: self.cols,
            });
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        LinearFormMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|row| row.iter().map(&f).collect()).collect(),
        }
    }

    /// Renders rows as `[a2, -q*a1, 0, 0]`, one per line.
    pub fn render(&self, prefix: &str) -> String {
        self.entries
            .iter()
            .map(|row| format!("[{}]", row.iter().map(|e| e.render(prefix)).join(", ")))
            .join("\n")
    }
}

impl fmt::Debug for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearFormMatrix {}x{}:\n{}", self.rows, self.cols, self.render("a"))
    }
}

/// Row `k`, column `j` is `sum_i c^(k)_ij a_i`, so that `(D b)_k = g_k(a, b)`.
pub fn build_matrix(p: &Presentation) -> LinearFormMatrix {
    let n = p.n;
    let entries = p
        .relations
        .iter()
        .map(|r| {
            let b = multilinearize(r, n);
            (0..n)
                .map(|j| {
                    let mut e = MultiPoly::zero(n);
                    for i in 0..n {
                        let c = b.coeff(i, j);
                        if !c.is_zero() {
                            e = &e + &MultiPoly::var(n, i).scale(c);
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    LinearFormMatrix::from_entries(entries)
}

/// Exact determinant of a square matrix of polynomials.
pub fn determinant(square: &[Vec<MultiPoly>]) -> MultiPoly {
    elim::determinant(square.to_vec())
}

/// The determinant of the rows `rows` (ascending, zero-based) of `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub poly: MultiPoly,
}

/// All maximal minors of a matrix, in lexicographic row-subset order.
#[derive(Clone, Debug)]
pub struct MinorSet {
    pub matrix: LinearFormMatrix,
    pub minors: Vec<Minor>,
    /// Unit-normalized nonzero minors, deduplicated, in order of first
    /// appearance.
    pub nonzero_reduced: Vec<MultiPoly>,
}

impl MinorSet {
    pub fn nonzero(&self) -> impl Iterator<Item = &Minor> {
        self.minors.iter().filter(|m| !m.poly.is_zero())
    }
}

/// Determinants of every `n`-row subset of an `m x n` matrix.
pub fn maximal_minors(d: &LinearFormMatrix) -> Result<MinorSet, LinmatError> {
    let (m, n) = (d.rows(), d.cols());
    if m < n || n == 0 {
        return Err(LinmatError::TooFewRows { rows: m, cols: n });
    }
    let subsets: Vec<Vec<usize>> = (0..m).combinations(n).collect();
    let minors: Vec<Minor> = subsets
        .into_par_iter()
        .map(|rows| {
            let poly = determinant(&d.submatrix(&rows));
            Minor { rows, poly }
        })
        .collect();
    let mut seen = HashSet::new();
    let mut nonzero_reduced = Vec::new();
    for minor in minors.iter().filter(|m| !m.poly.is_zero()) {
        let normalized = minor.poly.normalized();
        if seen.insert(normalized.to_string()) {
            nonzero_reduced.push(normalized);
        }
    }
    Ok(MinorSet {
        matrix: d.clone(),
        minors,
        nonzero_reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relparse::{parse_poly, parse_presentation};

    const FIRST: &str = "generators: x1 x2 x3 x4
constraint: q^2 - 1
rel: x2*x1 - q*x1*x2
rel: x2*x3 - x3*x2
rel: x3*x1 - q*x1*x3
rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3
rel: x4*x2 - q*x2*x4
rel: x4*x3 - q*x3*x4
";

    fn p4(s: &str) -> MultiPoly {
        parse_poly(s, 4).unwrap()
    }

    #[test]
    fn first_corpus_matrix_rows() {
        let d = build_matrix(&parse_presentation(FIRST).unwrap());
        assert_eq!((d.rows(), d.cols()), (6, 4));
        let expect = [
            ["a2", "-q*a1", "0", "0"],
            ["0", "-a3", "a2", "0"],
            ["a3", "0", "-q*a1", "0"],
            ["a4", "0", "-(q - q^-1)*a2", "-a1"],
            ["0", "a4", "0", "-q*a2"],
            ["0", "0", "a4", "-q*a3"],
        ];
        for (k, row) in expect.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(d.entry(k, j), &p4(e), "entry ({k}, {j})");
            }
        }
    }

    #[test]
    fn single_square_relation() {
        let d = build_matrix(&parse_presentation("generators: x1\nrel: x1*x1\n").unwrap());
        assert_eq!(d.entries(), &[vec![parse_poly("a1", 1).unwrap()]]);
    }

    #[test]
    fn multilinearized_relations() {
        let p = parse_presentation(FIRST).unwrap();
        let b = multilinearize(&p.relations[0], 4);
        assert_eq!(b.coeff(1, 0), &LaurentScalar::one());
        assert_eq!(b.coeff(0, 1), &-LaurentScalar::q());
        let nonzero = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !b.coeff(i, j).is_zero());
        assert_eq!(nonzero.count(), 2);
        let g4 = parse_presentation("generators: x1 x2 x3 x4\nrel: x1*x4 - x4*x1\n").unwrap();
        let b4 = multilinearize(&g4.relations[0], 4);
        assert_eq!(b4.coeff(0, 3), &LaurentScalar::one());
        assert_eq!(b4.coeff(3, 0), &LaurentScalar::from_int(-1));
    }

    #[test]
    fn determinant_basics() {
        let diag: Vec<Vec<MultiPoly>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            MultiPoly::var(4, i)
                        } else {
                            MultiPoly::zero(4)
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(determinant(&diag), p4("a1*a2*a3*a4"));
        let mut repeated = diag.clone();
        repeated[2] = repeated[1].clone();
        assert!(determinant(&repeated).is_zero());
    }

    #[test]
    fn too_few_rows() {
        let d = build_matrix(&parse_presentation("generators: x1 x2\nrel: x1*x2\n").unwrap());
        assert_eq!(
            maximal_minors(&d).unwrap_err(),
            LinmatError::TooFewRows { rows: 1, cols: 2 }
        );
    }

    #[test]
    fn square_matrix_with_zero_column() {
        let d = build_matrix(&parse_presentation("generators: x1 x2\nrel: x1*x1\nrel: x2*x1\n").unwrap());
        let ms = maximal_minors(&d).unwrap();
        assert_eq!(ms.minors.len(), 1);
        assert!(ms.minors[0].poly.is_zero());
        assert!(ms.nonzero_reduced.is_empty());
    }

    #[test]
    fn first_corpus_has_fifteen_minors() {
        let ms = maximal_minors(&build_matrix(&parse_presentation(FIRST).unwrap())).unwrap();
        assert_eq!(ms.minors.len(), 15);
        assert_eq!(ms.minors[0].rows, vec![0, 1, 2, 3]);
        for m in ms.nonzero() {
            assert_eq!(m.poly.homogeneous_degree(), Some(4));
        }
    }
}
