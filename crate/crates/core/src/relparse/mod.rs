//! Presentations of quadratic algebras and their text format.
//!
//! ```text
//! # comments run to the end of the line
//! generators: x1 x2 x3 x4
//! constraint: q^2 - 1          # asserted nonzero; q != 0 is implicit
//! rel: x2*x1 - q*x1*x2
//! rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3
//! ```
//!
//! Products need an explicit `*`; `^` and `**` both denote powers and
//! `q^-1` is allowed. Generators are named `x1..xn` in order.

mod expr;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::multipoly::{AlphaMonomial, MultiPoly};
use crate::scalars::{LaurentScalar, QConstraintSet};
use expr::{as_scalar, eval_expr, ExprContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown generator '{name}'")]
    UnknownGenerator { line: usize, col: usize, name: String },
    #[error("line {line}: term {word} has degree {degree}, relations must be quadratic")]
    Degree { line: usize, word: String, degree: usize },
    #[error("line {line}: relation is zero after combining like terms")]
    ZeroRelation { line: usize },
    #[error("line {line}: malformed constraint: {msg}")]
    Constraint { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Generators { line: usize, msg: String },
    #[error("missing 'generators:' line before the first relation")]
    MissingGenerators,
    #[error("presentation has no relations")]
    NoRelations,
}

/// A homogeneous quadratic relation `sum c_ij * x_i x_j` (indices stored
/// zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    words: BTreeMap<(usize, usize), LaurentScalar>,
}

impl Relation {
    /// Builds a relation, dropping zero coefficients. Returns `None` when
    /// nothing remains.
    pub fn new<I: IntoIterator<Item = ((usize, usize), LaurentScalar)>>(words: I) -> Option<Self> {
        let mut map: BTreeMap<(usize, usize), LaurentScalar> = BTreeMap::new();
        for (w, c) in words {
            let slot = map.entry(w).or_insert_with(LaurentScalar::zero);
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        (!map.is_empty()).then_some(Relation { words: map })
    }

    /// Words `(i, j)` (zero-based) with their nonzero coefficients.
    pub fn words(&self) -> &BTreeMap<(usize, usize), LaurentScalar> {
        &self.words
    }

    pub fn coefficient(&self, i: usize, j: usize) -> LaurentScalar {
        self.words.get(&(i, j)).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    /// Largest generator index used, zero-based.
    pub fn max_index(&self) -> usize {
        self.words.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0)
    }

    /// Renames generator `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Relation {
            words: self
                .words
                .iter()
                .map(|(&(i, j), c)| ((perm[i], perm[j]), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (&(i, j), c)) in self.words.iter().enumerate() {
            let (neg, mag) = crate::multipoly::display_sign(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = format!("x{}*x{}", i + 1, j + 1);
            write!(f, "{}", crate::multipoly::render_coeff_times(&mag, &word, false))?;
        }
        Ok(())
    }
}

/// Generators, quadratic relations and parameter constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub n: usize,
    pub relations: Vec<Relation>,
    pub constraints: QConstraintSet,
    pub labels: Vec<String>,
}

impl Presentation {
    pub fn new(n: usize, relations: Vec<Relation>, constraints: QConstraintSet) -> Self {
        assert!(n > 0, "at least one generator");
        assert!(
            relations.iter().all(|r| r.max_index() < n),
            "relation uses a generator beyond x{n}"
        );
        Presentation {
            n,
            relations,
            constraints,
            labels: (1..=n).map(|k| format!("x{k}")).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.relations.len()
    }

    /// Renames generator `i` to `perm[i]` in every relation.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Presentation::new(
            self.n,
            self.relations.iter().map(|r| r.permuted(perm)).collect(),
            self.constraints.clone(),
        )
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_presentation(self))
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

/// Parses the line-oriented presentation format.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut n: Option<usize> = None;
    let mut relations = Vec::new();
    let mut constraints = QConstraintSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = body.split_once(':') else {
            let col = body.len() - body.trim_start().len() + 1;
            return Err(ParseError::Syntax {
                line,
                col,
                msg: "expected 'generators:', 'constraint:' or 'rel:'".into(),
            });
        };
        let col_offset = key.len() + 1;
        match key.trim() {
            "generators" => {
                if n.is_some() {
                    return Err(ParseError::Generators {
                        line,
                        msg: "duplicate 'generators:' line".into(),
                    });
                }
                n = Some(parse_generators(value, line)?);
            }
            "constraint" => {
                let ctx = ExprContext {
                    line,
                    col_offset,
                    nvars: None,
                    allow_alpha: false,
                };
                let v = eval_expr(value, &ctx).map_err(|e| match e {
                    ParseError::UnknownGenerator { name, .. } => ParseError::Constraint {
                        line,
                        msg: format!("constraints may only involve q, found '{name}'"),
                    },
                    other => other,
                })?;
                let s = as_scalar(&v).ok_or_else(|| ParseError::Constraint {
                    line,
                    msg: "constraints may only involve q".into(),
                })?;
                constraints.push(s).map_err(|_| ParseError::Constraint {
                    line,
                    msg: "constraint polynomial is zero".into(),
                })?;
            }
            "rel" => {
                let nv = n.ok_or(ParseError::MissingGenerators)?;
                let ctx = ExprContext {
                    line,
                    col_offset,
                    nvars: Some(nv),
                    allow_alpha: false,
                };
                let v = eval_expr(value, &ctx)?;
                let mut words = Vec::new();
                for (w, c) in v {
                    match w.as_slice() {
                        [i, j] => words.push(((*i, *j), c)),
                        _ => {
                            return Err(ParseError::Degree {
                                line,
                                word: render_word(&w),
                                degree: w.len(),
                            })
                        }
                    }
                }
                relations.push(Relation::new(words).ok_or(ParseError::ZeroRelation { line })?);
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col: 1,
                    msg: format!("unknown directive '{other}'"),
                })
            }
        }
    }
    let n = n.ok_or(ParseError::MissingGenerators)?;
    if relations.is_empty() {
        return Err(ParseError::NoRelations);
    }
    Ok(Presentation::new(n, relations, constraints))
}

fn render_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join("*")
}

fn parse_generators(value: &str, line: usize) -> Result<usize, ParseError> {
    let names: Vec<&str> = value.split_whitespace().collect();
    if names.is_empty() {
        return Err(ParseError::Generators {
            line,
            msg: "no generators listed".into(),
        });
    }
    for (k, name) in names.iter().enumerate() {
        let expected = format!("x{}", k + 1);
        if *name != expected {
            return Err(ParseError::Generators {
                line,
                msg: format!("generators must be x1..xn in order; found '{name}' where '{expected}' was expected"),
            });
        }
    }
    Ok(names.len())
}

/// Renders a presentation in the format accepted by [`parse_presentation`].
pub fn render_presentation(p: &Presentation) -> String {
    let mut out = format!("generators: {}\n", p.labels.join(" "));
    for c in p.constraints.declared() {
        out.push_str(&format!("constraint: {c}\n"));
    }
    for r in &p.relations {
        out.push_str(&format!("rel: {r}\n"));
    }
    out
}

/// Parses a commutative polynomial in `a1..an` (or `x1..xn`) with Laurent
/// coefficients, e.g. `a2*a3 - a1*a4` or `(q^2 - 1)*a3^2`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly, ParseError> {
    let ctx = ExprContext {
        line: 1,
        col_offset: 0,
        nvars: Some(nvars),
        allow_alpha: true,
    };
    let v = eval_expr(text, &ctx)?;
    Ok(MultiPoly::from_terms(
        nvars,
        v.into_iter().map(|(w, c)| {
            let mut e = vec![0u32; nvars];
            for i in w {
                e[i] += 1;
            }
            (AlphaMonomial::new(e), c)
        }),
    ))
}

/// Parses a Laurent scalar such as `q^2 - 1`.
pub fn parse_scalar(text: &str) -> Result<LaurentScalar, ParseError> {
    let ctx = ExprContext {
        line: 1,
        col_offset: 0,
        nvars: None,
        allow_alpha: false,
    };
    let v = eval_expr(text, &ctx)?;
    as_scalar(&v).ok_or_else(|| ParseError::Syntax {
        line: 1,
        col: 1,
        msg: "expected a scalar".into(),
    })
}
