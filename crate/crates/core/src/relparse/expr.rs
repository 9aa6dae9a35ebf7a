//! Tokenizer and recursive-descent evaluator for relation expressions.
//!
//! Expressions are evaluated directly into noncommutative polynomials:
//! a map from generator words to Laurent coefficients. Multiplication
//! concatenates words, so `x2*x1` and `x1*x2` stay distinct.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ParseError;
use crate::scalars::{LaurentScalar, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Q,
    /// Generator `x<k>` or coordinate `a<k>`, stored zero-based.
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

/// Noncommutative polynomial: word (zero-based generator indices) to
/// coefficient.
pub(crate) type NcPoly = BTreeMap<Vec<usize>, LaurentScalar>;

pub(crate) struct ExprContext {
    pub line: usize,
    /// Column of the first character of the expression within its line.
    pub col_offset: usize,
    /// Number of generators, or `None` when no generator may appear.
    pub nvars: Option<usize>,
    /// Whether `a<k>` names are accepted alongside `x<k>`.
    pub allow_alpha: bool,
}

impl ExprContext {
    fn syntax(&self, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col_offset + col,
            msg: msg.into(),
        }
    }
}

fn tokenize(src: &str, ctx: &ExprContext) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '*' => {
                if chars.get(i + 1) == Some(&'*') {
                    i += 1;
                    Tok::Caret
                } else {
                    Tok::Star
                }
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Num(s.parse().expect("digits parse as integer"))
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..=i].iter().collect();
                ident_token(&word, col, ctx)?
            }
            other => return Err(ctx.syntax(col, format!("unexpected character '{other}'"))),
        };
        out.push(Spanned { tok, col });
        i += 1;
    }
    Ok(out)
}

fn ident_token(word: &str, col: usize, ctx: &ExprContext) -> Result<Tok, ParseError> {
    if word == "q" {
        return Ok(Tok::Q);
    }
    let (head, digits) = word.split_at(1);
    let is_var_name = (head == "x" || (ctx.allow_alpha && head == "a"))
        && !digits.is_empty()
        && digits.chars().all(|c| c.is_ascii_digit())
        && !digits.starts_with('0');
    if !is_var_name {
        return Err(ctx.syntax(
            col,
            format!("unknown identifier '{word}' (write products with an explicit '*')"),
        ));
    }
    let k: usize = digits
        .parse()
        .map_err(|_| ctx.syntax(col, "generator index too large"))?;
    match ctx.nvars {
        Some(n) if k <= n => Ok(Tok::Var(k - 1)),
        Some(_) | None => Err(ParseError::UnknownGenerator {
            line: ctx.line,
            col: ctx.col_offset + col,
            name: word.to_string(),
        }),
    }
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ctx: &'a ExprContext,
    end_col: usize,
}

fn add_into(acc: &mut NcPoly, word: Vec<usize>, c: LaurentScalar) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(word.clone()).or_insert_with(LaurentScalar::zero);
    *slot = &*slot + &c;
    if slot.is_zero() {
        acc.remove(&word);
    }
}

fn nc_mul(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_into(&mut out, w, ca * cb);
        }
    }
    out
}

fn nc_scalar(c: LaurentScalar) -> NcPoly {
    let mut p = NcPoly::new();
    add_into(&mut p, Vec::new(), c);
    p
}

/// The scalar value of a polynomial with only the empty word.
pub(crate) fn as_scalar(p: &NcPoly) -> Option<LaurentScalar> {
    match p.len() {
        0 => Some(LaurentScalar::zero()),
        1 => p.get(&Vec::new()).cloned(),
        _ => None,
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|s| s.col).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let col = self.col();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(self.ctx.syntax(col, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = NcPoly::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -1
            }
            Some(Tok::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            for (w, c) in t {
                add_into(&mut acc, w, if sign < 0 { -c } else { c });
            }
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => break,
            };
            self.bump();
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.power()?;
                    acc = nc_mul(&acc, &rhs);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let rhs = self.power()?;
                    let inv = as_scalar(&rhs)
                        .and_then(|s| s.inverse().ok())
                        .ok_or_else(|| self.ctx.syntax(col, "can only divide by a nonzero c*q^k"))?;
                    acc = nc_mul(&acc, &nc_scalar(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<NcPoly, ParseError> {
        let base_col = self.col();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        if exp >= 0 {
            let mut out = nc_scalar(LaurentScalar::one());
            for _ in 0..exp {
                out = nc_mul(&out, &base);
            }
            return Ok(out);
        }
        let s = as_scalar(&base)
            .and_then(|s| s.pow(exp).ok())
            .ok_or_else(|| self.ctx.syntax(base_col, "negative powers are only defined for c*q^k"))?;
        Ok(nc_scalar(s))
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let col = self.col();
        let parens = self.peek() == Some(&Tok::LParen);
        if parens {
            self.bump();
        }
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let v = match self.bump() {
            Some(Tok::Num(n)) => n
                .to_i32()
                .filter(|v| *v <= 64)
                .ok_or_else(|| self.ctx.syntax(col, "exponent out of range"))?,
            _ => return Err(self.ctx.syntax(col, "expected an integer exponent")),
        };
        if parens {
            self.expect(Tok::RParen, "')'")?;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(nc_scalar(LaurentScalar::constant(Rational::from_integer(n)))),
            Some(Tok::Q) => Ok(nc_scalar(LaurentScalar::q())),
            Some(Tok::Var(k)) => {
                let mut p = NcPoly::new();
                p.insert(vec![k], LaurentScalar::one());
                Ok(p)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                let inner = self.power()?;
                Ok(inner.into_iter().map(|(w, c)| (w, -c)).collect())
            }
            Some(_) => Err(self.ctx.syntax(col, "expected a number, q, a generator or '('")),
            None => Err(self.ctx.syntax(col, "unexpected end of expression")),
        }
    }
}

/// Parses and evaluates a complete expression.
pub(crate) fn eval_expr(src: &str, ctx: &ExprContext) -> Result<NcPoly, ParseError> {
    let toks = tokenize(src, ctx)?;
    if toks.is_empty() {
        return Err(ctx.syntax(1, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ctx,
        end_col: src.chars().count() + 1,
    };
    let value = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(ctx.syntax(p.col(), "unexpected token"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> ExprContext {
        ExprContext {
            line: 1,
            col_offset: 0,
            nvars: Some(n),
            allow_alpha: false,
        }
    }

    #[test]
    fn noncommutative_words_stay_distinct() {
        let p = eval_expr("x2*x1 - q*x1*x2", &ctx(2)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[&vec![1, 0]].to_string(), "1");
        assert_eq!(p[&vec![0, 1]].to_string(), "-q");
    }

    #[test]
    fn laurent_coefficients() {
        let p = eval_expr("-(q - q^-1)*x2*x3", &ctx(3)).unwrap();
        assert_eq!(p[&vec![1, 2]].to_string(), "-q + q^-1");
        let p = eval_expr("x1*x1/q**2 + 3/2*x1^2", &ctx(1)).unwrap();
        assert_eq!(p[&vec![0, 0]].to_string(), "3/2 + q^-2");
        let p = eval_expr("q^(-1)*x1*x1", &ctx(1)).unwrap();
        assert_eq!(p[&vec![0, 0]].to_string(), "q^-1");
    }

    #[test]
    fn errors_carry_columns() {
        match eval_expr("x1*x2 + x1x2", &ctx(2)) {
            Err(ParseError::Syntax { col, .. }) => assert_eq!(col, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            eval_expr("x1*x5", &ctx(4)),
            Err(ParseError::UnknownGenerator { col: 4, .. })
        ));
        assert!(matches!(eval_expr("x1*(x2", &ctx(2)), Err(ParseError::Syntax { .. })));
        assert!(matches!(eval_expr("x1/(q+1)", &ctx(2)), Err(ParseError::Syntax { .. })));
        assert!(matches!(eval_expr("(q+1)^-1", &ctx(2)), Err(ParseError::Syntax { .. })));
    }
}
