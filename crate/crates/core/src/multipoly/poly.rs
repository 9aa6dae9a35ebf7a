use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlphaMonomial, PolyError};
use crate::elim::ExactDomain;
use crate::scalars::{LaurentScalar, Rational, ScalarError};

/// Sparse polynomial in the commuting coordinates `a1..an` with
/// coefficients in `Q[q, q^-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<AlphaMonomial, LaurentScalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, LaurentScalar::one())
    }

    pub fn constant(nvars: usize, c: LaurentScalar) -> Self {
        Self::term(c, AlphaMonomial::one(nvars))
    }

    /// The coordinate `a_{var+1}` (zero-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        Self::term(LaurentScalar::one(), AlphaMonomial::var(nvars, var))
    }

    pub fn term(c: LaurentScalar, m: AlphaMonomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (AlphaMonomial, LaurentScalar)>>(nvars: usize, iter: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in iter {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong number of variables");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: AlphaMonomial, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&AlphaMonomial, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &AlphaMonomial) -> Option<&LaurentScalar> {
        self.terms.get(m)
    }

    pub fn leading_term(&self) -> Option<(&AlphaMonomial, &LaurentScalar)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(AlphaMonomial::is_one)
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<LaurentScalar> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(LaurentScalar::zero))
    }

    /// `Some(d)` iff the polynomial is nonzero and every term has total
    /// degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(AlphaMonomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(AlphaMonomial::degree).max()
    }

    /// Largest exponent of `var` over all terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Zero-based indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coefficient_in(&self, var: usize, k: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == k)
                .map(|(m, c)| (m.with_exponent(var, 0), c.clone())),
        )
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    pub fn mul_monomial(&self, m: &AlphaMonomial) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_monomial(&self, m: &AlphaMonomial) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            let q = t.div(m).ok_or_else(|| PolyError::NotDivisible {
                remainder: MultiPoly::term(c.clone(), t.clone()).to_string(),
            })?;
            terms.insert(q, c.clone());
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`; fails with a witness term of the
    /// remainder when the division does not terminate with remainder zero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        let (dm, dc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((lm, lc)) = rem.leading_term() {
            let witness = || PolyError::NotDivisible {
                remainder: MultiPoly::term(lc.clone(), lm.clone()).to_string(),
            };
            let m = lm.div(dm).ok_or_else(witness)?;
            let c = match lc.exact_div(dc) {
                Ok(c) => c,
                Err(ScalarError::NotDivisible { .. }) => return Err(witness()),
                Err(e) => return Err(e.into()),
            };
            let t = MultiPoly::term(c, m);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Result<AlphaMonomial, PolyError> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?.clone();
        Ok(it.fold(first, |acc, m| acc.gcd(m)))
    }

    /// Sets `a_{var+1} = 0`; the variable count is unchanged.
    pub fn substitute_zero(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn substitute_zeros(&self, vars: &[usize]) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponent(v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True iff every term has degree at least `k` in the variables `vars`,
    /// i.e. the polynomial lies in the `k`-th power of the ideal they
    /// generate.
    pub fn in_power_of_coordinate_ideal(&self, vars: &[usize], k: u32) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().map(|&v| m.exponent(v)).sum::<u32>() >= k)
    }

    /// Greatest common divisor of all coefficients, normalized as in
    /// [`LaurentScalar::gcd`]. Zero for the zero polynomial.
    pub fn scalar_content(&self) -> LaurentScalar {
        self.terms.values().fold(LaurentScalar::zero(), |acc, c| acc.gcd(c))
    }

    /// Splits `self = unit * normalized` where `normalized` has coprime
    /// coefficients and a leading coefficient whose lowest `q`-term is a
    /// positive integer, all rational coefficients being coprime integers.
    /// Two polynomials are equal up to a nonzero element of `Q(q)` iff their
    /// normalized forms coincide.
    pub fn unit_normalize(&self) -> (LaurentScalar, MultiPoly) {
        if self.is_zero() {
            return (LaurentScalar::one(), self.clone());
        }
        let content = self.scalar_content();
        let primitive = MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.exact_div(&content).expect("content divides")))
                .collect(),
        };
        let lead_unit = primitive.leading_term().unwrap().1.lowest_term_unit().unwrap();
        let inv = lead_unit.inverse().expect("monomial scalar is a unit");
        let monic = primitive.scale(&inv);
        // Clear denominators so the rational coefficients are coprime integers.
        let (mut den, mut num) = (BigInt::one(), BigInt::zero());
        for c in monic.terms.values() {
            for (_, r) in c.terms() {
                den = den.lcm(r.denom());
                num = num.gcd(r.numer());
            }
        }
        let factor = Rational::new(den, num);
        let unit = (&content * &lead_unit).scale(&factor.recip());
        (
            unit,
            MultiPoly::from_terms(
                self.nvars,
                monic.terms.iter().map(|(m, c)| (m.clone(), c.scale(&factor))),
            ),
        )
    }

    pub fn normalized(&self) -> MultiPoly {
        self.unit_normalize().1
    }

    pub fn unit_equivalent(&self, other: &MultiPoly) -> bool {
        self.normalized() == other.normalized()
    }

    /// Evaluates at rational coordinates, keeping `q` symbolic.
    pub fn eval_alpha(&self, alpha: &[Rational]) -> LaurentScalar {
        assert_eq!(alpha.len(), self.nvars, "point has the wrong dimension");
        let mut acc = LaurentScalar::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::one();
            for (a, &e) in alpha.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= a.pow(e as i32);
                }
            }
            if !v.is_zero() {
                acc = &acc + &c.scale(&v);
            }
        }
        acc
    }

    /// Evaluates at rational coordinates and `q = q0`.
    pub fn eval(&self, alpha: &[Rational], q0: &Rational) -> Result<Rational, ScalarError> {
        self.eval_alpha(alpha).eval(q0)
    }

    /// Substitutes `q = q0` in every coefficient.
    pub fn specialize_q(&self, q0: &Rational) -> Result<MultiPoly, ScalarError> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), LaurentScalar::constant(c.eval(q0)?));
        }
        Ok(out)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())),
        )
    }

    /// Canonical expanded rendering with variables `{prefix}1..`: terms in
    /// decreasing graded-lex order.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = display_sign(c);
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&render_coeff_times(&mag, &m.render(prefix), m.is_one()));
        }
        out
    }
}

/// Sign used for display: negative iff the highest-power coefficient is.
pub(crate) fn display_sign(c: &LaurentScalar) -> (bool, LaurentScalar) {
    let neg = c.terms().next_back().is_some_and(|(_, x)| x.is_negative());
    (neg, if neg { -c } else { c.clone() })
}

/// `mag*monomial` with parentheses around multi-term coefficients.
pub(crate) fn render_coeff_times(mag: &LaurentScalar, mono: &str, mono_is_one: bool) -> String {
    let coeff = if mag.num_terms() > 1 {
        format!("({mag})")
    } else {
        mag.to_string()
    };
    if mono_is_one {
        coeff
    } else if mag.is_one() {
        mono.to_string()
    } else {
        format!("{coeff}*{mono}")
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    /// Graded-lex comparison of the term lists from the leading term down,
    /// then by coefficient rendering.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.terms().rev().map(|(m, c)| (m, c.to_string()));
        let b = other.terms().rev().map(|(m, c)| (m, c.to_string()));
        a.cmp(b)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self.render("a"))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl ExactDomain for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars)
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
