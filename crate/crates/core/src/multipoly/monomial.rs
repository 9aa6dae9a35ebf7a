use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in `a1..an`.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent of `a1`, then `a2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlphaMonomial {
    exps: Vec<u32>,
}

impl AlphaMonomial {
    pub fn one(nvars: usize) -> Self {
        AlphaMonomial { exps: vec![0; nvars] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        AlphaMonomial { exps }
    }

    /// The single variable `a_{var+1}` (zero-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Zero-based indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        AlphaMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| AlphaMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        AlphaMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub(crate) fn with_exponent(&self, var: usize, e: u32) -> Self {
        let mut m = self.clone();
        m.exps[var] = e;
        m
    }

    /// Moves the exponent of variable `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        AlphaMonomial { exps }
    }

    /// Renders as `a1^2*a3`, or `1` for the empty monomial.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("{prefix}{}", i + 1),
                _ => format!("{prefix}{}^{e}", i + 1),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for AlphaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for AlphaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AlphaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}
