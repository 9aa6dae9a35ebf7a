//! Decomposition of the minor variety into coordinate subspaces and
//! hypersurfaces.
//!
//! The driver follows the usual hand computation: strip the scalar factors
//! that cannot vanish, pull out a factor shared by every minor, read off
//! the monomial part combinatorially, and split on `a_v = 0` versus
//! `a_v != 0` when nothing simpler applies.

mod primes;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::linmat::MinorSet;
use crate::multipoly::{AlphaMonomial, FactoredPoly, MultiPoly};
use crate::scalars::QConstraintSet;

pub use primes::monomial_primes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("a constant monomial is present, so the variety is empty")]
    EmptyVariety,
}

/// One irreducible piece (as far as the supported factor class can tell)
/// of the point variety in `P^(n-1)`. Variable indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SchemeComponent {
    AmbientSpace,
    CoordinateSubspace {
        vars: Vec<usize>,
    },
    /// `V(within, equation)`; `within` is empty for a hypersurface of the
    /// whole space.
    Hypersurface {
        within: Vec<usize>,
        equation: MultiPoly,
        factored: Vec<(MultiPoly, u32)>,
    },
}

impl SchemeComponent {
    pub fn subspace<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        SchemeComponent::CoordinateSubspace {
            vars: vars.into_iter().collect(),
        }
    }

    pub fn hypersurface(equation: &MultiPoly) -> Self {
        let eq = equation.normalized();
        SchemeComponent::Hypersurface {
            within: Vec::new(),
            factored: vec![(eq.clone(), 1)],
            equation: eq,
        }
    }

    /// Coordinates forced to vanish on the whole component.
    pub fn zero_vars(&self) -> &[usize] {
        match self {
            SchemeComponent::AmbientSpace => &[],
            SchemeComponent::CoordinateSubspace { vars } => vars,
            SchemeComponent::Hypersurface { within, .. } => within,
        }
    }

    pub fn is_hypersurface(&self) -> bool {
        matches!(self, SchemeComponent::Hypersurface { .. })
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        match self {
            SchemeComponent::AmbientSpace => SchemeComponent::AmbientSpace,
            SchemeComponent::CoordinateSubspace { vars } => SchemeComponent::subspace(vars.iter().map(|&v| perm[v])),
            SchemeComponent::Hypersurface {
                within,
                equation,
                factored,
            } => {
                let mut w: Vec<usize> = within.iter().map(|&v| perm[v]).collect();
                w.sort_unstable();
                SchemeComponent::Hypersurface {
                    within: w,
                    equation: equation.permuted(perm).normalized(),
                    factored: factored
                        .iter()
                        .map(|(f, k)| (f.permuted(perm).normalized(), *k))
                        .collect(),
                }
            }
        }
    }

    /// `V(x2, x3)`, `V(x1*x4 - x2*x3)` or `P^3`.
    pub fn render(&self, n: usize, prefix: &str) -> String {
        match self {
            SchemeComponent::AmbientSpace => format!("P^{}", n - 1),
            SchemeComponent::CoordinateSubspace { vars } => {
                format!("V({})", vars.iter().map(|v| format!("{prefix}{}", v + 1)).join(", "))
            }
            SchemeComponent::Hypersurface { within, equation, .. } => {
                let mut parts: Vec<String> = within.iter().map(|v| format!("{prefix}{}", v + 1)).collect();
                parts.push(equation.render(prefix));
                format!("V({})", parts.join(", "))
            }
        }
    }

    fn sort_key(&self) -> (u8, usize, Vec<usize>, Option<MultiPoly>) {
        match self {
            SchemeComponent::AmbientSpace => (0, 0, Vec::new(), None),
            SchemeComponent::Hypersurface { within, equation, .. } => {
                (1, within.len(), within.clone(), Some(equation.clone()))
            }
            SchemeComponent::CoordinateSubspace { vars } => (2, vars.len(), vars.clone(), None),
        }
    }
}

/// Answer of a containment test that may fall outside the supported
/// factor class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Yes,
    No,
    Unknown,
}

impl Containment {
    pub fn is_yes(self) -> bool {
        self == Containment::Yes
    }
}

/// True when the supported factor class certifies `f` irreducible.
fn known_irreducible(f: &MultiPoly) -> bool {
    match FactoredPoly::of(f) {
        Ok(fp) => fp.complete && fp.monomial.is_one() && fp.factors.len() == 1 && fp.factors[0].1 == 1,
        Err(_) => false,
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.contains(v))
}

/// Set-theoretic containment `a ⊆ b`.
pub fn contains(a: &SchemeComponent, b: &SchemeComponent) -> Containment {
    use SchemeComponent::*;
    let yes_no = |t: bool| if t { Containment::Yes } else { Containment::No };
    match (a, b) {
        (_, AmbientSpace) => Containment::Yes,
        (AmbientSpace, _) => Containment::No,
        (CoordinateSubspace { vars: s1 }, CoordinateSubspace { vars: s2 }) => yes_no(is_subset(s2, s1)),
        (CoordinateSubspace { vars: s }, Hypersurface { within, equation, .. }) => {
            yes_no(is_subset(within, s) && equation.substitute_zeros(s).is_zero())
        }
        (Hypersurface { within, equation, .. }, CoordinateSubspace { vars: s }) => {
            if is_subset(s, within) {
                Containment::Yes
            } else if known_irreducible(equation) {
                Containment::No
            } else {
                Containment::Unknown
            }
        }
        (
            Hypersurface {
                within: w1,
                equation: f1,
                ..
            },
            Hypersurface {
                within: w2,
                equation: f2,
                ..
            },
        ) => {
            let irreducible = known_irreducible(f1);
            if !is_subset(w2, w1) {
                return if irreducible {
                    Containment::No
                } else {
                    Containment::Unknown
                };
            }
            let g = f2.substitute_zeros(w1);
            if g.is_zero() {
                return Containment::Yes;
            }
            let lead_is_unit = f1.leading_term().is_some_and(|(_, c)| c.is_ring_unit());
            match g.exact_div(f1) {
                Ok(_) => Containment::Yes,
                Err(_) if irreducible && lead_is_unit => Containment::No,
                Err(_) => Containment::Unknown,
            }
        }
    }
}

/// Decomposition result. Indices in `containments` and `doubles` refer to
/// `components`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeDescription {
    pub n: usize,
    pub components: Vec<SchemeComponent>,
    /// `(contained, container)` pairs.
    pub containments: Vec<(usize, usize)>,
    /// Components kept although contained in another one, because every
    /// minor vanishes to second order along them.
    pub doubles: Vec<usize>,
    pub warnings: Vec<String>,
}

impl SchemeDescription {
    pub fn ambient(n: usize, warnings: Vec<String>) -> Self {
        SchemeDescription {
            n,
            components: vec![SchemeComponent::AmbientSpace],
            containments: Vec::new(),
            doubles: Vec::new(),
            warnings,
        }
    }

    pub fn is_double(&self, i: usize) -> bool {
        self.doubles.contains(&i)
    }

    /// Components joined by `"; "`, e.g. `V(x1*x4 - x2*x3); V(x2, x3)`.
    pub fn render_components(&self, prefix: &str) -> String {
        self.components.iter().map(|c| c.render(self.n, prefix)).join("; ")
    }
}

impl fmt::Display for SchemeDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            write!(f, "{}", c.render(self.n, "x"))?;
            if self.is_double(i) {
                write!(f, "  [double]")?;
            }
            writeln!(f)?;
        }
        for &(a, b) in &self.containments {
            writeln!(
                f,
                "{} is contained in {}",
                self.components[a].render(self.n, "x"),
                self.components[b].render(self.n, "x")
            )?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Minors with their removable scalar factors divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedMinors {
    pub polys: Vec<MultiPoly>,
    pub warnings: Vec<String>,
}

/// Divides each nonzero minor by the largest scalar factor that the
/// constraints keep away from zero. A factor that may still vanish is kept
/// and reported.
pub fn strip_units(ms: &MinorSet, c: &QConstraintSet) -> StrippedMinors {
    let mut polys: Vec<MultiPoly> = Vec::new();
    let mut warnings = Vec::new();
    for minor in ms.nonzero() {
        let (_, rest) = c.split_unit(&minor.poly.scalar_content());
        let stripped = minor.poly.normalized().scale(&rest);
        if !rest.is_one() {
            push_unique(&mut warnings, format!("parameter-dependent factor kept: {rest}"));
        }
        if !polys.contains(&stripped) {
            polys.push(stripped);
        }
    }
    StrippedMinors { polys, warnings }
}

fn push_unique(v: &mut Vec<String>, s: String) {
    if !v.contains(&s) {
        v.push(s);
    }
}

/// Splits each polynomial into its monomial content and the content-free
/// residual.
pub fn monomial_parts(polys: &[MultiPoly]) -> Vec<(AlphaMonomial, MultiPoly)> {
    polys
        .iter()
        .map(|p| {
            let m = p.monomial_content().expect("nonzero polynomial");
            let r = p.div_monomial(&m).expect("content divides").normalized();
            (m, r)
        })
        .collect()
}

/// The factor `C` shared by all inputs when every content-free residual
/// equals `C` up to a unit, together with the monomial parts.
pub fn common_cofactor(reduced: &[MultiPoly]) -> (Option<MultiPoly>, Vec<AlphaMonomial>) {
    let parts = monomial_parts(reduced);
    let monos = parts.iter().map(|(m, _)| m.clone()).collect();
    let first = match parts.first() {
        Some((_, r)) if !r.is_constant() => r.clone(),
        _ => return (None, monos),
    };
    let common = parts.iter().all(|(_, r)| *r == first);
    (common.then_some(first), monos)
}

/// Candidate components of one branch.
#[derive(Default)]
struct Branch {
    comps: Vec<SchemeComponent>,
    warnings: Vec<String>,
}

impl Branch {
    fn merge(mut self, other: Branch) -> Branch {
        self.comps.extend(other.comps);
        for w in other.warnings {
            push_unique(&mut self.warnings, w);
        }
        self
    }
}

fn subspace_or_empty(n: usize, zero: &BTreeSet<usize>, extra: &[usize]) -> Option<SchemeComponent> {
    let vars: BTreeSet<usize> = zero.iter().chain(extra).copied().collect();
    if vars.is_empty() {
        Some(SchemeComponent::AmbientSpace)
    } else if vars.len() < n {
        Some(SchemeComponent::subspace(vars))
    } else {
        None
    }
}

/// Components of `V(zero, c)` for a content-free `c`.
fn factor_components(n: usize, c: &MultiPoly, zero: &BTreeSet<usize>, out: &mut Branch) {
    let fp = FactoredPoly::of(c).expect("nonzero cofactor");
    if !fp.complete {
        push_unique(
            &mut out.warnings,
            format!(
                "factor {} lies outside the supported class and was kept unsplit",
                c.render("x")
            ),
        );
    }
    for (f, k) in &fp.factors {
        let f = f.normalized();
        if f.num_terms() == 1 && f.total_degree() == Some(1) {
            out.comps.extend(subspace_or_empty(n, zero, &f.variables()));
        } else {
            out.comps.push(SchemeComponent::Hypersurface {
                within: zero.iter().copied().collect(),
                equation: f.clone(),
                factored: vec![(f, *k)],
            });
        }
    }
}

/// A factor of the first residual that divides every residual.
fn shared_factor(parts: &[(AlphaMonomial, MultiPoly)]) -> Option<MultiPoly> {
    let fp = FactoredPoly::of(&parts.first()?.1).ok()?;
    let mut g = MultiPoly::one(parts[0].1.nvars());
    for (f, _) in &fp.factors {
        if f.is_constant() {
            continue;
        }
        if parts.iter().all(|(_, r)| r.exact_div(f).is_ok()) {
            g = &g * f;
        }
    }
    (!g.is_constant()).then_some(g)
}

fn solve(n: usize, polys: Vec<MultiPoly>, zero: BTreeSet<usize>, budget: usize) -> Branch {
    let mut polys: Vec<MultiPoly> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.normalized())
        .collect();
    polys.sort();
    polys.dedup();
    let mut out = Branch::default();
    if polys.is_empty() {
        out.comps.extend(subspace_or_empty(n, &zero, &[]));
        return out;
    }
    if polys.iter().any(MultiPoly::is_constant) {
        return out;
    }
    let parts = monomial_parts(&polys);
    let monos: Vec<AlphaMonomial> = parts.iter().map(|(m, _)| m.clone()).collect();
    let push_primes = |out: &mut Branch| {
        if let Ok(primes) = monomial_primes(&monos) {
            for s in primes {
                out.comps.extend(subspace_or_empty(n, &zero, &s));
            }
        }
    };
    if parts.iter().all(|(_, r)| r.is_constant()) {
        push_primes(&mut out);
        return out;
    }
    if let (Some(c), _) = common_cofactor(&polys) {
        factor_components(n, &c, &zero, &mut out);
        push_primes(&mut out);
        return out;
    }
    if let Some(g) = shared_factor(&parts) {
        factor_components(n, &g, &zero, &mut out);
        let quotients = polys
            .iter()
            .map(|p| p.exact_div(&g).expect("shared factor divides"))
            .collect();
        return out.merge(solve(n, quotients, zero, budget));
    }
    let split = (0..n)
        .map(|v| (v, monos.iter().filter(|m| m.exponent(v) > 0).count()))
        .filter(|&(_, k)| k > 0)
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let v = match split {
        Some((v, _)) if budget > 0 => v,
        _ => {
            let eqs = polys.iter().map(|p| p.render("x")).join(", ");
            let place = if zero.is_empty() {
                String::new()
            } else {
                format!(" on {}", SchemeComponent::subspace(zero.iter().copied()).render(n, "x"))
            };
            out.warnings
                .push(format!("split budget exhausted; unresolved equations{place}: {eqs}"));
            return out;
        }
    };
    let zero_polys: Vec<MultiPoly> = polys.iter().map(|p| p.substitute_zero(v)).collect();
    let mut zero_set = zero.clone();
    zero_set.insert(v);
    let nonzero_polys: Vec<MultiPoly> = polys
        .iter()
        .zip(&monos)
        .map(|(p, m)| {
            let d = AlphaMonomial::var(n, v);
            let mut q = p.clone();
            for _ in 0..m.exponent(v) {
                q = q.div_monomial(&d).expect("power of the split variable divides");
            }
            q
        })
        .collect();
    let (a, b) = rayon::join(
        || solve(n, zero_polys, zero_set, budget - 1),
        || solve(n, nonzero_polys, zero, budget - 1),
    );
    a.merge(b)
}

/// Full decomposition of the variety cut out by the minors.
pub fn decompose(ms: &MinorSet, c: &QConstraintSet, split_budget: usize) -> SchemeDescription {
    let n = ms.matrix.cols();
    let stripped = strip_units(ms, c);
    let top: Vec<MultiPoly> = stripped.polys.iter().map(MultiPoly::normalized).collect();
    if top.is_empty() {
        return SchemeDescription::ambient(n, stripped.warnings);
    }
    let branch = solve(n, top.clone(), BTreeSet::new(), split_budget);
    let mut warnings = stripped.warnings;
    for w in branch.warnings {
        push_unique(&mut warnings, w);
    }
    finalize(n, branch.comps, &top, warnings)
}

/// Every top-level minor lies in the square of the ideal of `vars`.
fn vanishes_doubly(top: &[MultiPoly], vars: &[usize]) -> bool {
    top.iter().all(|p| p.in_power_of_coordinate_ideal(vars, 2))
}

fn finalize(n: usize, comps: Vec<SchemeComponent>, top: &[MultiPoly], mut warnings: Vec<String>) -> SchemeDescription {
    let mut comps: Vec<SchemeComponent> = comps.into_iter().unique().collect();
    comps.sort_by_key(SchemeComponent::sort_key);
    let k = comps.len();
    let mut inside = vec![vec![Containment::No; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                inside[i][j] = contains(&comps[i], &comps[j]);
            }
        }
    }
    let mut keep = vec![true; k];
    let mut double = vec![false; k];
    for i in 0..k {
        let maximal = (0..k).all(|j| !inside[i][j].is_yes() || inside[j][i].is_yes() && i < j);
        if maximal {
            continue;
        }
        match &comps[i] {
            SchemeComponent::CoordinateSubspace { vars } if vanishes_doubly(top, vars) => double[i] = true,
            _ => keep[i] = false,
        }
    }
    for i in 0..k {
        for j in 0..k {
            if keep[i] && keep[j] && inside[i][j] == Containment::Unknown {
                push_unique(
                    &mut warnings,
                    format!(
                        "could not decide whether {} is contained in {}",
                        comps[i].render(n, "x"),
                        comps[j].render(n, "x")
                    ),
                );
            }
        }
    }
    let index: Vec<usize> = (0..k).filter(|&i| keep[i]).collect();
    let mut containments = Vec::new();
    let mut doubles = Vec::new();
    for (a, &i) in index.iter().enumerate() {
        if double[i] {
            doubles.push(a);
        }
        for (b, &j) in index.iter().enumerate() {
            if i != j && inside[i][j].is_yes() {
                containments.push((a, b));
            }
        }
    }
    SchemeDescription {
        n,
        components: index.iter().map(|&i| comps[i].clone()).collect(),
        containments,
        doubles,
        warnings,
    }
}

/// Default case-split depth: one level per variable.
pub fn default_budget(n: usize) -> usize {
    n
}

#[cfg(test)]
mod tests;
