//! End-to-end analysis of a presentation and its text and JSON renderings.

use serde::{Deserialize, Serialize};

use crate::linmat::{build_matrix, maximal_minors, LinearFormMatrix, LinmatError, MinorSet};
use crate::multipoly::FactoredPoly;
use crate::relparse::{parse_poly, ParseError, Presentation};
use crate::scheme::{decompose, default_budget, SchemeComponent, SchemeDescription};

/// Everything the pipeline computes for one presentation.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub presentation: Presentation,
    pub matrix: LinearFormMatrix,
    /// `None` when there are fewer relations than generators.
    pub minors: Option<MinorSet>,
    pub scheme: SchemeDescription,
}

pub fn analyze(p: &Presentation, split_budget: Option<usize>) -> Analysis {
    let matrix = build_matrix(p);
    let budget = split_budget.unwrap_or_else(|| default_budget(p.n));
    let (minors, scheme) = match maximal_minors(&matrix) {
        Ok(ms) => {
            let scheme = decompose(&ms, &p.constraints, budget);
            (Some(ms), scheme)
        }
        Err(LinmatError::TooFewRows { rows, cols }) => (
            None,
            SchemeDescription::ambient(
                p.n,
                vec![format!(
                    "only {rows} relations for {cols} generators; D(a) is singular everywhere"
                )],
            ),
        ),
        Err(e) => unreachable!("maximal_minors only fails on shape: {e}"),
    };
    Analysis {
        presentation: p.clone(),
        matrix,
        minors,
        scheme,
    }
}

impl Analysis {
    /// One line per distinct normalized minor.
    pub fn minor_lines(&self, expanded: bool) -> Vec<String> {
        let Some(ms) = &self.minors else {
            return Vec::new();
        };
        ms.nonzero_reduced
            .iter()
            .map(|p| {
                if expanded {
                    p.render("a")
                } else {
                    FactoredPoly::of(p).expect("nonzero").render("a", false)
                }
            })
            .collect()
    }

    /// Full text report; this is also the golden-file format.
    pub fn render_text(&self, expanded: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("generators: {}\n", self.presentation.labels.join(" ")));
        out.push_str(&format!("constraints: {}\n", self.presentation.constraints));
        out.push_str("minors:\n");
        for line in self.minor_lines(expanded) {
            out.push_str(&format!("  {line}\n"));
        }
        out.push_str("scheme:\n");
        for line in self.scheme.to_string().lines() {
            out.push_str(&format!("  {line}\n"));
        }
        out
    }

    pub fn to_json(&self) -> JsonReport {
        let minors = self
            .minors
            .iter()
            .flat_map(|ms| ms.nonzero())
            .map(|m| {
                let f = FactoredPoly::of(&m.poly).expect("nonzero");
                JsonMinor {
                    rows: m.rows.iter().map(|r| r + 1).collect(),
                    factored: JsonFactored {
                        unit: f.unit.to_string(),
                        monomial: f.monomial.render("a"),
                        cofactors: f
                            .factors
                            .iter()
                            .map(|(p, k)| JsonFactor {
                                poly: p.render("a"),
                                multiplicity: *k,
                            })
                            .collect(),
                    },
                    expanded: m.poly.render("a"),
                }
            })
            .collect();
        let d = &self.scheme;
        JsonReport {
            schema: 1,
            generators: self.presentation.labels.clone(),
            constraints: self
                .presentation
                .constraints
                .declared()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            minors,
            components: d
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| JsonComponent::from_component(c, d.is_double(i)))
                .collect(),
            containments: d.containments.iter().map(|&(a, b)| [a, b]).collect(),
            warnings: d.warnings.clone(),
        }
    }
}

/// Structured report, schema version 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema: u32,
    pub generators: Vec<String>,
    pub constraints: Vec<String>,
    pub minors: Vec<JsonMinor>,
    pub components: Vec<JsonComponent>,
    /// `[contained, container]` index pairs into `components`.
    pub containments: Vec<[usize; 2]>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMinor {
    /// One-based row indices.
    pub rows: Vec<usize>,
    pub factored: JsonFactored,
    pub expanded: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFactored {
    pub unit: String,
    pub monomial: String,
    pub cofactors: Vec<JsonFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFactor {
    pub poly: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonComponent {
    /// `ambient`, `subspace` or `hypersurface`.
    pub kind: String,
    /// One-based vanishing coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<JsonFactor>>,
    pub double: bool,
}

impl JsonComponent {
    pub fn from_component(c: &SchemeComponent, double: bool) -> Self {
        let one_based = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
        match c {
            SchemeComponent::AmbientSpace => JsonComponent {
                kind: "ambient".into(),
                vars: None,
                equation: None,
                factors: None,
                double,
            },
            SchemeComponent::CoordinateSubspace { vars } => JsonComponent {
                kind: "subspace".into(),
                vars: Some(one_based(vars)),
                equation: None,
                factors: None,
                double,
            },
            SchemeComponent::Hypersurface {
                within,
                equation,
                factored,
            } => JsonComponent {
                kind: "hypersurface".into(),
                vars: Some(one_based(within)),
                equation: Some(equation.render("x")),
                factors: Some(
                    factored
                        .iter()
                        .map(|(p, k)| JsonFactor {
                            poly: p.render("x"),
                            multiplicity: *k,
                        })
                        .collect(),
                ),
                double,
            },
        }
    }

    /// Rebuilds the component in `n` variables.
    pub fn to_component(&self, n: usize) -> Result<SchemeComponent, ParseError> {
        let zero_based = |v: &Option<Vec<usize>>| v.iter().flatten().map(|x| x - 1).collect::<Vec<_>>();
        let bad = |msg: &str| ParseError::Syntax {
            line: 1,
            col: 1,
            msg: msg.to_string(),
        };
        match self.kind.as_str() {
            "ambient" => Ok(SchemeComponent::AmbientSpace),
            "subspace" => Ok(SchemeComponent::subspace(zero_based(&self.vars))),
            "hypersurface" => {
                let eq = self
                    .equation
                    .as_deref()
                    .ok_or_else(|| bad("hypersurface without equation"))?;
                let factored = self
                    .factors
                    .iter()
                    .flatten()
                    .map(|f| Ok((parse_poly(&f.poly, n)?.normalized(), f.multiplicity)))
                    .collect::<Result<Vec<_>, ParseError>>()?;
                Ok(SchemeComponent::Hypersurface {
                    within: zero_based(&self.vars),
                    equation: parse_poly(eq, n)?.normalized(),
                    factored,
                })
            }
            other => Err(bad(&format!("unknown component kind '{other}'"))),
        }
    }
}

/// Fiber output in structured form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFiber {
    pub schema: u32,
    pub alpha: Vec<String>,
    pub q: Option<String>,
    pub rank: usize,
    pub kernel: Vec<Vec<String>>,
}
