use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use super::*;
use crate::linmat::{build_matrix, maximal_minors};
use crate::relparse::{parse_poly, parse_presentation};

fn corpus(i: usize) -> &'static str {
    crate::corpus::ENTRIES[i - 1].source
}

fn p4(s: &str) -> MultiPoly {
    parse_poly(s, 4).unwrap()
}

fn mono(exps: &[u32]) -> AlphaMonomial {
    AlphaMonomial::new(exps.to_vec())
}

fn describe(src: &str) -> SchemeDescription {
    let p = parse_presentation(src).unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    decompose(&ms, &p.constraints, default_budget(p.n))
}

/// Minimal hitting sets by enumerating every subset of `0..n`.
fn hitting_oracle(supports: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let hits = |mask: u32| supports.iter().all(|s| s.iter().any(|&v| mask >> v & 1 == 1));
    let all: Vec<u32> = (0..1u32 << n).filter(|&m| hits(m)).collect();
    let mut out: Vec<Vec<usize>> = all
        .iter()
        .filter(|&&m| !all.iter().any(|&t| t != m && t & m == t))
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[test]
fn primes_examples() {
    let m = mono(&[1, 2, 0, 1]);
    assert_eq!(
        monomial_primes(&[m.clone(), mono(&[2, 1, 0, 1]), mono(&[1, 1, 0, 2])]).unwrap(),
        vec![vec![0], vec![1], vec![3]]
    );
    assert_eq!(
        monomial_primes(&[mono(&[0, 1, 0, 0]), mono(&[0, 0, 1, 0])]).unwrap(),
        vec![vec![1, 2]]
    );
    assert_eq!(
        monomial_primes(&[mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 0, 1])]).unwrap(),
        vec![vec![0, 1], vec![0, 2], vec![1, 2]]
    );
    assert_eq!(monomial_primes(&[mono(&[0, 0]), m]), Err(SchemeError::EmptyVariety));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn primes_match_oracle(n in 1usize..=6, raw in prop::collection::vec(prop::collection::vec(0u32..3, 6), 1..8)) {
        let monos: Vec<AlphaMonomial> = raw
            .iter()
            .map(|e| e[..n].to_vec())
            .filter(|e| e.iter().any(|&x| x > 0))
            .map(AlphaMonomial::new)
            .collect();
        prop_assume!(!monos.is_empty());
        let supports: Vec<Vec<usize>> = monos.iter().map(|m| m.support()).collect();
        prop_assert_eq!(monomial_primes(&monos).unwrap(), hitting_oracle(&supports, n));
    }
}

#[test]
fn strip_units_keeps_parameter_factors() {
    let p = parse_presentation(corpus(1)).unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    let s = strip_units(&ms, &p.constraints);
    assert!(s.warnings.is_empty());
    assert_eq!(s.polys.len(), 7);
    assert!(s.polys.contains(&p4("a3^2*(a2*a3 - a1*a4)").normalized()));

    // A diagonal presentation whose determinant carries q + 2.
    let src = "generators: x1 x2\nrel: (q + 2)*x1*x1\nrel: x2*x2\n";
    let p = parse_presentation(src).unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    let s = strip_units(&ms, &p.constraints);
    assert_eq!(s.polys, vec![parse_poly("(q + 2)*a1*a2", 2).unwrap()]);
    assert_eq!(s.warnings, vec!["parameter-dependent factor kept: q + 2".to_string()]);
    // At q = -2 the matrix really does drop rank everywhere.
    let q0 = crate::scalars::parse_rational("-2").unwrap();
    let one = crate::scalars::Rational::from_integer(1.into());
    let d = build_matrix(&p).at(&[one.clone(), one], &q0).unwrap();
    assert_eq!(crate::elim::rank(d, 2), 1);

    let declared =
        parse_presentation("generators: x1 x2\nconstraint: q + 2\nrel: (q + 2)*x1*x1\nrel: x2*x2\n").unwrap();
    let ms = maximal_minors(&build_matrix(&declared)).unwrap();
    assert!(strip_units(&ms, &declared.constraints).warnings.is_empty());
}

#[test]
fn common_cofactor_examples() {
    let p = parse_presentation(corpus(1)).unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    let (c, monos) = common_cofactor(&strip_units(&ms, &p.constraints).polys);
    assert_eq!(c, Some(p4("a2*a3 - a1*a4").normalized()));
    let got: BTreeSet<AlphaMonomial> = monos.into_iter().collect();
    let want: BTreeSet<AlphaMonomial> = ["a3^2", "a2*a3", "a2*a4", "a3*a4", "a1*a2", "a2^2", "a1*a3"]
        .iter()
        .map(|s| p4(s).monomial_content().unwrap())
        .collect();
    assert_eq!(got, want);

    let p = parse_presentation(corpus(3)).unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    let (c, _) = common_cofactor(&strip_units(&ms, &p.constraints).polys);
    assert_eq!(c, Some(p4("a1^2 - a2*a4").normalized()));

    assert_eq!(common_cofactor(&[p4("a1"), p4("a2")]).0, None);
}

#[test]
fn containment_examples() {
    let line = |v: &[usize]| SchemeComponent::subspace(v.iter().copied());
    let quad = |s: &str| SchemeComponent::hypersurface(&p4(s));
    assert_eq!(contains(&line(&[1, 2]), &quad("a1*a2 - a3*a4")), Containment::Yes);
    assert_eq!(contains(&line(&[0, 1]), &quad("a1^2 - a2*a3")), Containment::Yes);
    assert_eq!(contains(&line(&[0, 2]), &quad("a1^2 - a2*a4")), Containment::No);
    assert_eq!(contains(&quad("a1^2 - a2*a4"), &line(&[0, 2])), Containment::No);
    assert_eq!(contains(&line(&[0, 1, 2]), &line(&[0, 2])), Containment::Yes);
    assert_eq!(contains(&line(&[0, 2]), &line(&[0, 1, 2])), Containment::No);
    assert_eq!(
        contains(&quad("a1^2 - a2*a4"), &quad("-a1^2 + a2*a4")),
        Containment::Yes
    );
    assert_eq!(contains(&quad("a1^2 - a2*a4"), &quad("a1^2 - a2*a3")), Containment::No);
    // Rank two over Q with irrational factors: outside the supported class.
    assert_eq!(contains(&quad("a1^2 - 2*a2^2"), &quad("a1 - a3")), Containment::Unknown);
}

fn expect(i: usize, comps: &[&str], double: Option<&str>) {
    let d = describe(corpus(i));
    let got: BTreeSet<String> = d.components.iter().map(|c| c.render(4, "x")).collect();
    let want: BTreeSet<String> = comps.iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want, "presentation {i}: {d}");
    assert!(d.warnings.is_empty(), "{:?}", d.warnings);
    match double {
        None => {
            assert!(d.doubles.is_empty());
            assert!(d.containments.is_empty());
        }
        Some(line) => {
            assert_eq!(d.doubles.len(), 1);
            let k = d.doubles[0];
            assert_eq!(d.components[k].render(4, "x"), line);
            assert_eq!(d.containments.len(), 1);
            assert_eq!(d.containments[0].0, k);
        }
    }
}

#[test]
fn decompositions() {
    expect(1, &["V(x2, x3)", "V(x1*x4 - x2*x3)"], None);
    expect(2, &["V(x1*x2 - x3*x4)", "V(x2, x3)"], Some("V(x2, x3)"));
    expect(3, &["V(x1^2 - x2*x4)", "V(x1, x3)"], None);
    expect(4, &["V(x1^2 - x3*x4)", "V(x2, x3)"], None);
    expect(5, &["V(x1^2 - x2*x3)", "V(x2, x3)"], None);
    expect(6, &["V(x1^2 - x2*x3)", "V(x1, x2)"], Some("V(x1, x2)"));
}

#[test]
fn decompose_is_deterministic() {
    for i in 1..=6 {
        assert_eq!(describe(corpus(i)), describe(corpus(i)));
    }
}

#[test]
fn case_split_without_common_factor() {
    // Minors a1*a2 and a1*(a2 - a3) share only a1: V(a1) and V(a2, a3).
    let ms_polys = vec![parse_poly("a1*a2", 3).unwrap(), parse_poly("a1*a2 - a1*a3", 3).unwrap()];
    let b = solve(3, ms_polys, BTreeSet::new(), 3);
    let d = finalize(3, b.comps, &[], b.warnings);
    assert_eq!(d.render_components("x"), "V(x1); V(x2, x3)");

    // No shared factor: needs a split on a1.
    let polys = vec![parse_poly("a1*a2", 3).unwrap(), parse_poly("a1^2 - a2*a3", 3).unwrap()];
    let b = solve(3, polys.clone(), BTreeSet::new(), 3);
    let d = finalize(3, b.comps, &polys, b.warnings);
    assert_eq!(d.render_components("x"), "V(x1, x2); V(x1, x3)");

    let b = solve(3, polys.clone(), BTreeSet::new(), 0);
    assert!(b.comps.is_empty());
    assert!(b.warnings[0].starts_with("split budget exhausted"));
}

#[test]
fn hypersurface_inside_a_coordinate_subspace() {
    let polys = vec![
        parse_poly("a1*a2", 4).unwrap(),
        parse_poly("a1*a3 + a2^2 - a3*a4", 4).unwrap(),
    ];
    let b = solve(4, polys.clone(), BTreeSet::new(), 4);
    let d = finalize(4, b.comps, &polys, b.warnings);
    assert_eq!(
        d.render_components("x"),
        "V(x1, x2^2 - x3*x4); V(x2, x1 - x4); V(x2, x3)"
    );
}

#[test]
fn ambient_when_all_minors_vanish() {
    let p = parse_presentation("generators: x1 x2\nrel: x1*x2\nrel: x2*x2\n").unwrap();
    let ms = maximal_minors(&build_matrix(&p)).unwrap();
    let d = decompose(&ms, &p.constraints, 2);
    assert_eq!(d.components, vec![SchemeComponent::AmbientSpace]);
    assert_eq!(d.render_components("x"), "P^1");
}

#[test]
fn relabeling_is_equivariant() {
    let perms: [[usize; 4]; 5] = [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [0, 3, 1, 2], [1, 2, 3, 0]];
    for i in 1..=6 {
        let p = parse_presentation(corpus(i)).unwrap();
        let base = describe(corpus(i));
        for perm in &perms {
            let q = p.permuted(perm);
            let ms = maximal_minors(&build_matrix(&q)).unwrap();
            let d = decompose(&ms, &q.constraints, 4);
            let got: HashSet<SchemeComponent> = d.components.iter().cloned().collect();
            let want: HashSet<SchemeComponent> = base.components.iter().map(|c| c.permuted(perm)).collect();
            assert_eq!(got, want, "presentation {i}, permutation {perm:?}");
            assert_eq!(d.doubles.len(), base.doubles.len());
        }
    }
}
