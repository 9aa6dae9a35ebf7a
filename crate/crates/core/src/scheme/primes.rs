use std::collections::BTreeSet;

use super::SchemeError;
use crate::multipoly::AlphaMonomial;

/// Minimal primes of a monomial ideal, as the minimal variable sets meeting
/// every monomial's support. Sorted by size, then lexicographically.
pub fn monomial_primes(monomials: &[AlphaMonomial]) -> Result<Vec<Vec<usize>>, SchemeError> {
    let mut supports: Vec<Vec<usize>> = Vec::with_capacity(monomials.len());
    for m in monomials {
        let s = m.support();
        if s.is_empty() {
            return Err(SchemeError::EmptyVariety);
        }
        supports.push(s);
    }
    supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    supports.dedup();
    // A support containing another one is hit automatically.
    let mut family: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !family.iter().any(|f| f.iter().all(|v| s.contains(v))) {
            family.push(s);
        }
    }
    let mut found = BTreeSet::new();
    let mut chosen = Vec::new();
    branch(&family, &mut chosen, &mut found);
    let found: Vec<Vec<usize>> = found.into_iter().collect();
    let mut out: Vec<Vec<usize>> = found
        .iter()
        .filter(|s| {
            !found
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
        })
        .cloned()
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn branch(family: &[Vec<usize>], chosen: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
    match family.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) {
        None => {
            let mut s = chosen.clone();
            s.sort_unstable();
            found.insert(s);
        }
        Some(s) => {
            for &v in s {
                chosen.push(v);
                branch(family, chosen, found);
                chosen.pop();
            }
        }
    }
}
