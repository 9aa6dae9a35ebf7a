//! Spot-check a decomposition by sampling: points on a component make
//! `D` drop rank, random points elsewhere do not.

use pointscheme::corpus::ENTRIES;
use pointscheme::elim::rank;
use pointscheme::relparse::parse_presentation;
use pointscheme::report::analyze;
use pointscheme::sampling::{admissible_q, point_off, point_on};
use rand::SeedableRng;

fn main() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for e in &ENTRIES {
        let p = parse_presentation(e.source).unwrap();
        let a = analyze(&p, None);
        let q0 = admissible_q(&mut rng, &p.constraints);
        let mut on = Vec::new();
        for c in &a.scheme.components {
            let alpha = point_on(&mut rng, c, p.n, &q0).expect("rational point");
            on.push(rank(a.matrix.at(&alpha, &q0).unwrap(), p.n));
        }
        let alpha = point_off(&mut rng, &a.scheme, &q0).expect("generic point");
        let off = rank(a.matrix.at(&alpha, &q0).unwrap(), p.n);
        println!("{}: q = {q0}, ranks on components {on:?}, off the scheme {off}", e.name);
    }
}
