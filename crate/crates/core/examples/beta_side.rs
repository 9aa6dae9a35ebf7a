//! Sampled evidence on the partner side: for points `a` on the scheme,
//! does the kernel vector `b` of `D(a)` land on the same scheme?
//! This is reported, not asserted.

use pointscheme::corpus::ENTRIES;
use pointscheme::fiber::kernel_at;
use pointscheme::relparse::parse_presentation;
use pointscheme::report::analyze;
use pointscheme::sampling::{admissible_q, lies_on, point_on};
use rand::SeedableRng;

const SAMPLES: usize = 40;

fn main() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for e in &ENTRIES {
        let p = parse_presentation(e.source).unwrap();
        let a = analyze(&p, None);
        let comps = &a.scheme.components;
        let (mut landed, mut total) = (0, 0);
        for k in 0..SAMPLES {
            let q0 = admissible_q(&mut rng, &p.constraints);
            let Some(alpha) = point_on(&mut rng, &comps[k % comps.len()], p.n, &q0) else {
                continue;
            };
            let f = kernel_at(&a.matrix, &p.constraints, &alpha, &q0).unwrap();
            for beta in &f.kernel_basis {
                total += 1;
                if comps.iter().any(|c| lies_on(c, beta, &q0)) {
                    landed += 1;
                }
            }
        }
        println!("{}: {landed}/{total} partner points lie on the scheme", e.name);
    }
}
