//! Partner points `b` with `D(a) b = 0`.

use pointscheme::corpus::ENTRIES;
use pointscheme::fiber::{kernel_at, kernel_at_generic_q, kernel_on_subspace, render_vector};
use pointscheme::linmat::{build_matrix, multilinearize};
use pointscheme::relparse::parse_presentation;
use pointscheme::scalars::{parse_rational, Rational};

fn point(s: &str) -> Vec<Rational> {
    s.split(',').map(|x| parse_rational(x).unwrap()).collect()
}

fn main() {
    let p = parse_presentation(ENTRIES[0].source).unwrap();
    let d = build_matrix(&p);
    let q0 = parse_rational("2").unwrap();

    for a in ["1,0,0,0", "1,0,0,3", "2,1,3,3/2", "1,1,1,2"] {
        let alpha = point(a);
        let f = kernel_at(&d, &p.constraints, &alpha, &q0).unwrap();
        let kernel: Vec<String> = f.kernel_basis.iter().map(|v| render_vector(v)).collect();
        println!(
            "a = {}  rank {}  kernel [{}]",
            render_vector(&alpha),
            f.rank,
            kernel.join(", ")
        );
        for beta in &f.kernel_basis {
            let ok = p.relations.iter().all(|g| {
                multilinearize(g, p.n).eval_rational(&alpha, beta, &q0).unwrap() == Rational::from_integer(0.into())
            });
            assert!(ok, "every relation vanishes at (a, b)");
        }
    }

    let g = kernel_at_generic_q(&d, &point("1,0,0,3")).unwrap();
    println!(
        "generic q at (1, 0, 0, 3): rank {}, b = {}",
        g.rank,
        render_vector(g.unique().unwrap())
    );

    let s = kernel_on_subspace(&d, &[1, 2]);
    println!(
        "on V(x2, x3): rank {}, b = {}",
        s.rank,
        render_vector(&s.kernel_basis[0])
    );
}
