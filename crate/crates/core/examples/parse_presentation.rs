//! Parse a presentation, inspect its relations and the matrix `D`.

use pointscheme::linmat::{build_matrix, multilinearize};
use pointscheme::relparse::{parse_presentation, render_presentation};

const SOURCE: &str = "
# a skew polynomial ring in three variables
generators: x1 x2 x3
constraint: q - 2
rel: x2*x1 - q*x1*x2
rel: x3*x1 - q^-1*x1*x3
rel: x3*x2 - x2*x3 + (q - 1)*x1^2
";

fn main() {
    let p = parse_presentation(SOURCE).expect("valid presentation");
    println!("{} generators, {} relations", p.n, p.m());
    println!("constraints: {}", p.constraints);
    for (k, g) in p.relations.iter().enumerate() {
        let b = multilinearize(g, p.n);
        println!("g{} = {}    g(a, b) has a1*b2 coefficient {}", k + 1, g, b.coeff(0, 1));
    }
    println!("\nD =\n{}", build_matrix(&p).render("a"));
    println!("\nround trip:\n{}", render_presentation(&p));

    match parse_presentation("generators: x1 x2\nrel: x1*x2*x1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
