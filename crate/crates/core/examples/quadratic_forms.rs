//! Classifying and splitting quadratic forms by Gram rank.

use pointscheme::multipoly::{split_quadratic_form, QuadraticForm, QuadraticSplit};
use pointscheme::relparse::parse_poly;
use pointscheme::scalars::LaurentScalar;

fn prefix(c: &LaurentScalar) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("({c})*")
    }
}

fn main() {
    let forms = [
        "a1*a4 - a2*a3",
        "a1^2 - a2*a4",
        "a1^2 - 2*a1*a2 + a2^2",
        "a1*a2 - q^2*a3^2",
        "a1*a3 - a2*a3 + q*a1*a4 - q*a2*a4",
        "a1^2 - 2*a2^2",
    ];
    for s in forms {
        let f = parse_poly(s, 4).unwrap();
        let qf = QuadraticForm::from_poly(&f).unwrap();
        let verdict = match split_quadratic_form(&qf) {
            QuadraticSplit::Irreducible { rank } => format!("irreducible (rank {rank})"),
            QuadraticSplit::Square { scalar, factor } => format!("{}({factor})^2", prefix(&scalar)),
            QuadraticSplit::Product { scalar, left, right } => format!("{}({left})*({right})", prefix(&scalar)),
            QuadraticSplit::SplitOverClosure => "splits only over an extension".to_string(),
        };
        println!("{s:<40} rank {}  ->  {verdict}", qf.rank());
    }
}
