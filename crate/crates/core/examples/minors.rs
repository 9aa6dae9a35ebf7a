//! Maximal minors of `D`, their factorizations, and a substitution.

use pointscheme::corpus::ENTRIES;
use pointscheme::linmat::{build_matrix, maximal_minors};
use pointscheme::multipoly::FactoredPoly;
use pointscheme::relparse::parse_presentation;

fn main() {
    let p = parse_presentation(ENTRIES[0].source).unwrap();
    let d = build_matrix(&p);
    let ms = maximal_minors(&d).unwrap();
    println!(
        "{} row subsets, {} nonzero minors, {} distinct up to units",
        ms.minors.len(),
        ms.nonzero().count(),
        ms.nonzero_reduced.len()
    );
    for m in ms.nonzero() {
        let rows: Vec<String> = m.rows.iter().map(|r| (r + 1).to_string()).collect();
        let f = FactoredPoly::of(&m.poly).unwrap();
        println!("rows {{{}}}: {}", rows.join(","), f.render("a", true));
    }

    // Setting a3 = 0 in D and recomputing leaves three monomials.
    let ms3 = maximal_minors(&d.substitute_zero(2)).unwrap();
    println!("\nwith a3 = 0:");
    for p in &ms3.nonzero_reduced {
        println!("  {p}");
    }
}
