//! Point scheme of a presentation file, or of the built-in ones.
//!
//! `cargo run --example decompose -- path/to/file.alg`

use pointscheme::corpus::ENTRIES;
use pointscheme::relparse::parse_presentation;
use pointscheme::report::analyze;

fn main() {
    run(std::env::args().nth(1));
}

fn run(path: Option<String>) {
    let sources: Vec<(String, String)> = match path {
        Some(path) => vec![(path.clone(), std::fs::read_to_string(&path).expect("readable file"))],
        None => ENTRIES
            .iter()
            .map(|e| (e.name.to_string(), e.source.to_string()))
            .collect(),
    };
    for (name, src) in sources {
        let p = match parse_presentation(&src) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("{name}: {e}");
                continue;
            }
        };
        let a = analyze(&p, None);
        println!("{name}: {}", a.scheme.render_components("x"));
        for &(i, j) in &a.scheme.containments {
            let c = &a.scheme.components;
            println!("  {} lies in {}", c[i].render(p.n, "x"), c[j].render(p.n, "x"));
        }
        for w in &a.scheme.warnings {
            println!("  warning: {w}");
        }
    }

    // The minors share 2*a1 + a3; the rest needs a case split on a3 and
    // leaves an embedded double point.
    let src = "generators: x1 x2 x3
rel: 2*x1*x2 - x2*x2
rel: 2*x1*x1 + x3*x2
rel: x3*x3 + 2*x1*x3
rel: 2*x3*x1
";
    let a = analyze(&parse_presentation(src).unwrap(), None);
    print!("split example:\n{}", a.scheme);
}
