//! Full reports for the built-in presentations, checked against the
//! stored golden files.
//!
//! `cargo run --example corpus -- --print` writes the reports to stdout.

use pointscheme::cli::strip_golden_comments;
use pointscheme::corpus::ENTRIES;
use pointscheme::relparse::parse_presentation;
use pointscheme::report::analyze;

fn main() {
    run(std::env::args().any(|a| a == "--print"));
}

fn run(print: bool) {
    let mut matched = 0;
    for e in &ENTRIES {
        let a = analyze(&parse_presentation(e.source).unwrap(), None);
        let text = a.render_text(false);
        if print {
            println!("=== {}\n{text}", e.name);
        }
        if text == strip_golden_comments(e.golden) {
            matched += 1;
        } else {
            println!("{}: differs from its golden file", e.name);
        }
    }
    println!("{matched}/{} presentations match", ENTRIES.len());
}
