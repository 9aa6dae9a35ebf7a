//! Minimal primes of monomial ideals as minimal hitting sets.

use pointscheme::multipoly::AlphaMonomial;
use pointscheme::scheme::monomial_primes;

fn show(label: &str, exps: &[&[u32]]) {
    let monos: Vec<AlphaMonomial> = exps.iter().map(|e| AlphaMonomial::new(e.to_vec())).collect();
    let names: Vec<String> = monos.iter().map(|m| m.to_string()).collect();
    match monomial_primes(&monos) {
        Ok(primes) => {
            let rendered: Vec<String> = primes
                .iter()
                .map(|s| {
                    format!(
                        "V({})",
                        s.iter().map(|v| format!("x{}", v + 1)).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect();
            println!("{label}: {} -> {}", names.join(", "), rendered.join(" u "));
        }
        Err(e) => println!("{label}: {} -> {e}", names.join(", ")),
    }
}

fn main() {
    show("after a3 = 0", &[&[1, 2, 0, 1], &[2, 1, 0, 1], &[1, 1, 0, 2]]);
    show("two squares", &[&[0, 2, 0, 0], &[0, 0, 2, 0], &[1, 1, 0, 0]]);
    show("triangle", &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    show("with a constant", &[&[0, 0], &[1, 0]]);
}
