//! The `pointscheme` command line.
//!
//! Exit codes: 0 success, 1 parse or I/O error, 2 warnings under
//! `--strict`, 3 corpus mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::corpus::{CorpusEntry, ENTRIES};
use crate::fiber::{kernel_at, kernel_at_generic_q, render_vector};
use crate::relparse::{parse_presentation, Presentation};
use crate::report::{analyze, JsonFiber};
use crate::scalars::{parse_rational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_WARNINGS: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pointscheme", version, about = "Point schemes of quadratic algebras")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print polynomials fully expanded instead of factored.
    #[arg(long, global = true)]
    expanded: bool,
    /// Maximum depth of case splits (default: number of generators).
    #[arg(long, global = true, value_name = "K")]
    split_budget: Option<usize>,
    /// Exit with status 2 if the pipeline reports warnings.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the distinct nonzero maximal minors of D.
    Minors { file: PathBuf },
    /// Decompose the point scheme into components.
    Scheme { file: PathBuf },
    /// Solve D(a) b = 0 at a point a.
    Fiber {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. 1,0,0,0 or 1/2,0,3,1.
        #[arg(long, value_name = "A1,..,AN", allow_hyphen_values = true)]
        alpha: String,
        /// Value of q; kept symbolic when omitted.
        #[arg(long, value_name = "Q0", allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Check the built-in presentations against their stored reports.
    Corpus,
}

struct Failure(i32, String);

fn input_error(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, msg.to_string())
}

/// Runs the command line with explicit output streams; returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load(path: &PathBuf) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(input_error)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let strict_code = |warnings: &[String]| {
        if cli.strict && !warnings.is_empty() {
            EXIT_WARNINGS
        } else {
            EXIT_OK
        }
    };
    match &cli.command {
        Command::Minors { file } => {
            let a = analyze(&load(file)?, cli.split_budget);
            if cli.json {
                emit(out, &to_json(&a.to_json()))?;
            } else {
                let mut text = String::new();
                for line in a.minor_lines(cli.expanded) {
                    text.push_str(&line);
                    text.push('\n');
                }
                emit(out, &text)?;
            }
            Ok(strict_code(&a.scheme.warnings))
        }
        Command::Scheme { file } => {
            let a = analyze(&load(file)?, cli.split_budget);
            if cli.json {
                emit(out, &to_json(&a.to_json()))?;
            } else {
                emit(out, &a.scheme.to_string())?;
            }
            Ok(strict_code(&a.scheme.warnings))
        }
        Command::Fiber { file, alpha, q } => {
            let p = load(file)?;
            let alpha = parse_point(alpha)?;
            let q0 = q
                .as_deref()
                .map(|s| parse_rational(s.trim()).ok_or_else(|| input_error(format!("invalid value for --q: '{s}'"))))
                .transpose()?;
            fiber(cli, out, &p, &alpha, q0.as_ref())
        }
        Command::Corpus => Ok(run_corpus(&ENTRIES, cli.json, cli.strict, cli.split_budget, out)),
    }
}

fn parse_point(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',')
        .map(|x| {
            parse_rational(x.trim()).ok_or_else(|| input_error(format!("invalid coordinate '{}' in --alpha", x.trim())))
        })
        .collect()
}

fn fiber(
    cli: &Cli,
    out: &mut dyn Write,
    p: &Presentation,
    alpha: &[Rational],
    q0: Option<&Rational>,
) -> Result<i32, Failure> {
    let d = crate::linmat::build_matrix(p);
    let (rank, kernel): (usize, Vec<Vec<String>>) = match q0 {
        Some(q0) => {
            let f = kernel_at(&d, &p.constraints, alpha, q0).map_err(input_error)?;
            let k = f
                .kernel_basis
                .iter()
                .map(|v| v.iter().map(|x| x.to_string()).collect())
                .collect();
            (f.rank, k)
        }
        None => {
            let f = kernel_at_generic_q(&d, alpha).map_err(input_error)?;
            let k = f
                .kernel_basis
                .iter()
                .map(|v| v.iter().map(|x| x.to_string()).collect())
                .collect();
            (f.rank, k)
        }
    };
    if cli.json {
        let j = JsonFiber {
            schema: 1,
            alpha: alpha.iter().map(|x| x.to_string()).collect(),
            q: q0.map(|x| x.to_string()),
            rank,
            kernel,
        };
        emit(out, &to_json(&j))?;
        return Ok(EXIT_OK);
    }
    let mut text = format!("alpha = {}\n", render_vector(alpha));
    text.push_str(&format!(
        "q = {}\n",
        q0.map_or("q (symbolic)".to_string(), |x| x.to_string())
    ));
    text.push_str(&format!("rank = {rank}\n"));
    match kernel.as_slice() {
        [] => text.push_str("kernel is trivial: the point is not on the scheme\n"),
        [v] => text.push_str(&format!("beta = {}\n", render_vector(v))),
        many => {
            text.push_str(&format!("kernel has dimension {}:\n", many.len()));
            for v in many {
                text.push_str(&format!("  {}\n", render_vector(v)));
            }
        }
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// Golden files may carry `#` comment lines; they are not compared.
pub fn strip_golden_comments(golden: &str) -> String {
    golden
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Compares each entry's text report with its golden file and prints a
/// summary; returns the exit status.
pub fn run_corpus(
    entries: &[CorpusEntry],
    json: bool,
    strict: bool,
    split_budget: Option<usize>,
    out: &mut dyn Write,
) -> i32 {
    let mut matched = 0;
    let mut text = String::new();
    let mut results = Vec::new();
    let mut warnings = false;
    for e in entries {
        let actual = match parse_presentation(e.source) {
            Ok(p) => {
                let a = analyze(&p, split_budget);
                warnings |= !a.scheme.warnings.is_empty();
                a.render_text(false)
            }
            Err(err) => format!("parse error: {err}\n"),
        };
        let expected = strip_golden_comments(e.golden);
        let ok = actual == expected;
        if ok {
            matched += 1;
            text.push_str(&format!("{}: ok\n", e.name));
        } else {
            text.push_str(&format!("{}: MISMATCH\n", e.name));
            for (i, (x, y)) in expected.lines().zip(actual.lines()).enumerate() {
                if x != y {
                    text.push_str(&format!("  line {}: expected '{x}', got '{y}'\n", i + 1));
                }
            }
            let (ne, na) = (expected.lines().count(), actual.lines().count());
            if ne != na {
                text.push_str(&format!("  expected {ne} lines, got {na}\n"));
            }
        }
        results.push(serde_json::json!({ "name": e.name, "matched": ok }));
    }
    let total = entries.len();
    let body = if json {
        to_json(&serde_json::json!({ "schema": 1, "matched": matched, "total": total, "results": results }))
    } else {
        text + &format!("{matched}/{total} presentations match\n")
    };
    if out.write_all(body.as_bytes()).is_err() {
        return EXIT_INPUT;
    }
    if matched != total {
        EXIT_MISMATCH
    } else if strict && warnings {
        EXIT_WARNINGS
    } else {
        EXIT_OK
    }
}
