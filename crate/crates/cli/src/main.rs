//! `okubo`: constructors, verification suites and classification reports.

mod algebras;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use okubo_core::classify::{
    classify_idempotent, classify_order3_char3, classify_order3_charnot3_with, g_image, DEFAULT_HEIGHT,
};
use okubo_core::compalg::{format_algebra, parse_element, zorn, Algebra};
use okubo_core::exactfield::{parse_field, Field};
use okubo_core::liealg::{chevalley_basis, format_chevalley};
use okubo_core::maps::{format_map, parse_map, Automorphism};
use okubo_core::Error;

#[derive(Parser)]
#[command(name = "okubo", version, about = "Exact computations with composition and Okubo algebras")]
struct Cli {
    /// Field, used when a command omits its positional field argument.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Print a flat JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized identity testing and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Coordinate height bound for searches over infinite fields.
    #[arg(long, global = true, default_value_t = DEFAULT_HEIGHT)]
    max_height: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table of a named algebra.
    Table {
        #[arg(value_name = "[FIELD] ALGEBRA", num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Run a registered verification suite.
    Verify {
        suite: String,
        field: Option<String>,
    },
    /// List the registered suites.
    Suites,
    /// Classify an automorphism (auto) or an idempotent (idem) read from a file.
    Classify {
        mode: Mode,
        #[arg(value_name = "[FIELD] FILE", num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Values of g(x) = n(x, x*x) on the basis and the F^3-dimension of their span.
    Gmap {
        #[arg(value_name = "[FIELD] ALGEBRA", num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Print a named algebra in the algebra file format.
    DumpAlgebra {
        #[arg(value_name = "[FIELD] ALGEBRA", num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Print a named automorphism of zorn(F) in the map file format.
    DumpMap {
        #[arg(value_name = "[FIELD] MAP", num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Print the Chevalley basis of Der(zorn(F)).
    DumpChevalley { field: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Idem,
}

enum Failure {
    /// Exit 1: a verification or validation failure.
    Check(String),
    /// Exit 2: bad input.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotAutomorphism(_)
            | Error::NotOrder3
            | Error::NotIdempotent
            | Error::ParaCayleyIdempotent
            | Error::HasParaUnit
            | Error::Inconsistent(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Output of one command: text lines and the same data as key/value pairs.
struct Output {
    text: String,
    pairs: Vec<(String, Value)>,
}

impl Output {
    fn new() -> Output {
        Output { text: String::new(), pairs: vec![] }
    }

    fn line(&mut self, key: &str, value: impl ToString) {
        let v = value.to_string();
        self.text.push_str(&format!("{key}: {v}\n"));
        self.pairs.push((key.to_string(), Value::String(v)));
    }

    fn print(&self, json: bool) {
        if json {
            let map: Map<String, Value> = self.pairs.iter().cloned().collect();
            println!("{}", Value::Object(map));
        } else {
            print!("{}", self.text);
        }
    }
}

fn field_arg(cli: &Cli, positional: Option<&str>) -> Result<Field, Failure> {
    let spec = positional
        .or(cli.field.as_deref())
        .ok_or_else(|| Failure::Input("no field given; pass it positionally or with --field".into()))?;
    parse_field(spec).map_err(|e| Failure::Input(e.to_string()))
}

/// Resolves `[FIELD] X` against `--field`.
fn field_and<'a>(cli: &Cli, args: &'a [String]) -> Result<(Field, &'a str), Failure> {
    match args {
        [f, x] => Ok((field_arg(cli, Some(f))?, x)),
        [x] => Ok((field_arg(cli, None)?, x)),
        _ => Err(Failure::Input("expected [FIELD] and one more argument".into())),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn cmd_table(a: &Algebra) -> Output {
    let mut labels: Vec<String> = a.names().to_vec();
    let mut elems: Vec<Vec<_>> = (0..a.dim()).map(|i| a.basis(i)).collect();
    let special = a.unit().or(a.tag().known_idempotent()).cloned();
    if let Some(e) = &special {
        if !elems.contains(e) {
            labels.insert(0, "1".into());
            elems.insert(0, e.clone());
        }
    }
    let text = |x: &Vec<_>| if Some(x) == special.as_ref() { "1".to_string() } else { a.elem_text(x) };
    let mut grid = vec![std::iter::once("*".to_string()).chain(labels.iter().cloned()).collect::<Vec<_>>()];
    let mut out = Output::new();
    for (i, x) in elems.iter().enumerate() {
        let mut row = vec![labels[i].clone()];
        for (j, y) in elems.iter().enumerate() {
            let p = text(&a.mul(x, y));
            out.pairs.push((format!("{}*{}", labels[i], labels[j]), Value::String(p.clone())));
            row.push(p);
        }
        grid.push(row);
    }
    let width = grid.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    for row in grid {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.text.push_str(cells.join(" ").trim_end());
        out.text.push('\n');
    }
    out
}

fn cmd_verify(cli: &Cli, suite: &str, field: Option<&str>) -> Result<Output, Failure> {
    let s = suites::find(suite).ok_or_else(|| {
        let ids: Vec<&str> = suites::SUITES.iter().map(|s| s.id).collect();
        Failure::Input(format!("unknown suite '{suite}'; registered: {}", ids.join(", ")))
    })?;
    let ctx = suites::Ctx { field: field_arg(cli, field)?, seed: cli.seed, max_height: cli.max_height };
    let t0 = Instant::now();
    let checks = (s.run)(&ctx)?;
    eprintln!("{}: {} ms", s.id, t0.elapsed().as_millis());
    let mut out = Output::new();
    out.line("suite", s.id);
    out.line("field", ctx.field);
    for c in &checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        out.text.push_str(format!("{} {verdict} {}", c.id, c.witness).trim_end());
        out.text.push('\n');
        out.pairs.push((c.id.clone(), Value::String(format!("{verdict} {}", c.witness).trim_end().to_string())));
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    out.line("passed", format!("{passed}/{}", checks.len()));
    if passed != checks.len() {
        out.print(cli.json);
        return Err(Failure::Check(format!("{} of {} checks failed", checks.len() - passed, checks.len())));
    }
    Ok(out)
}

fn cmd_classify(cli: &Cli, mode: Mode, f: Field, text: &str) -> Result<Output, Failure> {
    let (a, rest) = algebras::algebra_header(f, text)?;
    let mut out = Output::new();
    match mode {
        Mode::Auto => {
            let m = parse_map(&rest)?;
            if m.field() != f {
                return Err(Failure::Input(format!("map is over {}, not {f}", m.field())));
            }
            let tau = Automorphism::new(&a, m)?;
            let class = if f.characteristic() == 3 {
                classify_order3_char3(&a, &tau)?
            } else {
                classify_order3_charnot3_with(&a, &tau, cli.max_height)?
            };
            for (k, v) in class.report(&a).lines {
                out.line(&k, v);
            }
        }
        Mode::Idem => {
            let body = rest.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect::<String>();
            let e = parse_element(f, &body)?;
            if e.len() != a.dim() {
                return Err(Failure::Input(format!("element has {} coordinates, expected {}", e.len(), a.dim())));
            }
            out.line("element", a.elem_text(&e));
            for (k, v) in classify_idempotent(&a, &e)?.report().lines {
                out.line(&k, v);
            }
        }
    }
    Ok(out)
}

fn cmd_gmap(a: &Algebra) -> Result<Output, Failure> {
    let g = g_image(a)?;
    let mut out = Output::new();
    for (name, v) in a.names().iter().zip(&g.values) {
        out.line(&format!("g({name})"), v);
    }
    out.line("dimension", g.dimension.map_or("unknown".to_string(), |d| d.to_string()));
    Ok(out)
}

fn text_output(key: &str, f: Field, name: &str, text: String) -> Output {
    let mut out = Output::new();
    out.pairs.push(("field".into(), Value::String(f.to_string())));
    out.pairs.push(("name".into(), Value::String(name.to_string())));
    out.pairs.push((key.into(), Value::String(text.clone())));
    out.text = text;
    out
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Table { args } => {
            let (f, name) = field_and(cli, args)?;
            Ok(cmd_table(&algebras::algebra(f, name)?))
        }
        Command::Verify { suite, field } => cmd_verify(cli, suite, field.as_deref()),
        Command::Suites => {
            let mut out = Output::new();
            for s in suites::SUITES {
                out.line(s.id, s.about);
            }
            Ok(out)
        }
        Command::Classify { mode, args } => {
            let (f, path) = field_and(cli, args)?;
            cmd_classify(cli, *mode, f, &read_file(path)?)
        }
        Command::Gmap { args } => {
            let (f, name) = field_and(cli, args)?;
            cmd_gmap(&algebras::algebra(f, name)?)
        }
        Command::DumpAlgebra { args } => {
            let (f, name) = field_and(cli, args)?;
            Ok(text_output("algebra", f, name, format_algebra(&algebras::algebra(f, name)?)))
        }
        Command::DumpMap { args } => {
            let (f, name) = field_and(cli, args)?;
            Ok(text_output("map", f, name, format_map(algebras::zorn_map(f, name)?.matrix())))
        }
        Command::DumpChevalley { field } => {
            let f = field_arg(cli, field.as_deref())?;
            Ok(text_output("chevalley", f, "zorn", format_chevalley(&chevalley_basis(&zorn(f))?)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            out.print(cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
