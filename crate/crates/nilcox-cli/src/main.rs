//! `nilcox`: graded dimensions, verification suites, coinvariant slices and
//! the alcove picture from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on a
//! capacity or configuration error.

mod alcove;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilcox::algebra::{conjecture_a_dims, nc_graded_dims, nc_table, Engine, GradedDims, DEFAULT_WORD_BUDGET};
use nilcox::coinv::{basis_x, coinvariant_slice, graded_count};
use nilcox::exactnum::CyclotomicField;
use nilcox::poly::Monomial;
use nilcox::verify::{
    braid_suite, frobenius_suite, gamma_suite, identity_suite, roundabout_suite, trace_pattern_suite, xi_suite,
    SuiteReport, DEFAULT_SEED,
};
use nilcox::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nilcox", version, about = "Exotic nilCoxeter algebras at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of NC(m,m,n), or of the roundabout-only quotient.
    Dims(DimsArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Draw the alcoves of length at most 3m as SVG (n = 3).
    AlcoveSvg(AlcoveArgs),
    /// Degree-d slice of the coinvariant ideal: standard monomials.
    Slice(SliceArgs),
    /// The monomial basis of the coinvariant algebra for a variable order.
    Basis(BasisArgs),
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Directory for cached intermediate results.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Cap on word evaluations.
    #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
    budget: usize,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    common: Common,
    /// Quotient by the nil-quadratic, braid and roundabout relations only (n = 3).
    #[arg(long = "conjectureA", alias = "conjecture-a")]
    conjecture_a: bool,
    /// Print degrees up to this one only.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random cases for the randomized suites.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Maximal word length for the braid suite.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct AlcoveArgs {
    #[command(flatten)]
    common: Common,
    /// Write the SVG here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SliceArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    degree: usize,
}

#[derive(Args)]
struct BasisArgs {
    #[command(flatten)]
    common: Common,
    /// Variable order as 1-based indices, e.g. `3,2,1`.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    /// Print this degree only.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Roundabout,
    Frobenius,
    Xi,
    Gamma,
    Braid,
    Identities,
    Pattern,
}

enum Failure {
    Checks,
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn config(msg: impl Into<String>) -> Failure {
    Failure::Config(msg.into())
}

fn validate(c: &Common, allowed: &[Output]) -> Outcome {
    if c.n < 2 || c.m < 2 {
        return Err(config(format!("need n >= 2 and m >= 2, got n = {}, m = {}", c.n, c.m)));
    }
    if c.budget == 0 {
        return Err(config("budget must be positive"));
    }
    if !allowed.contains(&c.output) {
        return Err(config("this command does not support the requested output format"));
    }
    Ok(())
}

fn emit(text: &str) -> Outcome {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| config(e.to_string()))
}

/// Reads a cached JSON value, or computes and stores it with an atomic rename.
fn cached(dir: Option<&Path>, name: &str, compute: impl FnOnce() -> Result<Value, Failure>) -> Result<Value, Failure> {
    let Some(dir) = dir else { return compute() };
    let path = dir.join(name);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(v) = serde_json::from_str(&text) {
            return Ok(v);
        }
    }
    let v = compute()?;
    let io = |e: std::io::Error| config(format!("cache {}: {e}", path.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(v.to_string().as_bytes()).map_err(io)?;
    tmp.persist(&path).map_err(|e| io(e.error))?;
    Ok(v)
}

fn dims_value(args: &DimsArgs) -> Result<Value, Failure> {
    let c = &args.common;
    let field = CyclotomicField::new(c.n, c.m);
    if args.conjecture_a {
        if c.n != 3 {
            return Err(config("--conjectureA needs n = 3"));
        }
        let g = conjecture_a_dims(field, c.m, c.budget)?;
        return Ok(json!({ "n": 3, "m": c.m, "mode": "conjectureA", "dims": g.dims }));
    }
    let engine = Engine::new(field, c.n, c.m)?;
    if c.n <= 3 {
        let rows = nc_table(&engine, engine.top(), c.budget)?;
        let dims: Vec<usize> = rows.iter().map(|r| r.dim).collect();
        let rel: Vec<usize> = rows.iter().map(|r| r.new_relations).collect();
        Ok(json!({ "n": c.n, "m": c.m, "mode": "nc", "dims": dims, "new_relations": rel }))
    } else {
        let g = nc_graded_dims(&engine)?;
        Ok(json!({ "n": c.n, "m": c.m, "mode": "nc", "dims": g.dims }))
    }
}

fn usize_list(v: &Value, key: &str) -> Option<Vec<usize>> {
    v.get(key)?.as_array()?.iter().map(|x| x.as_u64().map(|k| k as usize)).collect()
}

fn cmd_dims(args: &DimsArgs) -> Outcome {
    let c = &args.common;
    validate(c, &[Output::Text, Output::Json, Output::Csv])?;
    let mode = if args.conjecture_a { "conjectureA" } else { "nc" };
    let name = format!("dims_{mode}_n{}_m{}_b{}.json", c.n, c.m, c.budget);
    let v = cached(c.cache_dir.as_deref(), &name, || dims_value(args))?;
    let mut dims = usize_list(&v, "dims").ok_or_else(|| config("malformed dimension data"))?;
    let mut rel = usize_list(&v, "new_relations");
    if let Some(d) = args.degree {
        dims.truncate(d + 1);
        if let Some(r) = rel.as_mut() {
            r.truncate(d + 1);
        }
    }
    let g = GradedDims { n: c.n, m: c.m, dims };
    let text = match c.output {
        Output::Json => {
            let mut out = g.to_json();
            out["mode"] = json!(mode);
            out["total"] = json!(g.total());
            out["palindromic"] = json!(g.is_palindromic());
            if let Some(r) = &rel {
                let rows: Vec<Value> = g
                    .dims
                    .iter()
                    .zip(r)
                    .enumerate()
                    .map(|(degree, (dim, new_relations))| {
                        json!({ "degree": degree, "dim": dim, "new_relations": new_relations })
                    })
                    .collect();
                out["table"] = json!(rows);
            }
            format!("{}\n", serde_json::to_string_pretty(&out).expect("json"))
        }
        Output::Csv => {
            let mut s = String::from("m,degree,dim,new_relations\n");
            for (d, dim) in g.dims.iter().enumerate() {
                let r = rel.as_ref().map(|r| r[d].to_string()).unwrap_or_default();
                s.push_str(&format!("{},{d},{dim},{r}\n", c.m));
            }
            s
        }
        _ => {
            let body: Vec<String> = g.dims.iter().map(|d| d.to_string()).collect();
            format!("{} | total {}\n", body.join(" "), g.total())
        }
    };
    emit(&text)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let c = &args.common;
    validate(c, &[Output::Text, Output::Json])?;
    let need_n3 = |what: &str| {
        if c.n == 3 {
            Ok(())
        } else {
            Err(config(format!("the {what} suite needs n = 3")))
        }
    };
    let report: SuiteReport = match args.suite {
        Suite::Roundabout => roundabout_suite(c.n, c.m, args.samples, args.seed)?,
        Suite::Frobenius => frobenius_suite(c.n, c.m)?,
        Suite::Xi => {
            need_n3("xi")?;
            xi_suite(c.m)?
        }
        Suite::Gamma => {
            if c.n != 3 || c.m != 2 {
                return Err(config("the gamma suite needs n = 3, m = 2"));
            }
            gamma_suite()?
        }
        Suite::Braid => braid_suite(c.n, c.m, args.degree.unwrap_or(2 * c.m))?,
        Suite::Identities => identity_suite(args.samples, args.seed)?,
        Suite::Pattern => {
            need_n3("pattern")?;
            trace_pattern_suite(c.m)?
        }
    };
    let text = match c.output {
        Output::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("json")),
        _ => {
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            format!("{}{verdict} {} ({} checks)\n", report.render(), report.suite, report.checks.len())
        }
    };
    emit(&text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_alcove(args: &AlcoveArgs) -> Outcome {
    let c = &args.common;
    validate(c, &[Output::Text, Output::Svg])?;
    if c.n != 3 {
        return Err(config("the alcove picture needs n = 3"));
    }
    let svg = alcove::render(c.m, &alcove::alcoves(c.m)?);
    match &args.out {
        Some(path) => fs::write(path, svg).map_err(|e| config(format!("{}: {e}", path.display()))),
        None => emit(&svg),
    }
}

fn monomial_string(mo: &Monomial) -> String {
    let parts: Vec<String> = mo
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { format!("x{}", v + 1) } else { format!("x{}^{e}", v + 1) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn cmd_slice(args: &SliceArgs) -> Outcome {
    let c = &args.common;
    validate(c, &[Output::Text, Output::Json])?;
    let s = coinvariant_slice(c.n, c.m, args.degree, c.cache_dir.as_deref())?;
    let std: Vec<String> = s.standard_monomials().iter().map(monomial_string).collect();
    let text = match c.output {
        Output::Json => {
            let v = json!({
                "n": c.n, "m": c.m, "degree": args.degree,
                "quotient_dim": s.quotient_dim(), "standard_monomials": std,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        _ => format!("degree {}: dim {} | {}\n", args.degree, s.quotient_dim(), std.join(" ")),
    };
    emit(&text)
}

fn cmd_basis(args: &BasisArgs) -> Outcome {
    let c = &args.common;
    validate(c, &[Output::Text, Output::Json])?;
    let order: Vec<usize> = match &args.order {
        Some(o) => o.iter().map(|&v| v.wrapping_sub(1)).collect(),
        None => (0..c.n).collect(),
    };
    let mut sorted = order.clone();
    sorted.sort();
    if sorted != (0..c.n).collect::<Vec<_>>() {
        return Err(config(format!("--order must be a permutation of 1..{}", c.n)));
    }
    let basis = basis_x(&order, c.n, c.m);
    let counts = graded_count(&basis);
    let shown: Vec<&Monomial> = basis
        .iter()
        .filter(|mo| args.degree.map_or(true, |d| mo.degree() == d))
        .collect();
    let names: Vec<String> = shown.iter().map(|mo| monomial_string(mo)).collect();
    let text = match c.output {
        Output::Json => {
            let v = json!({
                "n": c.n, "m": c.m, "order": order.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "graded_count": counts, "monomials": names,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        _ => {
            let counts: Vec<String> = counts.iter().map(|k| k.to_string()).collect();
            format!("{}\n{}\n", counts.join(" "), names.join(" "))
        }
    };
    emit(&text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Dims(a) => cmd_dims(a),
        Command::Verify(a) => cmd_verify(a),
        Command::AlcoveSvg(a) => cmd_alcove(a),
        Command::Slice(a) => cmd_slice(a),
        Command::Basis(a) => cmd_basis(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
