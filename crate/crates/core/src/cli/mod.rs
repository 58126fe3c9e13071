//! Command-line front end: job specs, the expression parser and the
//! subcommands. Output is deterministic; JSON maps are key-sorted and exact
//! scalars are written as strings such as `z[1]-1/2`.

mod expr;
mod job;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::combinat::Composition;
use crate::divdiff::{compare_forms, nil_coxeter_relations};
use crate::error::{Error, Result};
use crate::gzmod::{build_basis_b_from, component_graph, simplicity_probe, ModuleWindow};
use crate::invariants::{self, rand_like::SplitMix};
use crate::latwalk::{find_path, moves_to_steps, render_walk, validate_walk, LatticeState};
use crate::skewops::{build_generators, check_invariance};

pub use expr::{parse_expr, parse_rational_function, PolyExpr};
pub use job::{parse_index, JobSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_KERNEL: i32 = 3;

const DEFAULT_RADIUS: i64 = 2;
const INVARIANCE_SAMPLES: usize = 20;
const SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "ogz", version, about = "Exact computations with orthogonal Gelfand-Zeitlin algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Job specification (JSON).
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Composition, e.g. `2,1`; overrides the spec.
    #[arg(long, global = true, value_delimiter = ',')]
    pub lambda: Option<Vec<u32>>,
    #[arg(long, global = true)]
    pub radius: Option<i64>,
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// `both` or `either`.
    #[arg(long, global = true)]
    pub edge_rule: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a generator (`E1`, `F2`, `gamma(1,2)`) to an expression.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        expr: String,
    },
    /// Nil-Coxeter relations per row and invariance of generator images.
    CheckRelations,
    /// Classical against divided-difference generators for every composition of every row.
    DdiffCompare,
    /// The window basis and its rank certificate.
    Basis,
    /// Generator actions on the interior basis elements.
    Action {
        /// Generator names; defaults to every E and F.
        #[arg(long = "op")]
        ops: Vec<String>,
    },
    /// Block decomposition with socle dimensions.
    Blocks,
    /// Component graph of a regular point, as DOT.
    Graph,
    /// Lattice walk between two states.
    Walk {
        #[arg(long)]
        start: String,
        #[arg(long)]
        target: String,
    },
    /// Simplicity probe.
    Probe,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name), runs the job and writes any
/// `--out` file. Nothing is printed.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
                }
                _ => error_outcome(&Error::Validation(e.to_string())),
            };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> Outcome {
    let job = match load_job(cli) {
        Ok(j) => j,
        Err(e) => return error_outcome(&e),
    };
    let (text, ok) = match execute(&cli.command, &job) {
        Ok(r) => r,
        Err(e) => return error_outcome(&e),
    };
    let code = if ok { EXIT_OK } else { EXIT_KERNEL };
    let out = cli.out.clone().or_else(|| job.out.clone().map(PathBuf::from));
    match out {
        Some(path) => match std::fs::write(&path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => error_outcome(&Error::Validation(format!("cannot write {}: {e}", path.display()))),
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

fn load_job(cli: &Cli) -> Result<JobSpec> {
    let mut job = match &cli.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
            JobSpec::from_json(&text)?
        }
        None => JobSpec::default(),
    };
    if let Some(l) = &cli.lambda {
        if job.point.is_some() && *l != job.lambda {
            return Err(Error::Validation("--lambda disagrees with the spec point".into()));
        }
        job.lambda = l.clone();
    }
    if cli.radius.is_some() {
        job.radius = cli.radius;
    }
    if cli.degree.is_some() {
        job.degree = cli.degree;
    }
    if cli.edge_rule.is_some() {
        job.edge_rule = cli.edge_rule.clone();
    }
    if job.radius.is_some_and(|r| r < 0) {
        return Err(Error::Validation("radius must be nonnegative".into()));
    }
    job.edge_rule()?;
    Ok(job)
}

fn require_lambda(job: &JobSpec) -> Result<Composition> {
    if job.lambda.is_empty() {
        return Err(Error::Validation("no composition given (use --spec or --lambda)".into()));
    }
    job.composition()
}

fn execute(cmd: &Command, job: &JobSpec) -> Result<(String, bool)> {
    match cmd {
        Command::Apply { op, expr } => {
            let lambda = require_lambda(job)?;
            let g = build_generators(&lambda);
            let op = g.by_name(op)?;
            let f = parse_rational_function(expr, &lambda)?;
            Ok((format!("{}\n", op.apply(&f)), true))
        }
        Command::CheckRelations => check_relations(&require_lambda(job)?, job.degree.unwrap_or(4)),
        Command::DdiffCompare => ddiff_compare(&require_lambda(job)?, job.degree),
        Command::Basis => {
            let w = window(job)?;
            Ok((to_json(&basis_json(&w)), true))
        }
        Command::Action { ops } => action(&window(job)?, ops),
        Command::Blocks => {
            let w = window(job)?;
            let table = w.block_table()?;
            let ok = table.iter().all(|b| b.socle_dim == 1);
            let v = json!({
                "lambda": w.lambda.parts(),
                "point": point_json(&w),
                "radius": w.radius,
                "blocks": table,
            });
            Ok((to_json(&v), ok))
        }
        Command::Graph => {
            require_lambda(job)?;
            let v = job.eval_point()?;
            let g = component_graph(&v, job.radius.unwrap_or(DEFAULT_RADIUS), job.edge_rule()?)?;
            Ok((g.to_dot(), true))
        }
        Command::Walk { start, target } => {
            let (s, t) = (LatticeState::parse(start)?, LatticeState::parse(target)?);
            let moves = find_path(&s, &t)?;
            let ok = validate_walk(&moves_to_steps(&moves)).is_valid();
            Ok((format!("{}\n", render_walk(&s, &moves)), ok))
        }
        Command::Probe => {
            require_lambda(job)?;
            let v = job.eval_point()?;
            let report = simplicity_probe(&v, job.radius.unwrap_or(DEFAULT_RADIUS));
            let ok = report.passes();
            Ok((to_json(&report), ok))
        }
    }
}

fn window(job: &JobSpec) -> Result<ModuleWindow> {
    require_lambda(job)?;
    let v = job.eval_point()?;
    build_basis_b_from(&v, job.radius.unwrap_or(DEFAULT_RADIUS), job.degree)
}

fn check_relations(lambda: &Composition, degree: u32) -> Result<(String, bool)> {
    let mut ok = true;
    let mut rows = Vec::new();
    for i in 1..=lambda.k() {
        let r = nil_coxeter_relations(lambda, i)?;
        ok &= r.holds();
        rows.push(r);
    }
    let g = build_generators(lambda);
    let mut rng = SplitMix(SEED);
    let mut failures = Vec::new();
    for s in 0..INVARIANCE_SAMPLES {
        let f = invariants::random_invariant(lambda, degree, &mut rng);
        for i in 1..lambda.k() {
            for (name, op) in [(format!("E{i}"), g.e(i)?), (format!("F{i}"), g.f(i)?)] {
                if !check_invariance(op, &f)?.is_invariant_image {
                    failures.push(format!("{name} on sample {s}"));
                }
            }
        }
    }
    ok &= failures.is_empty();
    let v = json!({
        "lambda": lambda.parts(),
        "nil_coxeter": rows,
        "invariance": {"degree": degree, "samples": INVARIANCE_SAMPLES, "seed": SEED, "failures": failures},
        "ok": ok,
    });
    Ok((to_json(&v), ok))
}

/// Default test degree for the divided-difference comparison.
pub fn ddiff_degree(lambda: &Composition) -> u32 {
    lambda.max_part().max(4)
}

fn ddiff_compare(lambda: &Composition, degree: Option<u32>) -> Result<(String, bool)> {
    let degree = degree.unwrap_or_else(|| ddiff_degree(lambda));
    let rows: Vec<u32> = (1..=lambda.k()).collect();
    let family = invariants::family(lambda, &rows, degree);
    let mut reports = Vec::new();
    for i in 1..lambda.k() {
        for mu in Composition::all_of(lambda.part(i)) {
            reports.push(compare_forms(lambda, i, &mu, &family)?);
        }
    }
    let ok = reports.iter().all(|r| r.agrees());
    let v = json!({
        "lambda": lambda.parts(),
        "degree": degree,
        "family_size": family.len(),
        "comparisons": reports,
        "ok": ok,
    });
    Ok((to_json(&v), ok))
}

fn point_json(w: &ModuleWindow) -> Value {
    w.point.values().map(|(a, p)| (format!("{},{}", a.row, a.col), Value::String(p.to_string()))).collect()
}

fn basis_json(w: &ModuleWindow) -> Value {
    let elements: Vec<Value> = (0..w.len())
        .map(|b| {
            let e = &w.basis[b];
            json!({
                "index": b,
                "orbit": e.orbit,
                "shift": e.functional.shift.render(&w.lambda),
                "word": e.functional.word.to_string(),
                "functional": e.functional.to_string(),
                "character": w.character(b).to_string(),
                "interior": w.is_interior(b),
            })
        })
        .collect();
    json!({
        "lambda": w.lambda.parts(),
        "point": point_json(w),
        "radius": w.radius,
        "window_size": w.window_size(),
        "size": w.len(),
        "certificate": w.certificate,
        "elements": elements,
    })
}

fn action(w: &ModuleWindow, ops: &[String]) -> Result<(String, bool)> {
    let g = build_generators(&w.lambda);
    let names: Vec<String> = if ops.is_empty() {
        g.named().into_iter().map(|(n, _)| n).filter(|n| !n.starts_with("gamma")).collect()
    } else {
        ops.to_vec()
    };
    let mut out = Vec::new();
    for name in &names {
        let prep = w.prepare(g.by_name(name)?)?;
        let mut columns = Vec::new();
        for b in (0..w.len()).filter(|&b| w.is_interior(b)) {
            let image: serde_json::Map<String, Value> = w
                .act_prepared(&prep, b)?
                .into_iter()
                .map(|(c, s)| (c.to_string(), Value::String(s.to_string())))
                .collect();
            columns.push(json!({"source": b, "image": image}));
        }
        out.push(json!({"generator": name, "columns": columns}));
    }
    let v = json!({
        "lambda": w.lambda.parts(),
        "point": point_json(w),
        "radius": w.radius,
        "size": w.len(),
        "actions": out,
    });
    Ok((to_json(&v), true))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Exit code for an error: 2 for bad input, 3 for kernel failures.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_)
        | Error::Syntax { .. }
        | Error::NameError(_)
        | Error::InvalidComposition(_)
        | Error::InvalidIndex(_) => EXIT_VALIDATION,
        _ => EXIT_KERNEL,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "DivisionByZero",
        Error::SingularSubstitution => "SingularSubstitution",
        Error::InvalidComposition(_) => "InvalidComposition",
        Error::InvalidIndex(_) => "InvalidIndex",
        Error::InvalidSubgroup(_) => "InvalidSubgroup",
        Error::NotASubgroup(_) => "NotASubgroup",
        Error::InvalidPair(_) => "InvalidPair",
        Error::NotInvariantInput => "NotInvariantInput",
        Error::InvalidSingularSetup(_) => "InvalidSingularSetup",
        Error::WindowRankError(_) => "WindowRankError",
        Error::WindowLeakage(_) => "WindowLeakage",
        Error::HypothesisViolation(_) => "HypothesisViolation",
        Error::RegularityError => "RegularityError",
        Error::InvalidMove(_) => "InvalidMove",
        Error::Syntax { .. } => "SyntaxError",
        Error::NameError(_) => "NameError",
        Error::Validation(_) => "ValidationError",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": error_kind(e), "message": e.to_string(), "exit_code": exit_code(e)});
    if let Error::Syntax { pos, .. } = e {
        v["pos"] = json!(pos);
    }
    v
}

fn error_outcome(e: &Error) -> Outcome {
    Outcome { code: exit_code(e), stdout: String::new(), stderr: format!("{}\n", error_json(e)) }
}
