//! `projgeom`: enumerate the subspace geometry, verify the operator
//! identities, build abstract modules, decompose the standard module and
//! convert module parameters.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use projgeom_core::geometry::{check_capacity, check_hk, DEFAULT_CAPACITY};
use projgeom_core::module::{eigen_tables, nmde_to_type, type_to_nmde};
use projgeom_core::operators::OPERATOR_NAMES;
use projgeom_core::scalar::SUPPORTED_Q;
use projgeom_core::spectral::{bookkeeping_check, compute_multiplicities, total_dimension};
use projgeom_core::verify::{verify_all, verify_geometry, verify_y_invariance, RelationResult, Subject, Witness};
use projgeom_core::{
    AbstractModule, GeometryIndex, ModuleType, OperatorSet, QuadRing, ScalarRing, Subspace, SymbolicRing,
    VerificationReport,
};
use serde_json::json;

use render::Format;

#[derive(Parser)]
#[command(
    name = "projgeom",
    version,
    about = "Exact operator identities on the subspace lattice of F_q^(h+k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the geometry and report strata and cover degrees, or dump one operator.
    Enumerate(EnumerateArgs),
    /// Check the relation suites on the standard module of the geometry.
    Verify(VerifyArgs),
    /// Build the abstract module of one type, check the suites and its eigenvalue tables.
    Module(ModuleArgs),
    /// Multiplicities of every module type in the standard module.
    Decompose(DecomposeArgs),
    /// Convert a type (alpha, beta, rho) to (nu, mu, d, e).
    Convert(ConvertArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Field order 2, 3, 5 or 7, or "symbolic".
    #[arg(long)]
    q: Option<String>,
    /// Work in Q(s) with q = s^2.
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    h: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: i64,
    #[arg(long, allow_hyphen_values = true)]
    beta: i64,
    #[arg(long, allow_hyphen_values = true)]
    rho: i64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Reference subspace as RREF rows, e.g. "001".
    #[arg(long)]
    y: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    max_size: u64,
    /// Dump this operator as a coordinate list.
    #[arg(long)]
    operator: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Reference subspace; give it twice or more to compare suites and multiplicities across choices.
    #[arg(long)]
    y: Vec<String>,
    /// Suite names or relation ids, comma separated; default all.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    max_size: u64,
    /// Include per-relation wall-clock times.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    y: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    max_size: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RingChoice {
    Numeric(u64),
    Symbolic,
}

fn usage(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn ring_choice(f: &FieldArgs) -> RingChoice {
    match (f.q.as_deref(), f.symbolic) {
        (None, false) => RingChoice::Numeric(2),
        (None, true) | (Some("symbolic"), _) => RingChoice::Symbolic,
        (Some(q), true) => usage(format!("--symbolic conflicts with --q {q}")),
        (Some(q), false) => match q.parse::<u32>() {
            Ok(n) if SUPPORTED_Q.contains(&n) => RingChoice::Numeric(u64::from(n)),
            _ => usage(format!("unsupported q '{q}'; use 2, 3, 5, 7 or symbolic")),
        },
    }
}

/// Geometric commands need a finite field.
fn numeric_q(f: &FieldArgs, command: &str) -> u64 {
    match ring_choice(f) {
        RingChoice::Numeric(q) => q,
        RingChoice::Symbolic => usage(format!("{command} works on the geometry and needs a numeric q")),
    }
}

fn shape(s: &ShapeArgs) -> (usize, usize) {
    if let Err(e) = check_hk(s.h, s.k) {
        usage(e);
    }
    (s.h, s.k)
}

fn module_type(t: &TypeArgs, h: usize, k: usize) -> ModuleType {
    ModuleType::new(t.alpha, t.beta, t.rho, h as i64, k as i64).unwrap_or_else(|e| usage(e))
}

fn parse_y(q: u64, h: usize, k: usize, text: &str) -> Subspace {
    Subspace::parse(q, h + k, text).unwrap_or_else(|e| usage(format!("--y {text}: {e}")))
}

fn geometry(q: u64, h: usize, k: usize, cap: u64, y: Option<Subspace>) -> Result<GeometryIndex> {
    check_capacity(q, h, k, cap).context("raise the limit with --max-size")?;
    Ok(GeometryIndex::build(q, h, k, y)?)
}

fn finish(mut report: VerificationReport, timings: bool) -> VerificationReport {
    if !timings {
        report.timings = None;
    }
    report
}

fn enumerate(a: &EnumerateArgs) -> Result<bool> {
    let q = numeric_q(&a.field, "enumerate");
    let (h, k) = shape(&a.shape);
    let y = a.y.as_deref().map(|t| parse_y(q, h, k, t));
    if let Some(name) = &a.operator {
        if !OPERATOR_NAMES.contains(&name.as_str()) {
            usage(format!(
                "unknown operator '{name}'; known: {}",
                OPERATOR_NAMES.join(", ")
            ));
        }
    }
    let g = geometry(q, h, k, a.max_size, y)?;
    let text = match &a.operator {
        Some(name) => {
            let ops = OperatorSet::for_geometry(&g, QuadRing::new(q)?)?;
            let op = ops.named(name).expect("name checked above");
            render::operator(a.out.format, &g, name, op)
        }
        None => render::summary(a.out.format, &g.summary()),
    };
    render::emit(&text, a.out.output.as_deref())?;
    Ok(true)
}

fn verify(a: &VerifyArgs) -> Result<bool> {
    let q = numeric_q(&a.field, "verify");
    let (h, k) = shape(&a.shape);
    let ys: Vec<Subspace> = a.y.iter().map(|t| parse_y(q, h, k, t)).collect();
    check_capacity(q, h, k, a.max_size).context("raise the limit with --max-size")?;
    let report = if ys.len() > 1 {
        if !a.suite.is_empty() {
            usage("--suite cannot be combined with several --y; the full suite is compared");
        }
        verify_y_invariance(q, h, k, &ys)?
    } else {
        let g = GeometryIndex::build(q, h, k, ys.into_iter().next())?;
        verify_geometry(&g, &a.suite)?
    };
    let report = finish(report, a.timings);
    render::emit(&render::report(a.out.format, &report), a.out.output.as_deref())?;
    Ok(report.all_passed())
}

fn module_report<R: ScalarRing>(
    ty: ModuleType,
    ring: R,
    suite: &[String],
) -> Result<(VerificationReport, serde_json::Value)> {
    let m = AbstractModule::build(ty, ring);
    let mut report = verify_all(&Subject::module(&m.ops, ty), suite)?;
    let mut rows = Vec::new();
    for (p, row) in eigen_tables(&m).into_iter().enumerate() {
        let mut entries = Vec::new();
        for e in &row.entries {
            let witness = (!e.agrees()).then(|| Witness {
                row: p,
                col: p,
                residual: match &e.matrix {
                    Some(v) => (e.formula.clone() - v).to_string(),
                    None => "weight space not invariant".to_string(),
                },
            });
            report.relations.push(RelationResult::new(
                format!("table.w({},{}).{}", row.i, row.j, e.name),
                witness,
            ));
            entries.push(json!({
                "name": e.name,
                "formula": e.formula.to_string(),
                "matrix": e.matrix.as_ref().map(ToString::to_string),
            }));
        }
        rows.push(json!({ "i": row.i, "j": row.j, "entries": entries }));
    }
    Ok((report, serde_json::Value::Array(rows)))
}

fn module(a: &ModuleArgs) -> Result<bool> {
    let (h, k) = shape(&a.shape);
    let ty = module_type(&a.ty, h, k);
    let (report, tables) = match ring_choice(&a.field) {
        RingChoice::Numeric(q) => module_report(ty, QuadRing::new(q)?, &a.suite)?,
        RingChoice::Symbolic => module_report(ty, SymbolicRing, &a.suite)?,
    };
    let report = finish(report, a.timings);
    render::emit(&render::module(a.out.format, &report, &tables), a.out.output.as_deref())?;
    Ok(report.all_passed())
}

fn decompose(a: &DecomposeArgs) -> Result<bool> {
    let q = numeric_q(&a.field, "decompose");
    let (h, k) = shape(&a.shape);
    let y = a.y.as_deref().map(|t| parse_y(q, h, k, t));
    let g = geometry(q, h, k, a.max_size, y)?;
    let ops = OperatorSet::for_geometry(&g, QuadRing::new(q)?)?;
    let mults = compute_multiplicities(&g, &ops)?;
    let report = bookkeeping_check(&g, &mults);
    let totals = (total_dimension(&mults), g.len());
    render::emit(
        &render::decomposition(a.out.format, &report, &mults, totals),
        a.out.output.as_deref(),
    )?;
    Ok(report.all_passed())
}

fn convert(a: &ConvertArgs) -> Result<bool> {
    let (h, k) = shape(&a.shape);
    let ty = module_type(&a.ty, h, k);
    let (n, case) = type_to_nmde(&ty)?;
    let back = nmde_to_type(&n, case, ty.h, ty.k);
    let witness = match &back {
        Ok(t) if *t == ty => None,
        Ok(t) => Some(format!("recovered {t}")),
        Err(e) => Some(e.to_string()),
    }
    .map(|residual| Witness {
        row: 0,
        col: 0,
        residual,
    });
    let check = RelationResult::new("convert.round_trip", witness);
    let passed = check.passed();
    render::emit(
        &render::conversion(a.out.format, &ty, &n, case, &check),
        a.out.output.as_deref(),
    )?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
        Command::Module(a) => module(a),
        Command::Decompose(a) => decompose(a),
        Command::Convert(a) => convert(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
