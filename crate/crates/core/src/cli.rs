//! Command-line front end. Every subcommand prints JSON (CSV for tropical
//! grids) and exits 0 on success, 1 when a verification fails, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::ExtInt;
use crate::analytic::{analytic_summary, ContinuousTodaProbe, WeierstrassData};
use crate::curve::{CurveSpec, EllipticCurve};
use crate::error::{Error, Result};
use crate::genus2::{cantor_add, wp_values, wp_values_split, Genus2Curve, MumfordDivisor};
use crate::psi::{check_appendix, ListedCurve, PsiSequence, DEFAULT_MAX_N};
use crate::report::reproduce;
use crate::toda::{
    build_grids, point_value, verify_dtoda_phi, verify_dtoda_v, PointPsi, TodaParams,
};
use crate::ultradiscrete::{evolve, f_grid, parse_row, verify_udte, Boundary, FSign, TropicalGrid};
use crate::valuation::{nonarch_norm, val, PointSpec};

#[derive(Parser, Debug)]
#[command(
    name = "toda-psi",
    version,
    about = "Exact psi functions and Toda equations"
)]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List psi_n as ring elements.
    PsiTable(PsiTableArgs),
    /// Structure, recursion, determinant and listing checks.
    PsiCheck(PsiCheckArgs),
    /// Expand an expression on the curve, optionally at a point.
    Eval(EvalArgs),
    /// Valuations g_n = val(psi_n) at a point.
    ValTable(ValTableArgs),
    /// phi, U and V grids.
    DtodaGrid(GridArgs),
    /// Verify the discrete Toda relations on a grid.
    DtodaVerify(GridArgs),
    /// Valuation-seeded tropical grid with its max-plus check.
    UtodaGrid(UtodaGridArgs),
    /// Run the max-plus update from two seed rows.
    UtodaEvolve(EvolveArgs),
    /// Numeric wp/sigma residuals and the continuous Toda probe.
    AnalyticCheck(AnalyticArgs),
    /// Sum divisors on a genus-two Jacobian.
    G2Add(G2AddArgs),
    /// wp11, wp12, wp22 of a genus-two divisor.
    G2Wp(G2WpArgs),
    /// Regenerate every reference table with pass/fail per item.
    ReproducePaper,
}

#[derive(Args, Debug)]
pub struct CurveArg {
    /// Preset (a1, a2, a3, symbolic), inline JSON, or @file.
    #[arg(long)]
    pub curve: String,
    /// Highest psi index the engine may build.
    #[arg(long, env = "TODA_PSI_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct PsiTableArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long, default_value_t = 12)]
    pub max_n: i64,
}

#[derive(Args, Debug)]
pub struct PsiCheckArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long, default_value_t = 10)]
    pub max_n: i64,
    /// Compare the determinant formula up to this n.
    #[arg(long, default_value_t = 6)]
    pub bk: usize,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    /// e.g. "psi5 - 2 y x" or "psi3^2".
    #[arg(long)]
    pub expr: String,
    /// Point JSON, e.g. {"kind":"generic","x":"-1"}.
    #[arg(long)]
    pub point: Option<String>,
}

#[derive(Args, Debug)]
pub struct ValTableArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long)]
    pub point: String,
    #[arg(long, default_value_t = 12)]
    pub max_n: i64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GridChoice {
    Phi,
    U,
    V,
    All,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long)]
    pub point: String,
    /// "p,q".
    #[arg(long, value_parser = parse_pair)]
    pub pq: (i64, i64),
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n0: i64,
    #[arg(long, default_value_t = 4)]
    pub rows: i64,
    #[arg(long, default_value_t = 4)]
    pub cols: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub i0: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub j0: i64,
    #[arg(long, value_enum, default_value = "all")]
    pub kind: GridChoice,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SignChoice {
    Difference,
    NegatedValuation,
}

#[derive(Args, Debug)]
pub struct UtodaGridArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long)]
    pub point: String,
    #[arg(long, value_parser = parse_pair)]
    pub pq: (i64, i64),
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n0: i64,
    #[arg(long, default_value_t = 4)]
    pub rows: i64,
    #[arg(long, default_value_t = 5)]
    pub cols: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub i0: i64,
    #[arg(long, value_enum, default_value = "difference")]
    pub sign: SignChoice,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BoundaryChoice {
    Fixed,
    Periodic,
}

#[derive(Args, Debug)]
pub struct EvolveArgs {
    /// Two seed rows as JSON, e.g. [[2,-2,2],[2,-2,2]].
    #[arg(long)]
    pub rows: String,
    #[arg(long, allow_hyphen_values = true)]
    pub d: ExtInt,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "periodic")]
    pub boundary: BoundaryChoice,
    #[arg(long, allow_hyphen_values = true)]
    pub left: Option<ExtInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub right: Option<ExtInt>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct AnalyticArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_add1: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub tol_toda: f64,
}

#[derive(Args, Debug)]
pub struct G2AddArgs {
    /// Preset "g2" (y^2 = x^5 - x + 1), inline JSON, or @file.
    #[arg(long)]
    pub curve: String,
    /// JSON list of {"u": [...], "v": [...]}, constant term first.
    #[arg(long)]
    pub divisors: String,
}

#[derive(Args, Debug)]
pub struct G2WpArgs {
    #[arg(long)]
    pub curve: String,
    #[arg(long)]
    pub divisor: String,
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected p,q")?;
    let p = a.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
    let q = b.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
    Ok((p, q))
}

/// Inline JSON or `@path`.
fn load(src: &str) -> Result<String> {
    match src.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}"))),
        None => Ok(src.to_string()),
    }
}

fn from_json<T: serde::de::DeserializeOwned>(what: &'static str, src: &str) -> Result<T> {
    serde_json::from_str(&load(src)?).map_err(|e| Error::Parse {
        what,
        detail: e.to_string(),
    })
}

pub fn resolve_curve(src: &str) -> Result<EllipticCurve> {
    if let Some(c) = EllipticCurve::preset(src) {
        return Ok(c);
    }
    if src.eq_ignore_ascii_case("symbolic") {
        return Ok(EllipticCurve::symbolic());
    }
    EllipticCurve::try_from(from_json::<CurveSpec>("curve", src)?)
}

pub fn resolve_genus2(src: &str) -> Result<Genus2Curve> {
    if src.eq_ignore_ascii_case("g2") {
        return Ok(Genus2Curve::standard());
    }
    Genus2Curve::try_from(from_json::<CurveSpec>("curve", src)?)
}

fn sequence(arg: &CurveArg) -> Result<PsiSequence> {
    Ok(PsiSequence::with_limit(resolve_curve(&arg.curve)?, arg.cap))
}

/// Rendered output plus whether every verification in it passed.
pub struct Outcome {
    pub body: String,
    pub ok: bool,
}

fn json_out(v: &impl Serialize, ok: bool) -> Result<Outcome> {
    let body = serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Outcome { body, ok })
}

fn tropical_out(grid: &TropicalGrid, extra: Value, ok: bool, format: Format) -> Result<Outcome> {
    match format {
        Format::Csv => Ok(Outcome {
            body: grid.to_csv(),
            ok,
        }),
        Format::Json => {
            let mut v = serde_json::to_value(grid).map_err(|e| Error::Internal(e.to_string()))?;
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            json_out(&v, ok)
        }
    }
}

fn listed(src: &str) -> Option<ListedCurve> {
    ListedCurve::parse(src)
}

fn toda_setup(a: &GridArgs) -> Result<(PsiSequence, crate::curve::PointValue)> {
    let seq = sequence(&a.curve)?;
    let spec: PointSpec = from_json("point", &a.point)?;
    let pt = point_value(seq.curve(), &spec)?;
    Ok((seq, pt))
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::PsiTable(a) => {
            let seq = sequence(&a.curve)?;
            let rows = (0..=a.max_n)
                .map(|n| {
                    let e = seq.psi(n)?;
                    Ok(json!({"n": n, "display": e.to_string(), "element": *e}))
                })
                .collect::<Result<Vec<_>>>()?;
            json_out(&rows, true)
        }
        Command::PsiCheck(a) => {
            let seq = sequence(&a.curve)?;
            let structure = (1..=a.max_n as usize)
                .map(|n| seq.check_structure(n))
                .collect::<Result<Vec<_>>>()?;
            let mut recursion = Vec::new();
            for m in 2..=a.max_n / 2 {
                for n in 1..m {
                    if m + n <= a.max_n {
                        recursion.push(
                            json!({"m": m, "n": n, "ok": seq.verify_recursion_identity(m, n)?}),
                        );
                    }
                }
            }
            let bk = (2..=a.bk)
                .map(|n| Ok(json!({"n": n, "ok": seq.psi_bk(n)? == *seq.psi(n as i64)?})))
                .collect::<Result<Vec<_>>>()?;
            let listing = match listed(&a.curve.curve) {
                Some(w) => {
                    let r = check_appendix(w)?;
                    Some(json!({"entries": r.entries.len(), "mismatches": r.mismatches()}))
                }
                None => None,
            };
            let ok = structure.iter().all(|s| s.ok())
                && recursion.iter().all(|r| r["ok"] == true)
                && bk.iter().all(|r| r["ok"] == true)
                && listing
                    .as_ref()
                    .is_none_or(|l| l["mismatches"].as_array().is_some_and(Vec::is_empty));
            json_out(
                &json!({"structure": structure, "recursion": recursion, "determinant": bk, "listing": listing}),
                ok,
            )
        }
        Command::Eval(a) => {
            let seq = sequence(&a.curve)?;
            let curve = seq.curve();
            let lookup = |k: i64| seq.psi(k).map(|e| e.as_ref().clone());
            let ctx = crate::curve::ElementContext::with_psi(curve, &lookup);
            let e = crate::algebra::parse_expr(&a.expr)?.eval(&ctx)?;
            match &a.point {
                None => json_out(&json!({"display": e.to_string(), "element": e}), true),
                Some(p) => {
                    let pt = point_value(curve, &from_json("point", p)?)?;
                    let v = curve.eval(&e, &pt)?;
                    json_out(&json!({"display": v.to_string(), "value": v}), true)
                }
            }
        }
        Command::ValTable(a) => {
            let seq = sequence(&a.curve)?;
            let spec: PointSpec = from_json("point", &a.point)?;
            let pt = spec.resolve(seq.curve())?;
            let rows = (0..=a.max_n)
                .map(|n| {
                    let v = val(seq.curve(), &*seq.psi(n)?, &pt)?;
                    Ok(json!({"n": n, "val": v, "norm": nonarch_norm(v)}))
                })
                .collect::<Result<Vec<_>>>()?;
            json_out(&json!({"point": pt.to_string(), "g": rows}), true)
        }
        Command::DtodaGrid(a) => {
            let (seq, pt) = toda_setup(a)?;
            let vals = PointPsi::new(&seq, pt);
            let params = TodaParams::new(&vals, a.pq.0, a.pq.1, a.n0)?;
            let g = build_grids(
                &vals,
                &params,
                a.i0..=a.i0 + a.cols - 1,
                a.j0..=a.j0 + a.rows - 1,
            )?;
            let v = match a.kind {
                GridChoice::Phi => json!({"params": g.params, "grid": g.phi}),
                GridChoice::U => json!({"params": g.params, "grid": g.u}),
                GridChoice::V => json!({"params": g.params, "c": g.params.c().ok(), "grid": g.v}),
                GridChoice::All => json!(g),
            };
            json_out(&v, true)
        }
        Command::DtodaVerify(a) => {
            let (seq, pt) = toda_setup(a)?;
            let vals = PointPsi::new(&seq, pt);
            let params = TodaParams::new(&vals, a.pq.0, a.pq.1, a.n0)?;
            let g = build_grids(
                &vals,
                &params,
                a.i0..=a.i0 + a.cols - 1,
                a.j0..=a.j0 + a.rows - 1,
            )?;
            let phi = verify_dtoda_phi(&params, &g.phi);
            let v = verify_dtoda_v(&params, &g)?;
            let ok = phi.all_ok() && v.all_ok();
            json_out(&json!({"params": params, "phi": phi, "v": v, "ok": ok}), ok)
        }
        Command::UtodaGrid(a) => {
            let seq = sequence(&a.curve)?;
            let spec: PointSpec = from_json("point", &a.point)?;
            let pt = spec.resolve(seq.curve())?;
            let sign = match a.sign {
                SignChoice::Difference => FSign::Difference,
                SignChoice::NegatedValuation => FSign::NegatedValuation,
            };
            let g = f_grid(
                &seq,
                &pt,
                (a.pq.0, a.pq.1, a.n0),
                a.i0..=a.i0 + a.cols - 1,
                0..=a.rows - 1,
                sign,
            )?;
            let r = verify_udte(&g);
            let ok = r.all_ok();
            tropical_out(&g, json!({"udte": r}), ok, a.format)
        }
        Command::UtodaEvolve(a) => {
            let seeds: Vec<Value> = from_json("rows", &a.rows)?;
            if seeds.len() != 2 {
                return Err(Error::InvalidArgument(
                    "exactly two seed rows are needed".into(),
                ));
            }
            let rows = seeds
                .iter()
                .map(|r| parse_row(&r.to_string()))
                .collect::<Result<Vec<_>>>()?;
            let boundary = match (a.boundary, a.left, a.right) {
                (BoundaryChoice::Periodic, None, None) => Boundary::Periodic,
                (BoundaryChoice::Fixed, Some(left), Some(right)) => Boundary::Fixed { left, right },
                (BoundaryChoice::Fixed, _, _) => {
                    return Err(Error::InvalidArgument(
                        "fixed boundary needs --left and --right".into(),
                    ))
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "--left/--right need --boundary fixed".into(),
                    ))
                }
            };
            let g = evolve(&rows[0], &rows[1], a.d, a.steps, boundary)?;
            tropical_out(&g, json!({}), true, a.format)
        }
        Command::AnalyticCheck(a) => {
            let curve = resolve_curve(&a.curve.curve)?;
            let w = WeierstrassData::from_curve(&curve)?;
            let probe = ContinuousTodaProbe::standard(a.h);
            let s = analytic_summary(&w, a.samples, a.seed, &probe)?;
            let ok = s.max_add1_relative < a.tol_add1
                && s.toda.max_residual < a.tol_toda
                && (s.convergence.ratio - 4.0).abs() < 0.5;
            json_out(&json!({"summary": s, "ok": ok}), ok)
        }
        Command::G2Add(a) => {
            let curve = resolve_genus2(&a.curve)?;
            let ds: Vec<MumfordDivisor> = from_json("divisors", &a.divisors)?;
            let mut acc = MumfordDivisor::identity();
            for d in ds {
                let d = MumfordDivisor::new(&curve, d.u, d.v)?;
                acc = cantor_add(&curve, &acc, &d)?;
            }
            json_out(&acc, true)
        }
        Command::G2Wp(a) => {
            let curve = resolve_genus2(&a.curve)?;
            let d: MumfordDivisor = from_json("divisor", &a.divisor)?;
            let d = MumfordDivisor::new(&curve, d.u, d.v)?;
            let w = wp_values(&curve, &d)?;
            let ok = wp_values_split(&curve, &d)? == w;
            json_out(
                &json!({"wp11": w.wp11, "wp12": w.wp12, "wp22": w.wp22, "routes_agree": ok}),
                ok,
            )
        }
        Command::ReproducePaper => {
            let items = reproduce()?;
            let ok = items.iter().all(|i| i.passed());
            json_out(
                &json!({"items": items, "overall": if ok { "pass" } else { "fail" }}),
                ok,
            )
        }
    }
}

/// Parses `args`, runs, writes output and maps the result to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut body = outcome.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(if outcome.ok { 0 } else { 1 })
}
