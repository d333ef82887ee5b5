//! Command-line front end behind the `zerodyn` binary.
//!
//! [`run`] parses the arguments, writes the requested document and returns
//! the exit code: 0 success, 1 verification failure, 2 configuration error,
//! 3 singularity before the final time (the partial output is still written).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{check_model, Catalog, LedgerEntry, ModelSpec, ModelSummary, Params, Sampler};
use crate::complex::{fmt_real, parse_complex, parse_complex_list, C64, ZERO};
use crate::config::{Tolerances, PROFILE_ENV};
use crate::engine::{check_admissible, integrate_numeric, oracle_run, solve_trajectory, PeriodEstimate, Trajectory};
use crate::error::Error;
use crate::extensions::{
    canonical_table, conda_residual, conda_scale, integrate_plane_numeric, plane_period, reduce_with_report, solve_quadratic_plane, GaugeTransform, Mat2,
    PlaneQuadraticSystem, Table,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

const LITERALS: &str = "\
Complex literals:
  complex = real [ sign imag ] | imag ;
  imag    = [ unsigned ] \"i\" ;
  real    = [ sign ] unsigned ;
  sign    = \"+\" | \"-\" ;
  unsigned = digits [ \".\" digits ] [ (\"e\" | \"E\") real-exponent ] ;
  e.g. 1.5, -2i, 0.1+0.2i, 3e-2-1e-3i, i
Time grid: t0:t1:samples, e.g. 0:1:101
Coefficient table: a11,a12,a13;a21,a22,a23 (columns z1^2, z2^2, z1 z2)
Environment: ZERODYN_TOL_PROFILE = default | strict | loose";

#[derive(Parser, Debug)]
#[command(name = "zerodyn", version, about = "Solvable planar dynamics of polynomial zeros with multiplicities", after_help = LITERALS)]
struct Cli {
    /// Tolerance profile (default, strict, loose); overrides ZERODYN_TOL_PROFILE
    #[arg(long, global = true)]
    tol_profile: Option<String>,
    /// Override one tolerance field, e.g. --set-tol recovery=1e-7 (repeatable)
    #[arg(long = "set-tol", global = true, value_name = "NAME=VALUE")]
    set_tol: Vec<String>,
    /// Catalog JSON document (schema v1) used instead of the built-in tables
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one catalog model or plane quadratic system on a time grid
    Solve(SolveArgs),
    /// Check catalog right-hand sides and analytic trajectories against oracles
    Verify(VerifyArgs),
    /// Reduce a plane quadratic system to the canonical solvable form
    Reduce(ReduceArgs),
    /// Measure the period of a gauged plane system
    Isochrony(IsochronyArgs),
    /// List, show, verify or export the model catalog
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Analytic,
    Numeric,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Catalog model, e.g. 4i12d or 4.(i)1.2d
    #[arg(long, conflicts_with = "plane")]
    model: Option<String>,
    /// Plane system coefficient table instead of a model
    #[arg(long)]
    plane: Option<String>,
    /// Linear gauge coefficient a of a plane system
    #[arg(long, default_value = "0")]
    gauge: String,
    /// Model parameter, e.g. --param a=1 --param b=0.5-0.1i
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Initial zeros "x1,x2" (or z for a plane system); drawn from --seed when omitted
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<String>,
    #[arg(long, default_value = "0:1:101")]
    t: String,
    #[arg(long, value_enum, default_value = "analytic")]
    method: SolveMethod,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Restrict the sweep to one model
    #[arg(long)]
    model: Option<String>,
    /// Random points per model for the right-hand side comparison
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Random initial conditions per model with a closed-form path
    #[arg(long, default_value_t = 5)]
    trajectories: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Force every verification threshold to this value
    #[arg(long)]
    tol: Option<f64>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// Coefficient table a11,a12,a13;a21,a22,a23
    #[arg(long, allow_hyphen_values = true)]
    table: String,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IsochronyArgs {
    /// Canonical parameter a2 (ignored with --table)
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a2: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b2: String,
    /// Explicit coefficient table instead of the canonical one
    #[arg(long, allow_hyphen_values = true)]
    table: Option<String>,
    #[arg(long, default_value = "i", allow_hyphen_values = true)]
    gauge: String,
    /// Initial data "z1,z2"; small random data from --seed when omitted
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Search horizon (default: 12 base periods, or 20)
    #[arg(long)]
    horizon: Option<f64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// One line per model, or the JSON listing
    List {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// The JSON record of one model with its ledger entry
    Show { id: String },
    /// Right-hand side rederivation for every distinct model
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The full catalog document
    Export {
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Failure while executing a command, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CONFIG, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Config(_) | Error::Parse(_) | Error::UnknownModel(_) | Error::InvalidSystem(_) => EXIT_CONFIG,
            _ => EXIT_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Run the command line; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_CONFIG
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "zerodyn: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let tol = tolerances(cli)?;
    let owned;
    let cat: &Catalog = match &cli.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::config(format!("{}: {e}", path.display())))?;
            owned = Catalog::from_json(&text)?;
            &owned
        }
        None => Catalog::builtin(),
    };
    match &cli.command {
        Command::Solve(a) => cmd_solve(cat, a, &tol, out, err),
        Command::Verify(a) => cmd_verify(cat, a, &tol, out),
        Command::Reduce(a) => cmd_reduce(a, &tol, out),
        Command::Isochrony(a) => cmd_isochrony(a, &tol, out),
        Command::Catalog { command } => cmd_catalog(cat, command, out),
    }
}

fn tolerances(cli: &Cli) -> std::result::Result<Tolerances, Failure> {
    let mut tol = match &cli.tol_profile {
        Some(p) => Tolerances::profile(p)?,
        None => Tolerances::from_env().map_err(|e| Failure::config(format!("{PROFILE_ENV}: {e}")))?,
    };
    if !cli.set_tol.is_empty() {
        let mut v = serde_json::to_value(tol).expect("tolerances serialize");
        for item in &cli.set_tol {
            let (name, value) = item.split_once('=').ok_or_else(|| Failure::config(format!("--set-tol expects NAME=VALUE, got {item:?}")))?;
            let slot = v.get_mut(name.trim()).ok_or_else(|| Failure::config(format!("unknown tolerance {name:?}")))?;
            let parsed: serde_json::Value = serde_json::from_str(value.trim()).map_err(|_| Failure::config(format!("bad tolerance value {value:?}")))?;
            *slot = parsed;
        }
        tol = serde_json::from_value(v).map_err(|e| Failure::config(format!("tolerances: {e}")))?;
    }
    Ok(tol)
}

fn emit(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: EXIT_FAILED, message: format!("{}: {e}", p.display()) }),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure { code: EXIT_FAILED, message: e.to_string() }),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// "t0:t1:samples"
pub fn parse_grid(text: &str) -> crate::Result<Vec<f64>> {
    let bad = || Error::Config(format!("time grid must be t0:t1:samples, got {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let t0: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let t1: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !(t0.is_finite() && t1.is_finite() && t1 > t0 && n >= 2) {
        return Err(Error::Config(format!("time grid needs t1 > t0 and at least 2 samples, got {text:?}")));
    }
    Ok((0..n).map(|k| if k == n - 1 { t1 } else { t0 + (t1 - t0) * k as f64 / (n - 1) as f64 }).collect())
}

/// "a11,a12,a13;a21,a22,a23"
pub fn parse_table(text: &str) -> crate::Result<Table> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        return Err(Error::Config(format!("coefficient table needs two rows separated by ';', got {text:?}")));
    }
    let mut t = [[ZERO; 3]; 2];
    for (n, row) in rows.iter().enumerate() {
        let v = parse_complex_list(row)?;
        if v.len() != 3 {
            return Err(Error::Config(format!("table row {} needs 3 coefficients", n + 1)));
        }
        t[n].copy_from_slice(&v);
    }
    Ok(t)
}

fn parse_params(items: &[String]) -> crate::Result<Params> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Config(format!("--param expects NAME=VALUE, got {item:?}")))?;
        p.insert(k.trim().to_string(), parse_complex(v)?);
    }
    Ok(p)
}

fn parse_pair(text: &str, what: &str) -> crate::Result<[C64; 2]> {
    let v = parse_complex_list(text)?;
    if v.len() != 2 {
        return Err(Error::Config(format!("{what} needs two complex values, got {}", v.len())));
    }
    Ok([v[0], v[1]])
}

fn quote_flag(s: &str) -> String {
    s.replace([',', '\n'], ";")
}

pub const CSV_HEADER: &str = "t,re(x1),im(x1),re(x2),im(x2),branch,flags";

/// CSV rendering; the last row carries the flag of a trajectory that stopped early.
pub fn trajectory_csv(tr: &Trajectory) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    let n = tr.times.len();
    for (k, (t, x)) in tr.times.iter().zip(&tr.states).enumerate() {
        let flag = if k + 1 == n {
            tr.singularities.iter().map(|sg| format!("stopped at t={}: {}", fmt_real(sg.t), quote_flag(&sg.kind))).collect::<Vec<_>>().join(" | ")
        } else {
            String::new()
        };
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_real(*t),
            fmt_real(x[0].re),
            fmt_real(x[0].im),
            fmt_real(x[1].re),
            fmt_real(x[1].im),
            tr.branch_log[k].p_sign,
            flag
        ));
    }
    s
}

/// Rows (t, x1, x2) of a CSV trajectory.
pub fn parse_trajectory_csv(text: &str) -> crate::Result<Vec<(f64, [C64; 2])>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Parse("missing trajectory CSV header".into()));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|_| Error::Parse(format!("bad number {s:?}")));
    lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let f: Vec<&str> = l.splitn(7, ',').collect();
            if f.len() < 6 {
                return Err(Error::Parse(format!("short row {l:?}")));
            }
            Ok((num(f[0])?, [C64::new(num(f[1])?, num(f[2])?), C64::new(num(f[3])?, num(f[4])?)]))
        })
        .collect()
}

pub const TRAJECTORY_SCHEMA: &str = "zerodyn.trajectory";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryDoc {
    pub schema: String,
    pub version: u32,
    /// model id, or "plane"
    pub source: String,
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<PlaneQuadraticSystem>,
    pub trajectory: Trajectory,
}

fn cmd_solve(cat: &Catalog, a: &SolveArgs, tol: &Tolerances, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let times = parse_grid(&a.t)?;
    let x0_given = a.x0.as_deref().map(|s| parse_pair(s, "--x0")).transpose()?;
    let (doc, tr) = match (&a.model, &a.plane) {
        (Some(id), None) => {
            let m = cat.get(id)?;
            let p = parse_params(&a.params)?;
            let inst = m.instantiate(&p)?;
            let x0 = match x0_given {
                Some(x) => x,
                None => Sampler::new(a.seed).point(0.5),
            };
            check_admissible(&inst, x0, tol).map_err(|e| Failure::config(format!("inadmissible initial zeros: {e}")))?;
            let tr = match a.method {
                SolveMethod::Analytic => solve_trajectory(&inst, x0, &times, tol)?,
                SolveMethod::Numeric => integrate_numeric(&inst, x0, &times, tol.ode)?,
            };
            (TrajectoryDoc { schema: TRAJECTORY_SCHEMA.into(), version: 1, source: m.id.clone(), params: p, plane: None, trajectory: tr.clone() }, tr)
        }
        (None, Some(table)) => {
            if !a.params.is_empty() {
                return Err(Failure::config("--param applies to catalog models only"));
            }
            let s = PlaneQuadraticSystem::new(parse_complex(&a.gauge)?, parse_table(table)?);
            let z0 = match x0_given {
                Some(z) => z,
                None => Sampler::new(a.seed).point(0.5),
            };
            let tr = match a.method {
                SolveMethod::Analytic => solve_quadratic_plane(&s, z0, &times, tol)?,
                SolveMethod::Numeric => integrate_plane_numeric(&s, z0, &times, tol.ode)?,
            };
            (TrajectoryDoc { schema: TRAJECTORY_SCHEMA.into(), version: 1, source: "plane".into(), params: Params::new(), plane: Some(s), trajectory: tr.clone() }, tr)
        }
        _ => return Err(Failure::config("solve needs exactly one of --model or --plane")),
    };
    let text = match a.format {
        Format::Csv => trajectory_csv(&tr),
        Format::Json => json(&doc),
    };
    emit(&a.output, &text, out)?;
    if let Some(sg) = tr.singularities.first() {
        let _ = writeln!(err, "zerodyn: trajectory stopped at t = {}: {}", sg.t, sg.kind);
        return Ok(EXIT_SINGULAR);
    }
    Ok(EXIT_OK)
}

/// Verdict for one model in the verify sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelVerdict {
    pub id: String,
    pub samples: usize,
    pub max_rhs_discrepancy: f64,
    /// printed map against printed right-hand side, for ledger models
    pub printed_discrepancy: Option<f64>,
    pub on_ledger: bool,
    pub trajectory_runs: usize,
    pub max_trajectory_deviation: Option<f64>,
    /// shortest horizon reached by a trajectory run
    pub min_horizon: Option<f64>,
    pub errors: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub version: u32,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub models: Vec<ModelVerdict>,
    /// ledger entries of the checked models
    pub ledger_hits: Vec<LedgerEntry>,
    pub pass: bool,
}

/// Per-model seed used by `verify`, from the run seed and the catalog index.
pub fn model_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64 + 1)
}

/// Analytic-vs-oracle runs for one model from random admissible data.
///
/// Draws that are inadmissible or blow up immediately are redrawn (at most
/// four times the requested count).
pub fn trajectory_sweep(m: &ModelSpec, runs: usize, seed: u64, tol: &Tolerances) -> (usize, f64, f64, Vec<String>) {
    let mut s = Sampler::new(seed);
    let (mut done, mut worst, mut min_h) = (0, 0.0f64, f64::INFINITY);
    let mut errors = Vec::new();
    let mut attempts = 0;
    while done < runs && attempts < 4 * runs {
        attempts += 1;
        let p = s.params(m, 1.0);
        let x0 = s.point(0.5);
        let Ok(inst) = m.instantiate(&p) else { continue };
        if check_admissible(&inst, x0, tol).is_err() {
            continue;
        }
        match oracle_run(&inst, x0, 1.0, 41, tol) {
            Ok(r) => {
                done += 1;
                worst = worst.max(r.max_relative);
                min_h = min_h.min(r.horizon);
                if r.permutation_mismatch {
                    errors.push(format!("labels swapped relative to the oracle (x0 = {x0:?})"));
                }
            }
            Err(Error::BlowUp { .. }) => continue,
            Err(e) => errors.push(e.to_string()),
        }
    }
    if done < runs {
        errors.push(format!("only {done} of {runs} trajectory runs completed"));
    }
    (done, worst, min_h, errors)
}

fn verify_model(cat: &Catalog, m: &ModelSpec, index: usize, a: &VerifyArgs, tol: &Tolerances) -> ModelVerdict {
    let seed = model_seed(a.seed, index);
    let mut errors = Vec::new();
    let (max_rhs, printed, on_ledger) = match check_model(cat, m, a.samples, seed) {
        Ok(c) => (c.max_discrepancy, c.printed_discrepancy, c.on_ledger),
        Err(e) => {
            errors.push(e.to_string());
            (f64::INFINITY, None, cat.ledger_entry(m).is_some())
        }
    };
    let (runs, dev, horizon) = if m.has_closed_form_path() && a.trajectories > 0 {
        let (done, worst, min_h, errs) = trajectory_sweep(m, a.trajectories, seed ^ 0x5bd1_e995, tol);
        errors.extend(errs);
        (done, Some(worst), Some(min_h))
    } else {
        (0, None, None)
    };
    let pass = errors.is_empty() && max_rhs <= tol.rhs_match && dev.is_none_or(|d| d <= tol.trajectory_match);
    ModelVerdict {
        id: m.id.clone(),
        samples: a.samples,
        max_rhs_discrepancy: max_rhs,
        printed_discrepancy: printed,
        on_ledger,
        trajectory_runs: runs,
        max_trajectory_deviation: dev,
        min_horizon: horizon,
        errors,
        pass,
    }
}

fn cmd_verify(cat: &Catalog, a: &VerifyArgs, tol: &Tolerances, out: &mut dyn Write) -> Outcome {
    let tol = match a.tol {
        Some(t) if t > 0.0 => tol.with_verification(t),
        Some(t) => return Err(Failure::config(format!("--tol must be positive, got {t}"))),
        None => *tol,
    };
    let models: Vec<(usize, &ModelSpec)> = match &a.model {
        Some(id) => {
            let m = cat.get(id)?;
            vec![(cat.models.iter().position(|o| o.id == m.id).unwrap_or(0), m)]
        }
        None => cat.models.iter().enumerate().filter(|(_, m)| m.duplicate_of.is_none()).collect(),
    };
    let sweep = || models.par_iter().map(|(i, m)| verify_model(cat, m, *i, a, &tol)).collect::<Vec<_>>();
    let verdicts = match a.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Failure::config(e.to_string()))?
            .install(sweep),
        None => sweep(),
    };
    let ledger_hits = models.iter().filter_map(|(_, m)| cat.ledger_entry(m).cloned()).collect();
    let pass = verdicts.iter().all(|v| v.pass);
    let report = VerifyReport { schema: "zerodyn.verify".into(), version: 1, seed: a.seed, tolerances: tol, models: verdicts, ledger_hits, pass };
    emit(&a.output, &json(&report), out)?;
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub table: Table,
    pub conda_residual: C64,
    /// relative to the fourth power of the coefficient scale
    pub conda_relative: f64,
    pub reducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Mat2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a2: Option<C64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b2: Option<C64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub round_trip: Option<f64>,
    pub alternatives: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn cmd_reduce(a: &ReduceArgs, tol: &Tolerances, out: &mut dyn Write) -> Outcome {
    let s = PlaneQuadraticSystem::new(ZERO, parse_table(&a.table)?);
    let residual = conda_residual(&s);
    let scale = conda_scale(&s);
    let mut report = ReduceReport {
        table: s.table,
        conda_residual: residual,
        conda_relative: if scale == 0.0 { 0.0 } else { residual.norm() / scale },
        reducible: false,
        a: None,
        a2: None,
        b2: None,
        round_trip: None,
        alternatives: 0,
        error: None,
    };
    match reduce_with_report(&s, tol) {
        Ok(r) => {
            report.reducible = true;
            report.a = Some(r.spec.a);
            report.a2 = Some(r.spec.a2);
            report.b2 = Some(r.spec.b2);
            report.round_trip = Some(r.round_trip);
            report.alternatives = r.alternatives.len();
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    emit(&a.output, &json(&report), out)?;
    Ok(if report.reducible { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsochronyReport {
    pub system: PlaneQuadraticSystem,
    pub z0: [C64; 2],
    pub base_period: Option<f64>,
    pub horizon: f64,
    pub estimate: Option<PeriodEstimate>,
}

fn cmd_isochrony(a: &IsochronyArgs, tol: &Tolerances, out: &mut dyn Write) -> Outcome {
    let gauge = parse_complex(&a.gauge)?;
    let table = match &a.table {
        Some(t) => parse_table(t)?,
        None => canonical_table(parse_complex(&a.a2)?, parse_complex(&a.b2)?),
    };
    let s = PlaneQuadraticSystem::new(gauge, table);
    let z0 = match &a.z0 {
        Some(z) => parse_pair(z, "--z0")?,
        None => {
            let mut smp = Sampler::new(a.seed);
            [smp.complex(0.05), smp.complex(0.05)]
        }
    };
    let base = GaugeTransform { a: gauge }.base_period();
    let horizon = a.horizon.unwrap_or(base.map_or(20.0, |b| 12.0 * b));
    let estimate = plane_period(&s, z0, horizon, tol)?;
    let found = estimate.is_some();
    emit(&a.output, &json(&IsochronyReport { system: s, z0, base_period: base, horizon, estimate }), out)?;
    Ok(if found { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub entries: usize,
    pub distinct: usize,
    pub models: Vec<ModelSummary>,
    /// duplicate id -> id of the model it repeats
    pub duplicates: BTreeMap<String, String>,
}

fn listing(cat: &Catalog) -> CatalogListing {
    let models = cat.list();
    let duplicates = models.iter().filter_map(|m| m.duplicate_of.clone().map(|d| (m.id.clone(), d))).collect();
    CatalogListing { entries: models.len(), distinct: cat.distinct().count(), models, duplicates }
}

fn cmd_catalog(cat: &Catalog, c: &CatalogCommand, out: &mut dyn Write) -> Outcome {
    match c {
        CatalogCommand::List { format } => {
            let l = listing(cat);
            let text = match format {
                Format::Json => json(&l),
                Format::Csv => {
                    let mut s = String::from("id,case,pair,variant,params,polynomiality,duplicate_of,ledger\n");
                    for m in &l.models {
                        s.push_str(&format!(
                            "{},{},{}{},{},{},{},{},{}\n",
                            m.id,
                            m.case,
                            m.pair[0],
                            m.pair[1],
                            m.variant,
                            m.params.join(" "),
                            m.polynomiality.replace(',', ";"),
                            m.duplicate_of.clone().unwrap_or_default(),
                            if m.on_ledger { "yes" } else { "" }
                        ));
                    }
                    s.push_str(&format!("# {} entries, {} distinct\n", l.entries, l.distinct));
                    s
                }
            };
            emit(&None, &text, out)?;
            Ok(EXIT_OK)
        }
        CatalogCommand::Show { id } => {
            let m = cat.get(id)?;
            let doc = cat.to_json_doc();
            let record = doc.models.into_iter().find(|r| r.id == m.id).expect("model present in its own document");
            #[derive(Serialize)]
            struct Show<'a> {
                model: crate::catalog::ModelJson,
                ledger: Option<&'a LedgerEntry>,
            }
            emit(&None, &json(&Show { model: record, ledger: cat.ledger_entry(m) }), out)?;
            Ok(EXIT_OK)
        }
        CatalogCommand::Verify { samples, seed } => {
            let tol = Tolerances::default();
            let models: Vec<(usize, &ModelSpec)> = cat.models.iter().enumerate().filter(|(_, m)| m.duplicate_of.is_none()).collect();
            let checks: Vec<_> = models.par_iter().map(|(i, m)| check_model(cat, m, *samples, model_seed(*seed, *i)).map_err(|e| (m.id.clone(), e))).collect();
            let mut rows = Vec::new();
            let mut pass = true;
            for c in checks {
                match c {
                    Ok(c) => {
                        pass &= c.max_discrepancy <= tol.rhs_match;
                        rows.push(serde_json::to_value(&c).expect("check serializes"));
                    }
                    Err((id, e)) => {
                        pass = false;
                        rows.push(serde_json::json!({ "id": id, "error": e.to_string() }));
                    }
                }
            }
            emit(&None, &json(&serde_json::json!({ "distinct": models.len(), "pass": pass, "models": rows })), out)?;
            Ok(if pass { EXIT_OK } else { EXIT_FAILED })
        }
        CatalogCommand::Export { output } => {
            let mut text = cat.to_json();
            text.push('\n');
            emit(output, &text, out)?;
            Ok(EXIT_OK)
        }
    }
}
