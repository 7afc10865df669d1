#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod format;
mod function;
mod preset;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use specint_core::fixtures::{run_suite, CaseReport, Outcome, Suite, SuiteReport};
use specint_core::{Error, SeriesControl};

use crate::format::g17;
use crate::function::{Family, FunctionId, ParamSet};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_CONVERGENCE: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Integral special functions: evaluation, tabulation and reference checks.
#[derive(Parser)]
#[command(name = "specint", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Tabulate a function (or a figure preset) as CSV.
    Grid(GridArgs),
    /// Run a fixture suite.
    Check(CheckArgs),
}

#[derive(Args)]
struct FnArgs {
    /// Function family, e.g. iml, mi_tail, mainardi_m, elementary:si.
    #[arg(long = "fn")]
    function: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    /// Numerator of a rational order p/q.
    #[arg(long)]
    p: Option<u32>,
    /// Denominator of a rational order p/q.
    #[arg(long)]
    q: Option<u32>,
}

#[derive(Args)]
struct ControlArgs {
    /// Relative truncation tolerance for series.
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Term budget for series (overrides SPECINT_MAX_TERMS).
    #[arg(long)]
    max_terms: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    func: FnArgs,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Emit a JSON record.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    ctrl: ControlArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Spacing {
    Linear,
    Log,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    func: FnArgs,
    #[arg(long, allow_hyphen_values = true)]
    min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    max: Option<f64>,
    #[arg(long, default_value_t = 101)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    spacing: Spacing,
    /// Figure preset: ei-alpha, ei-beta, mi, mi-tail, wi, wi-tail.
    #[arg(long)]
    fig: Option<String>,
    #[command(flatten)]
    ctrl: ControlArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// tables, identities, laplace, eq19 or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Same as `--report json`.
    #[arg(long)]
    json: bool,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: error_code(&e),
            message: format!("{}: {e}", e.name()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 74, message: format!("io error: {e}") }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::NoConvergence { .. } | Error::ToleranceNotMet { .. } => EXIT_CONVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Grid(args) => cmd_grid(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("specint: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn series_control(args: &ControlArgs) -> Result<SeriesControl, Failure> {
    let mut ctrl = SeriesControl::default();
    if let Ok(raw) = std::env::var("SPECINT_MAX_TERMS") {
        ctrl.max_terms = raw
            .trim()
            .parse()
            .map_err(|_| usage(format!("SPECINT_MAX_TERMS must be a positive integer, got `{raw}`")))?;
    }
    if let Some(n) = args.max_terms {
        ctrl.max_terms = n;
    }
    if let Some(t) = args.rel_tol {
        ctrl.rel_tol = t;
    }
    ctrl.validate().map_err(|e| usage(e.to_string()))?;
    Ok(ctrl)
}

fn function_id(args: &FnArgs) -> Result<FunctionId, Failure> {
    let name = args.function.as_deref().ok_or_else(|| usage("--fn is required"))?;
    let family: Family = name.parse().map_err(usage)?;
    let params = ParamSet {
        alpha: args.alpha,
        beta: args.beta,
        kappa: args.kappa,
        mu: args.mu,
        p: args.p,
        q: args.q,
    };
    FunctionId::new(family, params).map_err(|e| usage(e.to_string()))
}

#[derive(Serialize)]
struct EvalRecord<'a> {
    function: &'a str,
    x: f64,
    value: f64,
    est_error: f64,
    work: usize,
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let ctrl = series_control(&args.ctrl)?;
    let id = function_id(&args.func)?;
    let r = id.eval(args.x, &ctrl)?;
    let mut out = io::stdout().lock();
    if args.json {
        let rec = EvalRecord {
            function: args.func.function.as_deref().unwrap_or_default(),
            x: args.x,
            value: r.value,
            est_error: r.est_error,
            work: r.work,
        };
        let text = serde_json::to_string(&rec).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{text}")?;
    } else {
        writeln!(out, "value     {}", g17(r.value))?;
        writeln!(out, "est_error {}", g17(r.est_error))?;
        writeln!(out, "work      {}", r.work)?;
    }
    Ok(())
}

fn abscissae(min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>, Failure> {
    if points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    if !(min < max) {
        return Err(usage("--min must be below --max"));
    }
    let n = (points - 1) as f64;
    match spacing {
        Spacing::Linear => Ok((0..points)
            .map(|i| if i == points - 1 { max } else { min + (max - min) * i as f64 / n })
            .collect()),
        Spacing::Log => {
            if !(min > 0.0) {
                return Err(usage("log spacing needs --min > 0"));
            }
            let (a, b) = (min.ln(), max.ln());
            Ok((0..points)
                .map(|i| match i {
                    0 => min,
                    i if i == points - 1 => max,
                    i => (a + (b - a) * i as f64 / n).exp(),
                })
                .collect())
        }
    }
}

fn cmd_grid(args: GridArgs) -> Result<(), Failure> {
    let ctrl = series_control(&args.ctrl)?;
    let (curves, default_range) = match args.fig.as_deref() {
        Some(name) => {
            if args.func.function.is_some() {
                return Err(usage("--fig and --fn are mutually exclusive"));
            }
            let preset = preset::lookup(name)
                .ok_or_else(|| usage(format!("unknown preset `{name}`; known: {}", preset::NAMES.join(", "))))?
                .map_err(|e| usage(e.to_string()))?;
            let curves: Vec<_> = preset.curves.into_iter().map(|c| (Some(c.label), c.function)).collect();
            (curves, Some((preset.x_min, preset.x_max)))
        }
        None => (vec![(None, function_id(&args.func)?)], None),
    };
    let (min, max) = match (args.min, args.max, default_range) {
        (Some(a), Some(b), _) => (a, b),
        (a, b, Some((lo, hi))) => (a.unwrap_or(lo), b.unwrap_or(hi)),
        _ => return Err(usage("--min and --max are required without --fig")),
    };
    let xs = abscissae(min, max, args.points, args.spacing)?;

    let mut out = BufWriter::new(io::stdout().lock());
    let labelled = args.fig.is_some();
    if labelled {
        writeln!(out, "curve,x,value,est_error,work")?;
    } else {
        writeln!(out, "x,value,est_error,work")?;
    }
    let mut worst: Option<Error> = None;
    for (label, id) in &curves {
        for &x in &xs {
            let (value, est, work) = match id.eval(x, &ctrl) {
                Ok(r) => (r.value, r.est_error, r.work),
                Err(e) => {
                    eprintln!("specint: x = {}: {}: {e}", g17(x), e.name());
                    if worst.as_ref().is_none_or(|w| error_code(&e) > error_code(w)) {
                        worst = Some(e);
                    }
                    (f64::NAN, f64::NAN, 0)
                }
            };
            if let Some(label) = label {
                write!(out, "{label},")?;
            }
            writeln!(out, "{},{},{},{}", g17(x), g17(value), g17(est), work)?;
        }
    }
    out.flush()?;
    match worst {
        Some(e) => Err(Failure { code: error_code(&e), message: String::new() }),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct JsonCase<'a> {
    id: &'a str,
    paper_ref: &'a str,
    max_rel_err: f64,
    tol: Option<f64>,
    status: &'static str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: String,
    cases: Vec<JsonCase<'a>>,
}

fn write_text_report(out: &mut impl Write, report: &SuiteReport) -> io::Result<()> {
    writeln!(out, "suite {}", report.suite)?;
    for c in &report.cases {
        write_case(out, c)?;
    }
    let failing = report.failing_ids();
    let asserted = report.cases.iter().filter(|c| c.status != Outcome::Info).count();
    let info = report.cases.len() - asserted;
    if failing.is_empty() {
        writeln!(out, "PASS {asserted} asserted, {info} informational")
    } else {
        writeln!(out, "FAIL {} of {asserted}: {}", failing.len(), failing.join(", "))
    }
}

fn write_case(out: &mut impl Write, c: &CaseReport) -> io::Result<()> {
    let tol = c.tol.map_or_else(|| "-".to_string(), g17);
    write!(
        out,
        "{:<4} {:<36} max_rel_err={:<24} tol={:<8} {}",
        c.status.name(),
        c.id,
        g17(c.max_rel_err),
        tol,
        c.paper_ref
    )?;
    if let Some(note) = &c.note {
        write!(out, " [{note}]")?;
    }
    writeln!(out)
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse().map_err(|e: Error| usage(e.to_string()))?;
    let report = run_suite(suite);
    let mut out = BufWriter::new(io::stdout().lock());
    if args.json || matches!(args.report, ReportFormat::Json) {
        let json = JsonReport {
            suite: report.suite.to_string(),
            cases: report
                .cases
                .iter()
                .map(|c| JsonCase {
                    id: &c.id,
                    paper_ref: &c.paper_ref,
                    max_rel_err: c.max_rel_err,
                    tol: c.tol,
                    status: c.status.name(),
                })
                .collect(),
        };
        let text = serde_json::to_string_pretty(&json).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{text}")?;
    } else {
        write_text_report(&mut out, &report)?;
    }
    out.flush()?;
    if report.passed() {
        Ok(())
    } else {
        let ids = report.failing_ids().join(", ");
        Err(Failure { code: EXIT_CHECK_FAILED, message: format!("failing cases: {ids}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_log_grids() {
        let xs = abscissae(0.0, 1.0, 5, Spacing::Linear).ok().unwrap();
        assert_eq!(xs, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let xs = abscissae(1.0, 100.0, 3, Spacing::Log).ok().unwrap();
        assert!((xs[1] - 10.0).abs() < 1e-12);
        assert_eq!(xs[2], 100.0);
        assert!(abscissae(0.0, 1.0, 3, Spacing::Log).is_err());
        assert!(abscissae(1.0, 1.0, 3, Spacing::Linear).is_err());
        assert!(abscissae(0.0, 1.0, 1, Spacing::Linear).is_err());
    }

    #[test]
    fn exit_codes_by_error() {
        assert_eq!(error_code(&Error::NoConvergence { terms: 3 }), EXIT_CONVERGENCE);
        assert_eq!(error_code(&Error::Domain("x".into())), EXIT_DOMAIN);
        assert_eq!(error_code(&Error::InvalidParams("x".into())), EXIT_DOMAIN);
    }
}
