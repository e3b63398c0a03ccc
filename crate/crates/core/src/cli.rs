//! Command-line front end.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! what should go to standard output and standard error, so the binary is a
//! thin shell around it and tests can drive it directly.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exact::{parse_rational, Rational};
use crate::identities::{default_cap, sides, IdentityId, IdentityParams};
use crate::verify::{
    check_admissible, render_csv, render_text, sweep, verify_identity, PointTemplate, VerifyOptions,
    VerifyReport,
    DEFAULT_FLOAT_POINTS,
};

#[derive(Debug, Parser)]
#[command(name = "bailey", version, about = "Exact verification of contiguous 1F1 product identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify one identity at one parameter point.
    Verify(PointArgs),
    /// Verify an identity over a parameter grid.
    Sweep(SweepArgs),
    /// Print the truncated series of one or both sides.
    Expand {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Evaluate both sides in floating point at x.
    Eval {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// List the identity catalog.
    List {
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Side {
    Lhs,
    Rhs,
    Both,
}

fn identity_arg(text: &str) -> Result<IdentityId, String> {
    IdentityId::from_tag(text.trim()).ok_or_else(|| format!("unknown identity tag `{text}` (see `bailey list`)"))
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Identity tag, e.g. 2.1
    #[arg(long, value_parser = identity_arg)]
    identity: IdentityId,
    /// Degree cap N; defaults to 2(i+j)+16
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Relative tolerance for float comparisons
    #[arg(long, default_value_t = crate::verify::DEFAULT_TOL)]
    tol: f64,
    /// Build the mixed-sign product with the numerator factor (-j)_m exactly as typeset
    #[arg(long)]
    printed_form: bool,
    /// Third parameter c of the Gauss and Watson sums
    #[arg(long, value_parser = rational_arg, allow_negative_numbers = true)]
    c: Option<Rational>,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_parser = rational_arg, allow_negative_numbers = true)]
    alpha: Rational,
    /// Second parameter; required by identities that read it
    #[arg(long, value_parser = rational_arg, allow_negative_numbers = true)]
    beta: Option<Rational>,
    #[arg(long = "i", default_value_t = 0)]
    i: usize,
    #[arg(long = "j", default_value_t = 0)]
    j: usize,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated alpha values
    #[arg(long, value_parser = rational_arg, value_delimiter = ',', allow_hyphen_values = true)]
    alphas: Vec<Rational>,
    /// Comma-separated beta values
    #[arg(long, value_parser = rational_arg, value_delimiter = ',', allow_hyphen_values = true, default_value = "2/5")]
    betas: Vec<Rational>,
    #[arg(long, default_value_t = 0)]
    i_max: usize,
    #[arg(long, default_value_t = 0)]
    j_max: usize,
}

/// Exit code and rendered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn ok(stdout: String) -> Self {
        CliOutcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

/// Exit status for a set of reports: 0 iff every one passed.
pub fn exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(|r| r.status.is_pass()) {
        0
    } else {
        1
    }
}

impl PointArgs {
    fn params(&self) -> Result<IdentityParams, CliOutcome> {
        let identity = self.common.identity;
        let uses = identity.uses();
        let beta = match (&self.beta, uses.beta) {
            (Some(beta), _) => beta.clone(),
            (None, false) => Rational::zero(),
            (None, true) => return Err(CliOutcome::usage(format!("identity {identity} needs --beta"))),
        };
        if uses.c && self.common.c.is_none() {
            return Err(CliOutcome::usage(format!("identity {identity} needs --c")));
        }
        let mut params = IdentityParams::new(self.alpha.clone(), beta, self.i, self.j)
            .with_cap(self.common.degree.unwrap_or_else(|| default_cap(self.i, self.j)))
            .with_printed_form(self.common.printed_form);
        params.c = self.common.c.clone();
        Ok(params)
    }
}

fn options(common: &CommonArgs) -> VerifyOptions {
    VerifyOptions {
        float_points: DEFAULT_FLOAT_POINTS.to_vec(),
        tol: common.tol,
        rhs_perturbation: None,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn first_finding(identity: IdentityId, params: &IdentityParams) -> Option<String> {
    check_admissible(identity, params).into_iter().next().map(|f| {
        format!(
            "inadmissible parameters for {identity}: {} vanishes at index {}",
            f.parameter_expr, f.index
        )
    })
}

pub fn run<I, S>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutcome::ok(rendered)
                }
                _ => CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{}\n", rendered.lines().next().unwrap_or("error: invalid arguments")),
                },
            };
        }
    };
    match cli.command {
        Command::Verify(point) => run_verify(&point),
        Command::Sweep(args) => run_sweep(&args),
        Command::Expand { point, side } => run_expand(&point, side),
        Command::Eval { point, x } => run_eval(&point, x),
        Command::List { output } => run_list(output),
    }
}

fn run_verify(point: &PointArgs) -> CliOutcome {
    let identity = point.common.identity;
    let params = match point.params() {
        Ok(params) => params,
        Err(outcome) => return outcome,
    };
    let report = verify_identity(identity, &params, &options(&point.common));
    let stdout = match point.common.output {
        Output::Text => render_text(&report),
        Output::Json => to_json(&report),
        Output::Csv => render_csv(std::slice::from_ref(&report)),
    };
    let code = exit_code(std::slice::from_ref(&report));
    let stderr = if code == 0 {
        String::new()
    } else if let Some(f) = report.findings.first() {
        format!(
            "error: inadmissible parameters for {identity}: {} vanishes at index {}\n",
            f.parameter_expr, f.index
        )
    } else if let Some(m) = report.mismatches.first() {
        format!(
            "error: {identity} failed: {} mismatching coefficients, first at degree {}\n",
            report.mismatches.len(),
            m.degree
        )
    } else {
        format!(
            "error: {identity} status {}{}\n",
            report.status.as_str(),
            report.notes.first().map(|n| format!(": {n}")).unwrap_or_default()
        )
    };
    CliOutcome { code, stdout, stderr }
}

fn run_sweep(args: &SweepArgs) -> CliOutcome {
    let reports = sweep(
        args.common.identity,
        &args.alphas,
        &args.betas,
        args.i_max,
        args.j_max,
        &PointTemplate {
            cap: args.common.degree,
            c: args.common.c.clone(),
            printed_form: args.common.printed_form,
        },
        &options(&args.common),
    );
    let stdout = match args.common.output {
        Output::Text => reports.iter().map(render_text).collect::<Vec<_>>().join(""),
        Output::Json => to_json(&reports),
        Output::Csv => render_csv(&reports),
    };
    let code = exit_code(&reports);
    let failed = reports.iter().filter(|r| !r.status.is_pass()).count();
    let stderr = if code == 0 {
        String::new()
    } else {
        format!("error: {failed} of {} sweep points did not pass\n", reports.len())
    };
    CliOutcome { code, stdout, stderr }
}

#[derive(Serialize)]
struct ExpansionDoc {
    identity: IdentityId,
    params: IdentityParams,
    cap: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<crate::series::TruncatedSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<crate::series::TruncatedSeries>,
}

fn run_expand(point: &PointArgs, side: Side) -> CliOutcome {
    let identity = point.common.identity;
    let params = match point.params() {
        Ok(params) => params,
        Err(outcome) => return outcome,
    };
    if let Some(message) = first_finding(identity, &params) {
        return CliOutcome::usage(message);
    }
    let (lhs, rhs) = match sides(identity, &params) {
        Ok(pair) => pair,
        Err(err) => return CliOutcome::usage(err.to_string()),
    };
    let build = |want: bool, expr: &crate::expr::Expr| want.then(|| expr.to_series(params.cap)).transpose();
    let lhs_series = build(side != Side::Rhs, &lhs);
    let rhs_series = build(side != Side::Lhs, &rhs);
    let (lhs_series, rhs_series) = match (lhs_series, rhs_series) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(err), _) | (_, Err(err)) => return CliOutcome::usage(err.to_string()),
    };
    let doc = ExpansionDoc {
        identity,
        cap: params.cap,
        params,
        lhs: lhs_series,
        rhs: rhs_series,
    };
    let stdout = match point.common.output {
        Output::Json => to_json(&doc),
        Output::Text | Output::Csv => {
            let mut out = format!("[{}] {} cap={}\n", identity, identity.name(), doc.cap);
            if let Some(l) = &doc.lhs {
                out.push_str(&format!("lhs = {l}\n"));
            }
            if let Some(r) = &doc.rhs {
                out.push_str(&format!("rhs = {r}\n"));
            }
            out
        }
    };
    CliOutcome::ok(stdout)
}

#[derive(Serialize)]
struct EvalDoc {
    identity: IdentityId,
    x: f64,
    lhs: f64,
    rhs: f64,
    relative_error: f64,
    /// Horner values of the exact truncated series at the same x.
    lhs_truncated: Option<f64>,
    rhs_truncated: Option<f64>,
    cap: usize,
}

fn run_eval(point: &PointArgs, x: f64) -> CliOutcome {
    let identity = point.common.identity;
    let params = match point.params() {
        Ok(params) => params,
        Err(outcome) => return outcome,
    };
    if let Some(message) = first_finding(identity, &params) {
        return CliOutcome::usage(message);
    }
    let (lhs, rhs) = match sides(identity, &params) {
        Ok(pair) => pair,
        Err(err) => return CliOutcome::usage(err.to_string()),
    };
    let (l, r) = match (lhs.eval_float(x), rhs.eval_float(x)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(err), _) | (_, Err(err)) => {
            return CliOutcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: float evaluation failed: {err}\n"),
            }
        }
    };
    let horner = |e: &crate::expr::Expr| e.to_series(params.cap).ok().and_then(|s| s.eval_float(x).ok());
    let scale = l.abs().max(r.abs());
    let doc = EvalDoc {
        identity,
        x,
        lhs: l,
        rhs: r,
        relative_error: if scale == 0.0 { 0.0 } else { (l - r).abs() / scale },
        lhs_truncated: horner(&lhs),
        rhs_truncated: horner(&rhs),
        cap: params.cap,
    };
    let stdout = match point.common.output {
        Output::Json => to_json(&doc),
        Output::Text | Output::Csv => {
            let fmt_opt = |v: Option<f64>| v.map(|v| format!("{v:.15e}")).unwrap_or_else(|| "n/a".into());
            format!(
                "[{}] x={}\n  lhs {:.15e}\n  rhs {:.15e}\n  rel {:.2e}\n  truncated at degree {}: lhs {} rhs {}\n",
                identity,
                x,
                doc.lhs,
                doc.rhs,
                doc.relative_error,
                doc.cap,
                fmt_opt(doc.lhs_truncated),
                fmt_opt(doc.rhs_truncated)
            )
        }
    };
    CliOutcome::ok(stdout)
}

#[derive(Serialize)]
struct CatalogEntry {
    tag: &'static str,
    name: &'static str,
    parameters: Vec<&'static str>,
}

fn run_list(output: Output) -> CliOutcome {
    let entries: Vec<CatalogEntry> = IdentityId::ALL
        .into_iter()
        .map(|id| {
            let uses = id.uses();
            let mut parameters = vec!["alpha"];
            parameters.extend(uses.beta.then_some("beta"));
            parameters.extend(uses.i.then_some("i"));
            parameters.extend(uses.j.then_some("j"));
            parameters.extend(uses.c.then_some("c"));
            CatalogEntry { tag: id.tag(), name: id.name(), parameters }
        })
        .collect();
    let stdout = match output {
        Output::Json => to_json(&entries),
        Output::Csv => {
            let mut out = String::from("tag,name,parameters\n");
            for e in &entries {
                out.push_str(&format!("{},\"{}\",{}\n", e.tag, e.name, e.parameters.join(" ")));
            }
            out
        }
        Output::Text => entries
            .iter()
            .map(|e| format!("{:<5} {:<52} [{}]\n", e.tag, e.name, e.parameters.join(", ")))
            .collect(),
    };
    CliOutcome::ok(stdout)
}
