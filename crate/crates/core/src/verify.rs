//! Admissibility checks, left/right comparison and reports.
//!
//! A series identity is verified by building both sides as exact truncated
//! series and diffing every coefficient up to the cap; the float evaluation
//! of both sides is recorded alongside as advisory evidence. The Gauss
//! second and Watson sums only have the float path, so their verdict comes
//! from it.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::exact::{pochhammer_zero_index, Rational};
pub use crate::expr::{AdmissibilityFinding, Severity};
use crate::identities::{
    default_cap, gauss_second_float, gauss_terminating, sides, watson_float, IdentityId,
    IdentityParams,
};

pub const DEFAULT_FLOAT_POINTS: [f64; 6] = [-8.0, -2.0, -0.5, 0.5, 2.0, 8.0];
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ExactMatch,
    Mismatch,
    Inadmissible,
    FloatOnlyPass,
    FloatOnlyFail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        matches!(self, Status::ExactMatch | Status::FloatOnlyPass)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::ExactMatch => "exact_match",
            Status::Mismatch => "mismatch",
            Status::Inadmissible => "inadmissible",
            Status::FloatOnlyPass => "float_only_pass",
            Status::FloatOnlyFail => "float_only_fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FloatResidual {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub relative_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub params: IdentityParams,
    pub cap: usize,
    pub status: Status,
    pub findings: Vec<AdmissibilityFinding>,
    pub mismatches: Vec<Mismatch>,
    pub float_residuals: Vec<FloatResidual>,
    /// Which numerator reading the mixed-sign product was built with.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    pub notes: Vec<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_millis")]
    pub elapsed: Duration,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerifyReport {
    fn new(identity: IdentityId, params: &IdentityParams) -> Self {
        let reading = identity.has_printed_form().then(|| {
            if params.printed_form {
                "(-j)_m as printed".to_string()
            } else {
                "(-j)_n".to_string()
            }
        });
        VerifyReport {
            identity,
            params: params.clone(),
            cap: params.cap,
            status: Status::Inadmissible,
            findings: Vec::new(),
            mismatches: Vec::new(),
            float_residuals: Vec::new(),
            reading,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn max_float_residual(&self) -> Option<f64> {
        self.float_residuals
            .iter()
            .map(|r| r.relative_error)
            .fold(None, |acc, e| Some(acc.map_or(e, |a: f64| a.max(e))))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub float_points: Vec<f64>,
    pub tol: f64,
    /// Adds the given value to one right-side coefficient before diffing.
    pub rhs_perturbation: Option<(usize, Rational)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            float_points: DEFAULT_FLOAT_POINTS.to_vec(),
            tol: DEFAULT_TOL,
            rhs_perturbation: None,
        }
    }
}

/// Every vanishing denominator or nonpositive-integer lower parameter the
/// identity meets at `params`; empty iff the point is admissible.
pub fn check_admissible(identity: IdentityId, params: &IdentityParams) -> Vec<AdmissibilityFinding> {
    match identity {
        IdentityId::GaussTerminating => {
            let (Some(c), Some(n)) = (&params.c, params.alpha.as_nonpositive_integer()) else {
                return Vec::new();
            };
            pochhammer_zero_index(c)
                .filter(|&m| m <= n)
                .map(|m| AdmissibilityFinding::fatal("(c)_k", m))
                .into_iter()
                .collect()
        }
        IdentityId::GaussSecondFloat => {
            let c = (&params.alpha + &params.beta + Rational::one()) * Rational::frac(1, 2);
            c.as_nonpositive_integer()
                .map(|k| AdmissibilityFinding::fatal(format!("lower parameter (a + b + 1)/2 = {c}"), k))
                .into_iter()
                .collect()
        }
        IdentityId::WatsonFloat => {
            let Some(c) = &params.c else {
                return Vec::new();
            };
            let lower = [
                ("(a + b + 1)/2", (&params.alpha + &params.beta + Rational::one()) * Rational::frac(1, 2)),
                ("2c", c * Rational::from(2)),
            ];
            lower
                .into_iter()
                .filter_map(|(label, value)| {
                    value
                        .as_nonpositive_integer()
                        .map(|k| AdmissibilityFinding::fatal(format!("lower parameter {label} = {value}"), k))
                })
                .collect()
        }
        _ => match sides(identity, params) {
            Ok((lhs, rhs)) => {
                let mut findings = lhs.findings(params.cap);
                findings.extend(rhs.findings(params.cap));
                findings.sort();
                findings.dedup();
                findings
            }
            Err(_) => Vec::new(),
        },
    }
}

fn relative_error(lhs: f64, rhs: f64) -> f64 {
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).abs() / scale
    }
}

/// Builds both sides of `identity` at `params` and compares them.
pub fn verify_identity(identity: IdentityId, params: &IdentityParams, options: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new(identity, params);
    report.findings = check_admissible(identity, params);
    if report.findings.is_empty() {
        if identity.is_classical_sum() {
            verify_classical(identity, params, options, &mut report);
        } else {
            verify_series(identity, params, options, &mut report);
        }
    } else {
        report.status = Status::Inadmissible;
    }
    report.elapsed = start.elapsed();
    report
}

fn verify_series(identity: IdentityId, params: &IdentityParams, options: &VerifyOptions, report: &mut VerifyReport) {
    let built = sides(identity, params).and_then(|(lhs, rhs)| {
        let lhs_series = lhs.to_series(params.cap)?;
        let mut rhs_series = rhs.to_series(params.cap)?;
        if let Some((degree, delta)) = &options.rhs_perturbation {
            if *degree <= rhs_series.cap() {
                let bumped = rhs_series.coeff(*degree) + delta;
                rhs_series.set_coeff(*degree, bumped);
            }
        }
        Ok((lhs, rhs, lhs_series, rhs_series))
    });
    let (lhs, rhs, lhs_series, rhs_series) = match built {
        Ok(parts) => parts,
        Err(err @ Error::DegenerateParameter { .. }) => {
            report.status = Status::Inadmissible;
            report.notes.push(err.to_string());
            return;
        }
        Err(err) => {
            report.status = Status::Inadmissible;
            report.notes.push(format!("internal failure: {err}"));
            return;
        }
    };
    report.mismatches = lhs_series
        .differing_degrees(&rhs_series)
        .into_iter()
        .map(|k| Mismatch {
            degree: k,
            lhs: lhs_series.coeff(k),
            rhs: rhs_series.coeff(k),
        })
        .collect();
    report.status = if report.mismatches.is_empty() {
        Status::ExactMatch
    } else {
        Status::Mismatch
    };

    for &x in &options.float_points {
        match (lhs.eval_float(x), rhs.eval_float(x)) {
            (Ok(l), Ok(r)) => report.float_residuals.push(FloatResidual {
                x,
                lhs: l,
                rhs: r,
                relative_error: relative_error(l, r),
            }),
            (Err(err), _) | (_, Err(err)) => report.notes.push(format!("float evaluation at x = {x}: {err}")),
        }
    }
    if let Some(worst) = report.max_float_residual() {
        if worst > options.tol {
            report.notes.push(format!(
                "float residual {worst:e} exceeds tolerance {:e} (advisory)",
                options.tol
            ));
        }
    }
}

fn verify_classical(identity: IdentityId, params: &IdentityParams, options: &VerifyOptions, report: &mut VerifyReport) {
    let (a, b) = (&params.alpha, &params.beta);
    let needs_c = || {
        params.c.clone().ok_or_else(|| Error::Refused {
            condition: format!("identity {identity} needs the parameter c"),
        })
    };
    match identity {
        IdentityId::GaussTerminating => {
            report.cap = 0;
            match needs_c().and_then(|c| gauss_terminating(a, b, &c)) {
                Ok((lhs, rhs)) => {
                    if lhs == rhs {
                        report.status = Status::ExactMatch;
                    } else {
                        report.status = Status::Mismatch;
                        report.mismatches.push(Mismatch { degree: 0, lhs, rhs });
                    }
                }
                Err(err) => {
                    report.status = Status::Inadmissible;
                    report.notes.push(err.to_string());
                }
            }
        }
        IdentityId::GaussSecondFloat | IdentityId::WatsonFloat => {
            report.cap = 0;
            let (x, outcome) = if identity == IdentityId::GaussSecondFloat {
                (0.5, gauss_second_float(a, b))
            } else {
                (1.0, needs_c().and_then(|c| watson_float(a, b, &c, options.tol)))
            };
            match outcome {
                Ok((lhs, rhs)) => {
                    let err = relative_error(lhs, rhs);
                    report.float_residuals.push(FloatResidual { x, lhs, rhs, relative_error: err });
                    report.status = if err <= options.tol {
                        Status::FloatOnlyPass
                    } else {
                        Status::FloatOnlyFail
                    };
                }
                Err(err @ (Error::Refused { .. } | Error::DegenerateParameter { .. })) => {
                    report.status = Status::Inadmissible;
                    report.notes.push(err.to_string());
                }
                Err(err) => {
                    report.status = Status::FloatOnlyFail;
                    report.notes.push(err.to_string());
                }
            }
        }
        _ => unreachable!("not a classical sum"),
    }
}

/// Settings shared by every point of a sweep.
#[derive(Clone, Debug, Default)]
pub struct PointTemplate {
    /// Fixed cap; `None` means `2(i+j) + 16` per point.
    pub cap: Option<usize>,
    pub c: Option<Rational>,
    pub printed_form: bool,
}

impl PointTemplate {
    pub fn with_cap(cap: usize) -> Self {
        PointTemplate {
            cap: Some(cap),
            ..PointTemplate::default()
        }
    }
}

/// Verifies every point of `alpha_set x beta_set x 0..=i_max x 0..=j_max`.
///
/// Axes the identity does not read are collapsed to a single point. Reports
/// are ordered by `(alpha, beta, i, j)` ascending regardless of the order
/// in which the parallel workers finish.
pub fn sweep(
    identity: IdentityId,
    alpha_set: &[Rational],
    beta_set: &[Rational],
    i_max: usize,
    j_max: usize,
    template: &PointTemplate,
    options: &VerifyOptions,
) -> Vec<VerifyReport> {
    let uses = identity.uses();
    let sorted = |set: &[Rational]| {
        let mut v = set.to_vec();
        v.sort();
        v.dedup();
        v
    };
    let alphas = sorted(alpha_set);
    let betas = if uses.beta {
        sorted(beta_set)
    } else {
        vec![beta_set.first().cloned().unwrap_or_default()]
    };
    let i_range = if uses.i { 0..=i_max } else { 0..=0 };
    let j_range = if uses.j { 0..=j_max } else { 0..=0 };

    let mut points = Vec::new();
    for alpha in &alphas {
        for beta in &betas {
            for i in i_range.clone() {
                for j in j_range.clone() {
                    let mut params = IdentityParams::new(alpha.clone(), beta.clone(), i, j)
                        .with_cap(template.cap.unwrap_or_else(|| default_cap(i, j)))
                        .with_printed_form(template.printed_form);
                    params.c = template.c.clone();
                    points.push(params);
                }
            }
        }
    }
    points
        .par_iter()
        .map(|params| verify_identity(identity, params, options))
        .collect()
}

pub const CSV_HEADER: &str = "identity,alpha,beta,i,j,cap,status,mismatches,max_float_residual,elapsed_ms";

pub fn render_csv(reports: &[VerifyReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let worst = r.max_float_residual().map(|e| format!("{e:e}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{:.3}",
            r.identity,
            r.params.alpha,
            r.params.beta,
            r.params.i,
            r.params.j,
            r.cap,
            r.status.as_str(),
            r.mismatches.len(),
            worst,
            r.elapsed.as_secs_f64() * 1e3
        );
    }
    out
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let p = &report.params;
    let _ = write!(
        out,
        "[{}] {}  alpha={} beta={} i={} j={}",
        report.identity,
        report.identity.name(),
        p.alpha,
        p.beta,
        p.i,
        p.j
    );
    if let Some(c) = &p.c {
        let _ = write!(out, " c={c}");
    }
    let _ = writeln!(out, " cap={}", report.cap);
    let _ = writeln!(out, "  status: {}", report.status.as_str());
    if let Some(reading) = &report.reading {
        let _ = writeln!(out, "  reading: {reading}");
    }
    for f in &report.findings {
        let _ = writeln!(out, "  finding: {} vanishes at index {}", f.parameter_expr, f.index);
    }
    for m in &report.mismatches {
        let _ = writeln!(out, "  mismatch at degree {}: lhs {} rhs {}", m.degree, m.lhs, m.rhs);
    }
    for r in &report.float_residuals {
        let _ = writeln!(
            out,
            "  float x={}: lhs {:.15e} rhs {:.15e} rel {:.2e}",
            r.x, r.lhs, r.rhs, r.relative_error
        );
    }
    for n in &report.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}
