//! Small expression trees for the two sides of an identity.
//!
//! A side is a sum/product of hypergeometric factors with an argument map,
//! exponentials, powers of `x` and rational coefficients. The same tree is
//! evaluated exactly (as a [`TruncatedSeries`]) and in floating point, and
//! it can list every vanishing denominator before anything is divided.

use crate::error::{Error, Result};
use crate::exact::{pochhammer, pochhammer_zero_index, Rational};
use crate::hyper::{pfq_eval_float, pfq_series, CompensatedSum, HypSpec};
use crate::series::{exp_series, Sign, TruncatedSeries};

/// Hard limit on float terms per hypergeometric factor.
const FLOAT_MAX_TERMS: usize = 5_000;

/// A parameter restriction that fails at the given parameter point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct AdmissibilityFinding {
    pub parameter_expr: String,
    /// Summation or series index at which the factor vanishes.
    pub index: usize,
    pub severity: Severity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Fatal,
}

impl AdmissibilityFinding {
    pub fn fatal(parameter_expr: impl Into<String>, index: usize) -> Self {
        AdmissibilityFinding {
            parameter_expr: parameter_expr.into(),
            index,
            severity: Severity::Fatal,
        }
    }

    pub fn into_error(self) -> Error {
        Error::DegenerateParameter {
            expr: self.parameter_expr,
            index: self.index,
        }
    }
}

/// `(base)_index`, labelled for diagnostics, e.g. `(alpha - 1/2)_m`.
#[derive(Clone, Debug)]
pub struct PochFactor {
    pub label: String,
    pub base: Rational,
    pub index: usize,
}

impl PochFactor {
    pub fn new(label: impl Into<String>, base: Rational, index: usize) -> Self {
        PochFactor {
            label: label.into(),
            base,
            index,
        }
    }

    fn value(&self) -> Rational {
        pochhammer(&self.base, self.index)
    }

    fn vanishes(&self) -> Option<usize> {
        pochhammer_zero_index(&self.base).filter(|&m| m <= self.index)
    }
}

/// `constant * prod(numer) / prod(denom)`.
#[derive(Clone, Debug)]
pub struct Coefficient {
    pub constant: Rational,
    pub numer: Vec<PochFactor>,
    pub denom: Vec<PochFactor>,
}

impl Coefficient {
    pub fn constant(c: Rational) -> Self {
        Coefficient {
            constant: c,
            numer: Vec::new(),
            denom: Vec::new(),
        }
    }

    pub fn findings(&self) -> Vec<AdmissibilityFinding> {
        self.denom
            .iter()
            .filter_map(|f| f.vanishes().map(|m| AdmissibilityFinding::fatal(f.label.clone(), m)))
            .collect()
    }

    pub fn value(&self) -> Result<Rational> {
        if let Some(finding) = self.findings().into_iter().next() {
            return Err(finding.into_error());
        }
        let numer: Rational = self.numer.iter().map(PochFactor::value).product();
        let denom: Rational = self.denom.iter().map(PochFactor::value).product();
        (&self.constant * numer).checked_div(&denom)
    }
}

/// How the series variable `t` depends on `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Argument {
    /// `t = c * x`
    Linear(Rational),
    /// `t = c * x^2`
    Square(Rational),
}

#[derive(Clone, Debug)]
pub struct HypTerm {
    pub spec: HypSpec,
    /// One label per lower parameter, used in findings.
    pub lower_labels: Vec<String>,
    pub argument: Argument,
}

impl HypTerm {
    fn series_depth(&self, cap: usize) -> usize {
        match self.argument {
            Argument::Linear(_) => cap,
            Argument::Square(_) => cap / 2,
        }
    }

    fn findings(&self, cap: usize) -> Vec<AdmissibilityFinding> {
        let depth = self.series_depth(cap);
        self.spec
            .lower
            .iter()
            .zip(&self.lower_labels)
            .filter_map(|(b, label)| match b.as_nonpositive_integer() {
                Some(k) if k < depth.max(1) => Some(AdmissibilityFinding::fatal(
                    format!("lower parameter {label} = {b}"),
                    k,
                )),
                _ => None,
            })
            .collect()
    }

    fn to_series(&self, cap: usize) -> Result<TruncatedSeries> {
        if let Some(finding) = self.findings(cap).into_iter().next() {
            return Err(finding.into_error());
        }
        match &self.argument {
            Argument::Linear(c) => {
                let s = pfq_series(&self.spec, cap)?;
                Ok(if c.is_one() {
                    s
                } else if *c == Rational::from(-1) {
                    s.negate_argument()
                } else {
                    s.scale_argument(c)
                })
            }
            Argument::Square(c) => {
                let s = pfq_series(&self.spec, cap / 2)?;
                Ok(s.substitute_even(&c.recip()?)?.truncate(cap))
            }
        }
    }

    fn eval_float(&self, x: f64) -> Result<f64> {
        let t = match &self.argument {
            Argument::Linear(c) => to_f64(c)? * x,
            Argument::Square(c) => to_f64(c)? * x * x,
        };
        Ok(pfq_eval_float(&self.spec, t, f64::EPSILON / 4.0, FLOAT_MAX_TERMS)?.value)
    }
}

fn to_f64(r: &Rational) -> Result<f64> {
    r.to_f64()
        .ok_or_else(|| Error::Domain(format!("{r} is not representable as a float")))
}

#[derive(Clone, Debug)]
pub enum Expr {
    Hyp(HypTerm),
    /// `exp(sign * x)`, or `exp(sign * x / 2)` when `half`.
    Exp { sign: Sign, half: bool },
    /// `x^k`
    Power(usize),
    Coeff(Coefficient),
    Product(Vec<Expr>),
    Sum(Vec<Expr>),
}

impl Expr {
    pub fn hyp(upper: Vec<Rational>, lower: Vec<(String, Rational)>, argument: Argument) -> Expr {
        let (lower_labels, lower): (Vec<_>, Vec<_>) = lower.into_iter().unzip();
        Expr::Hyp(HypTerm {
            spec: HypSpec::new(upper, lower),
            lower_labels,
            argument,
        })
    }

    /// Every vanishing denominator reachable at degree cap `cap`, deduplicated.
    pub fn findings(&self, cap: usize) -> Vec<AdmissibilityFinding> {
        let mut out = Vec::new();
        self.collect_findings(cap, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_findings(&self, cap: usize, out: &mut Vec<AdmissibilityFinding>) {
        match self {
            Expr::Hyp(h) => out.extend(h.findings(cap)),
            Expr::Coeff(c) => out.extend(c.findings()),
            Expr::Product(items) | Expr::Sum(items) => {
                items.iter().for_each(|e| e.collect_findings(cap, out))
            }
            Expr::Exp { .. } | Expr::Power(_) => {}
        }
    }

    pub fn to_series(&self, cap: usize) -> Result<TruncatedSeries> {
        match self {
            Expr::Hyp(h) => h.to_series(cap),
            Expr::Exp { sign, half } => Ok(exp_series(cap, *sign, *half)),
            Expr::Power(k) => Ok(TruncatedSeries::monomial(*k, cap)),
            Expr::Coeff(c) => Ok(TruncatedSeries::constant(c.value()?, cap)),
            Expr::Product(items) => {
                let mut acc = TruncatedSeries::one(cap);
                for item in items {
                    acc = match item {
                        Expr::Power(k) => acc.shift(*k),
                        Expr::Coeff(c) => acc.scale(&c.value()?),
                        other => acc.mul(&other.to_series(cap)?),
                    };
                }
                Ok(acc)
            }
            Expr::Sum(items) => items
                .iter()
                .try_fold(TruncatedSeries::zero(cap), |acc, item| {
                    Ok(acc.add(&item.to_series(cap)?))
                }),
        }
    }

    pub fn eval_float(&self, x: f64) -> Result<f64> {
        match self {
            Expr::Hyp(h) => h.eval_float(x),
            Expr::Exp { sign, half } => {
                let mut rate = if *sign == Sign::Plus { 1.0 } else { -1.0 };
                if *half {
                    rate *= 0.5;
                }
                Ok((rate * x).exp())
            }
            Expr::Power(k) => Ok(x.powi(*k as i32)),
            Expr::Coeff(c) => to_f64(&c.value()?),
            Expr::Product(items) => items
                .iter()
                .try_fold(1.0, |acc, item| Ok(acc * item.eval_float(x)?)),
            Expr::Sum(items) => {
                let mut sum = CompensatedSum::new();
                for item in items {
                    sum.add(item.eval_float(x)?);
                }
                Ok(sum.value())
            }
        }
    }
}
