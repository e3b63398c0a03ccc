//! Generalized hypergeometric series `pFq`.
//!
//! Exact coefficients come from the term-ratio recurrence
//! `c_{k+1} = c_k * prod(a_j + k) / (prod(b_j + k) * (k + 1))`.
//! The float path sums the same recurrence with Neumaier compensation and is
//! meant for `|x| <= 40`; it does no analytic continuation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::series::TruncatedSeries;

/// Upper and lower parameter lists of a `pFq` series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

impl HypSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        HypSpec { upper, lower }
    }

    /// First lower parameter `b` with `b + k = 0` for some `k < depth`,
    /// returned as `(position, k)`.
    pub fn degenerate_lower(&self, depth: usize) -> Option<(usize, usize)> {
        self.lower
            .iter()
            .enumerate()
            .find_map(|(pos, b)| match b.as_nonpositive_integer() {
                Some(k) if k < depth => Some((pos, k)),
                _ => None,
            })
    }

    fn degenerate_error(&self, pos: usize, k: usize) -> Error {
        Error::DegenerateParameter {
            expr: format!("lower parameter b{} = {} of {}", pos + 1, self.lower[pos], self),
            index: k,
        }
    }
}

impl fmt::Display for HypSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{}F{}[{}; {}]",
            self.upper.len(),
            self.lower.len(),
            join(&self.upper),
            join(&self.lower)
        )
    }
}

/// Exact coefficients `t^0..=t^cap` of the series.
pub fn pfq_series(spec: &HypSpec, cap: usize) -> Result<TruncatedSeries> {
    if let Some((pos, k)) = spec.degenerate_lower(cap) {
        return Err(spec.degenerate_error(pos, k));
    }
    let mut coeffs = Vec::with_capacity(cap + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 0..cap {
        let shift = Rational::from(k as i64);
        if !term.is_zero() {
            let numer: Rational = spec.upper.iter().map(|a| a + &shift).product();
            let denom: Rational = spec.lower.iter().map(|b| b + &shift).product::<Rational>()
                * Rational::from(k as i64 + 1);
            term = (term * numer).checked_div(&denom)?;
        }
        coeffs.push(term.clone());
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// `2F3[(rho+sigma)/2, (rho+sigma-1)/2; rho, sigma, rho+sigma-1; 4t]`, the
/// closed form of the product `0F1(; rho; t) * 0F1(; sigma; t)`.
pub fn bailey_product_series(rho: &Rational, sigma: &Rational, cap: usize) -> Result<TruncatedSeries> {
    let half = Rational::frac(1, 2);
    let total = rho + sigma;
    let spec = HypSpec::new(
        vec![&total * &half, (&total - Rational::one()) * &half],
        vec![rho.clone(), sigma.clone(), &total - Rational::one()],
    );
    Ok(pfq_series(&spec, cap)?.scale_argument(&Rational::from(4)))
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Result of a float summation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatSum {
    pub value: f64,
    pub terms: usize,
    pub converged: bool,
}

fn params_f64(params: &[Rational]) -> Result<Vec<f64>> {
    params
        .iter()
        .map(|p| {
            p.to_f64()
                .ok_or_else(|| Error::Domain(format!("parameter {p} is not representable as a float")))
        })
        .collect()
}

/// Float partial sum of `pFq(x)`.
///
/// Summation stops once a term is at most `tol` times the partial sum and
/// the term ratio has dropped below one, or when a term vanishes exactly.
pub fn pfq_eval_float(spec: &HypSpec, x: f64, tol: f64, max_terms: usize) -> Result<FloatSum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let upper = params_f64(&spec.upper)?;
    let lower = params_f64(&spec.lower)?;
    let mut sum = CompensatedSum::new();
    let mut term = 1.0f64;
    sum.add(term);
    if x == 0.0 {
        return Ok(FloatSum { value: 1.0, terms: 1, converged: true });
    }
    for k in 0..max_terms {
        if let Some(pos) = spec.lower.iter().position(|b| b.as_nonpositive_integer() == Some(k)) {
            return Err(spec.degenerate_error(pos, k));
        }
        let kf = k as f64;
        let mut ratio = x / (kf + 1.0);
        for a in &upper {
            ratio *= a + kf;
        }
        for b in &lower {
            ratio /= b + kf;
        }
        term *= ratio;
        if term == 0.0 {
            return Ok(FloatSum { value: sum.value(), terms: k + 1, converged: true });
        }
        sum.add(term);
        if !term.is_finite() || !sum.value().is_finite() {
            return Err(Error::NotConverged { terms: k + 2, last_term: term.abs() });
        }
        let next_ratio = {
            let kn = kf + 1.0;
            let mut r = x / (kn + 1.0);
            for a in &upper {
                r *= a + kn;
            }
            for b in &lower {
                r /= b + kn;
            }
            r.abs()
        };
        if term.abs() <= tol * sum.value().abs() && next_ratio < 1.0 {
            return Ok(FloatSum { value: sum.value(), terms: k + 2, converged: true });
        }
    }
    Err(Error::NotConverged { terms: max_terms + 1, last_term: term.abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use crate::series::{exp_series, Sign};

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    fn spec(upper: &[&str], lower: &[&str]) -> HypSpec {
        HypSpec::new(upper.iter().map(|s| q(s)).collect(), lower.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn matched_parameters_give_exponential() {
        let s = pfq_series(&spec(&["3/7"], &["3/7"]), 12).unwrap();
        assert_eq!(s, exp_series(12, Sign::Plus, false));
    }

    #[test]
    fn zero_f_one_second_coefficient() {
        let s = pfq_series(&spec(&[], &["1"]), 4).unwrap();
        assert_eq!(s.coeff(2), Rational::frac(1, 4));
    }

    #[test]
    fn terminating_upper_parameter_gives_polynomial() {
        let s = pfq_series(&spec(&["-2", "5/3"], &["2/7"]), 10).unwrap();
        assert!(!s.coeff(2).is_zero());
        assert!((3..=10).all(|k| s.coeff(k).is_zero()));
    }

    #[test]
    fn degenerate_lower_parameter_is_rejected_eagerly() {
        let err = pfq_series(&spec(&["1"], &["-3"]), 10).unwrap_err();
        assert!(matches!(err, Error::DegenerateParameter { index: 3, .. }), "{err}");
        // Beyond the recurrence depth the parameter is harmless.
        assert!(pfq_series(&spec(&["1"], &["-3"]), 3).is_ok());
        assert!(pfq_series(&spec(&["1"], &["0"]), 0).is_ok());
    }

    #[test]
    fn coefficients_match_pochhammer_products() {
        use crate::exact::pochhammer;
        let sp = spec(&["1/2", "-7/3"], &["5/2", "1", "2/9"]);
        let s = pfq_series(&sp, 15).unwrap();
        for k in 0..=15 {
            let numer: Rational = sp.upper.iter().map(|a| pochhammer(a, k)).product();
            let denom: Rational = sp.lower.iter().map(|b| pochhammer(b, k)).product::<Rational>()
                * Rational::from(factorial(k));
            assert_eq!(s.coeff(k), numer / denom, "k={k}");
        }
    }

    #[test]
    fn bailey_product_matches_cauchy_product() {
        for (rho, sigma) in [("1", "1"), ("3/7", "2/5"), ("-1/2", "5/3")] {
            let (rho, sigma) = (q(rho), q(sigma));
            let cap = 20;
            let lhs = pfq_series(&HypSpec::new(vec![], vec![rho.clone()]), cap)
                .unwrap()
                .mul(&pfq_series(&HypSpec::new(vec![], vec![sigma.clone()]), cap).unwrap());
            let rhs = bailey_product_series(&rho, &sigma, cap).unwrap();
            assert_eq!(lhs, rhs);
            assert!(rhs.coeff(0).is_one());
        }
    }

    #[test]
    fn float_examples() {
        let e = pfq_eval_float(&spec(&["1"], &["1"]), 1.0, 1e-17, 200).unwrap();
        assert!(e.converged);
        assert!((e.value - std::f64::consts::E).abs() < 1e-12);

        let one = pfq_eval_float(&spec(&[], &["3/2"]), 0.0, 1e-17, 200).unwrap();
        assert_eq!(one.value, 1.0);

        let sp = spec(&["1/3"], &["2/3"]);
        let float = pfq_eval_float(&sp, -2.0, 1e-17, 500).unwrap().value;
        let horner = pfq_series(&sp, 60).unwrap().eval_float(-2.0).unwrap();
        assert!(((float - horner) / horner).abs() < 1e-10);
    }

    #[test]
    fn float_terminating_series_stops() {
        let r = pfq_eval_float(&spec(&["-3", "1/2"], &["5/3"]), 1.0, 1e-17, 100).unwrap();
        assert_eq!(r.terms, 4);
        // (c-b)_3/(c)_3 with b=1/2, c=5/3
        let exact = (7.0 / 6.0) * (13.0 / 6.0) * (19.0 / 6.0) / ((5.0 / 3.0) * (8.0 / 3.0) * (11.0 / 3.0));
        assert!((r.value - exact).abs() < 1e-14);
    }

    #[test]
    fn float_reports_non_convergence() {
        let err = pfq_eval_float(&spec(&["1", "1"], &["1"]), 0.99, 1e-17, 50).unwrap_err();
        assert!(matches!(err, Error::NotConverged { terms: 51, .. }));
        let err = pfq_eval_float(&spec(&["1"], &["-2"]), 1.0, 1e-17, 50).unwrap_err();
        assert!(matches!(err, Error::DegenerateParameter { index: 2, .. }));
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-15).abs() < 1e-25);
    }

    #[test]
    fn spec_json_form() {
        let sp = spec(&["1/2", "3/2"], &["5/2", "1", "2"]);
        let json = serde_json::to_string(&sp).unwrap();
        assert_eq!(json, r#"{"upper":["1/2","3/2"],"lower":["5/2","1","2"]}"#);
        assert_eq!(serde_json::from_str::<HypSpec>(&json).unwrap(), sp);
    }
}
