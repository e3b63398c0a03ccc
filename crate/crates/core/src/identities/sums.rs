//! Classical ₂F₁ and ₃F₂ summation theorems.
//!
//! The terminating Gauss sum is checked exactly against its
//! Chu–Vandermonde closed form. The Gauss second and Watson sums involve
//! gamma functions at non-terminating parameters and are compared in
//! floating point only.

use std::f64::consts::PI;

use libm::tgamma;

use crate::error::{Error, Result};
use crate::exact::{pochhammer, pochhammer_zero_index, Rational};
use crate::hyper::{pfq_eval_float, CompensatedSum, HypSpec};

/// Upper bound on terms for the slowly converging unit-argument sums.
pub const UNIT_ARGUMENT_MAX_TERMS: usize = 20_000_000;

fn to_f64(r: &Rational) -> Result<f64> {
    r.to_f64()
        .ok_or_else(|| Error::Domain(format!("{r} is not representable as a float")))
}

fn finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{what} is not finite ({value})")))
    }
}

/// `2F1(-n, b; c; 1)` summed term by term, and `(c-b)_n / (c)_n`.
pub fn gauss_terminating(a: &Rational, b: &Rational, c: &Rational) -> Result<(Rational, Rational)> {
    let n = a.as_nonpositive_integer().ok_or_else(|| Error::Refused {
        condition: format!("a = -n for a nonnegative integer n (got a = {a})"),
    })?;
    if let Some(m) = pochhammer_zero_index(c).filter(|&m| m <= n) {
        return Err(Error::DegenerateParameter { expr: "(c)_k".into(), index: m });
    }
    let mut lhs = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=n {
        lhs += &term;
        if k == n {
            break;
        }
        let shift = Rational::from(k as i64);
        term = term * (a + &shift) * (b + &shift) / ((c + &shift) * Rational::from(k as i64 + 1));
    }
    let rhs = pochhammer(&(c - b), n) / pochhammer(c, n);
    Ok((lhs, rhs))
}

/// `2F1(a, b; (a+b+1)/2; 1/2)` and its gamma-ratio value.
pub fn gauss_second_float(a: &Rational, b: &Rational) -> Result<(f64, f64)> {
    let c = (a + b + Rational::one()) * Rational::frac(1, 2);
    if let Some(k) = c.as_nonpositive_integer() {
        return Err(Error::DegenerateParameter { expr: "(a + b + 1)/2".into(), index: k });
    }
    let spec = HypSpec::new(vec![a.clone(), b.clone()], vec![c.clone()]);
    let lhs = pfq_eval_float(&spec, 0.5, f64::EPSILON / 4.0, 10_000)?.value;
    let (af, bf, cf) = (to_f64(a)?, to_f64(b)?, to_f64(&c)?);
    let rhs = PI.sqrt() * tgamma(cf) / (tgamma(0.5 * af + 0.5) * tgamma(0.5 * bf + 0.5));
    Ok((lhs, finite(rhs, "gamma ratio")?))
}

/// `3F2(a, b, c; (a+b+1)/2, 2c; 1)` and its gamma-ratio value.
///
/// Requires `2c - a - b > -1`. The sum is stopped once the asymptotic tail
/// estimate `|t_k| k / s`, with `s = c - (a+b)/2 + 1/2`, drops below
/// `tol / 10` relative to the partial sum.
pub fn watson_float(a: &Rational, b: &Rational, c: &Rational, tol: f64) -> Result<(f64, f64)> {
    let excess = c * Rational::from(2) - a - b;
    if excess <= Rational::from(-1) {
        return Err(Error::Refused {
            condition: format!("Re(2c - a - b) > -1 (got {excess})"),
        });
    }
    let half = Rational::frac(1, 2);
    let lower = vec![(a + b + Rational::one()) * &half, c * Rational::from(2)];
    for (label, b_low) in ["(a + b + 1)/2", "2c"].iter().zip(&lower) {
        if let Some(k) = b_low.as_nonpositive_integer() {
            return Err(Error::DegenerateParameter { expr: (*label).into(), index: k });
        }
    }
    let spec = HypSpec::new(vec![a.clone(), b.clone(), c.clone()], lower);
    let s = to_f64(&((excess + Rational::one()) * &half))?;
    let lhs = sum_at_unit_argument(&spec, s, tol)?;

    let (af, bf, cf) = (to_f64(a)?, to_f64(b)?, to_f64(c)?);
    let numer = PI.sqrt() * tgamma(cf + 0.5) * tgamma(0.5 * (af + bf + 1.0)) * tgamma(cf - 0.5 * (af + bf) + 0.5);
    let denom = tgamma(0.5 * (af + 1.0)) * tgamma(0.5 * (bf + 1.0)) * tgamma(cf - 0.5 * af + 0.5) * tgamma(cf - 0.5 * bf + 0.5);
    Ok((lhs, finite(numer / denom, "gamma ratio")?))
}

fn sum_at_unit_argument(spec: &HypSpec, excess: f64, tol: f64) -> Result<f64> {
    let upper: Vec<f64> = spec.upper.iter().map(to_f64).collect::<Result<_>>()?;
    let lower: Vec<f64> = spec.lower.iter().map(to_f64).collect::<Result<_>>()?;
    let mut sum = CompensatedSum::new();
    let mut term = 1.0f64;
    sum.add(term);
    for k in 0..UNIT_ARGUMENT_MAX_TERMS {
        let kf = k as f64;
        let mut ratio = 1.0 / (kf + 1.0);
        for a in &upper {
            ratio *= a + kf;
        }
        for b in &lower {
            ratio /= b + kf;
        }
        term *= ratio;
        if term == 0.0 {
            return Ok(sum.value());
        }
        sum.add(term);
        let kn = kf + 1.0;
        let tail = term.abs() * kn / excess;
        if kn >= 16.0 && ratio.abs() < 1.0 && tail <= 0.1 * tol * sum.value().abs() {
            return Ok(sum.value());
        }
    }
    Err(Error::NotConverged {
        terms: UNIT_ARGUMENT_MAX_TERMS + 1,
        last_term: term.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    #[test]
    fn gauss_terminating_small_case() {
        // Brute force: sum_{k=0}^{3} (-3)_k (1/2)_k / ((5/3)_k k!)
        let (a, b, c) = (q("-3"), q("1/2"), q("5/3"));
        let brute: Rational = (0..=3usize)
            .map(|k| {
                pochhammer(&a, k) * pochhammer(&b, k)
                    / (pochhammer(&c, k) * Rational::from(crate::exact::factorial(k)))
            })
            .sum();
        let (lhs, rhs) = gauss_terminating(&a, &b, &c).unwrap();
        assert_eq!(lhs, brute);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, q("1729/3520"));
    }

    #[test]
    fn gauss_terminating_n_zero() {
        let (lhs, rhs) = gauss_terminating(&q("0"), &q("1/2"), &q("5/3")).unwrap();
        assert!(lhs.is_one() && rhs.is_one());
    }

    #[test]
    fn gauss_terminating_refuses_non_terminating() {
        assert!(matches!(
            gauss_terminating(&q("1/3"), &q("1/2"), &q("5/3")),
            Err(Error::Refused { .. })
        ));
        assert!(matches!(
            gauss_terminating(&q("-4"), &q("1/2"), &q("-2")),
            Err(Error::DegenerateParameter { index: 3, .. })
        ));
    }

    #[test]
    fn gauss_second_sample() {
        let (lhs, rhs) = gauss_second_float(&q("1/3"), &q("2/5")).unwrap();
        assert!(((lhs - rhs) / rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn watson_sample_and_refusal() {
        let (lhs, rhs) = watson_float(&q("1/3"), &q("2/5"), &q("3"), 1e-10).unwrap();
        assert!(((lhs - rhs) / rhs).abs() < 1e-10, "{lhs} vs {rhs}");
        let err = watson_float(&q("3"), &q("2"), &q("1"), 1e-10).unwrap_err();
        assert!(matches!(err, Error::Refused { ref condition } if condition.contains("2c - a - b")));
    }
}
