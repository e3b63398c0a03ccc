//! Truncated formal power series in one indeterminate `x` over [`Rational`].
//!
//! A series with cap `N` stores the dense coefficient vector `c_0..=c_N`.
//! Binary operations on series with different caps truncate to the smaller
//! cap; the result's [`TruncatedSeries::cap`] records the effective cap.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

/// Sign of the exponent in `exp(±x)` / `exp(±x/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl TruncatedSeries {
    pub fn zero(cap: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = c;
        s
    }

    /// `x^k` truncated at `cap` (the zero series when `k > cap`).
    pub fn monomial(k: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if k <= cap {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    /// Builds a series from `c_0..=c_N`; an empty vector is treated as the
    /// zero series with cap 0.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        TruncatedSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero is returned above the cap only for
    /// convenience, callers must not read meaning into it.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn set_coeff(&mut self, k: usize, value: Rational) {
        assert!(k <= self.cap(), "degree {k} exceeds cap {}", self.cap());
        self.coeffs[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn truncate(&self, cap: usize) -> Self {
        let cap = cap.min(self.cap());
        TruncatedSeries {
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        TruncatedSeries {
            coeffs: (0..=cap).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        TruncatedSeries {
            coeffs: (0..=cap).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    /// Cauchy product: `c_k = sum_{j<=k} a_j b_{k-j}` for `k` up to the smaller cap.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let mut coeffs = vec![Rational::zero(); cap + 1];
        for (j, a) in self.coeffs[..=cap].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs[..=cap - j].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[j + k] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^m`; coefficients pushed past the cap are dropped.
    pub fn shift(&self, m: usize) -> Self {
        let cap = self.cap();
        let coeffs = (0..=cap)
            .map(|k| {
                if k >= m {
                    self.coeffs[k - m].clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Substitutes `x -> c x`: coefficient `k` is multiplied by `c^k`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &power;
                power *= c;
                v
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Substitutes `x -> -x` by flipping the sign of odd coefficients.
    pub fn negate_argument(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| if k % 2 == 1 { -a } else { a.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Reads `self` as a series in `t` and substitutes `t = x^2 / divisor`.
    ///
    /// The result has cap `2 * self.cap() + 1`: every coefficient up to that
    /// degree is determined, the top one being odd and therefore zero.
    pub fn substitute_even(&self, divisor: &Rational) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("substitute_even divisor is zero".into()));
        }
        let scale = divisor.recip()?;
        let mut out = Self::zero(2 * self.cap() + 1);
        let mut power = Rational::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            out.coeffs[2 * k] = a * &power;
            power *= &scale;
        }
        Ok(out)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval_float(&self, x: f64) -> Result<f64> {
        let mut acc = 0.0f64;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let c = c.to_f64().ok_or(Error::Overflow { degree: k })?;
            acc = acc * x + c;
        }
        if acc.is_finite() {
            Ok(acc)
        } else {
            Err(Error::Overflow { degree: self.cap() })
        }
    }

    /// Degrees at which `self` and `other` differ, up to the common cap.
    pub fn differing_degrees(&self, other: &Self) -> Vec<usize> {
        let cap = self.cap().min(other.cap());
        (0..=cap)
            .filter(|&k| self.coeffs[k] != other.coeffs[k])
            .collect()
    }
}

/// Coefficients of `exp(±x)` or, with `half`, `exp(±x/2)` up to degree `cap`.
pub fn exp_series(cap: usize, sign: Sign, half: bool) -> TruncatedSeries {
    let coeffs = (0..=cap)
        .map(|k| {
            let mut denom = factorial(k);
            if half {
                denom <<= k;
            }
            let c = Rational::new(1, denom).expect("factorial is nonzero");
            if sign == Sign::Minus && k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*x")?,
                _ => write!(f, "{magnitude}*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [cap {}]", self.cap())
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&(p, q)| Rational::frac(p, q)).collect())
    }

    fn ints(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn add_examples() {
        assert_eq!(ints(&[1, 1]).add(&ints(&[1, -1])), ints(&[2, 0]));
        let a = ints(&[3, 0, 7]);
        assert_eq!(a.add(&TruncatedSeries::zero(2)), a);
        assert_eq!(ints(&[0, 1, 0]).add(&ints(&[0, 0, 1])), ints(&[0, 1, 1]));
    }

    #[test]
    fn mixed_caps_truncate_to_minimum() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[1, 1]);
        assert_eq!(a.add(&b).cap(), 1);
        assert_eq!(a.mul(&b), ints(&[1, 3]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ints(&[1, 1, 0]).mul(&ints(&[1, -1, 0])), ints(&[1, 0, -1]));
        let a = s(&[(1, 2), (-3, 5), (7, 1)]);
        assert_eq!(a.mul(&TruncatedSeries::one(2)), a);
    }

    #[test]
    fn exp_times_exp_negative_is_one() {
        for cap in [0, 1, 5, 20] {
            let p = exp_series(cap, Sign::Plus, false).mul(&exp_series(cap, Sign::Minus, false));
            assert_eq!(p, TruncatedSeries::one(cap));
        }
    }

    #[test]
    fn scale_examples() {
        let a = ints(&[1, 1]);
        assert_eq!(a.scale(&Rational::zero()), TruncatedSeries::zero(1));
        assert_eq!(a.scale(&Rational::one()), a);
        assert_eq!(a.scale(&Rational::frac(1, 2)), s(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(TruncatedSeries::one(4).shift(2), ints(&[0, 0, 1, 0, 0]));
        let a = ints(&[4, 5, 6]);
        assert_eq!(a.shift(0), a);
        assert_eq!(ints(&[1, 1, 0]).shift(1), ints(&[0, 1, 1]));
    }

    #[test]
    fn substitute_even_examples() {
        let a = ints(&[1, 1, 0]);
        let out = a.substitute_even(&Rational::from(4)).unwrap().truncate(4);
        assert_eq!(out, s(&[(1, 1), (0, 1), (1, 4), (0, 1), (0, 1)]));

        let exp_like = exp_series(5, Sign::Plus, false);
        let out = exp_like.substitute_even(&Rational::from(16)).unwrap();
        for k in 0..=5usize {
            let expected = Rational::new(1, factorial(k) * num_bigint::BigInt::from(16).pow(k as u32)).unwrap();
            assert_eq!(out.coeff(2 * k), expected);
            assert!(out.coeff(2 * k + 1).is_zero());
        }

        assert!(TruncatedSeries::zero(3)
            .substitute_even(&Rational::from(4))
            .unwrap()
            .is_zero());
        assert!(matches!(
            a.substitute_even(&Rational::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exp_series_examples() {
        assert_eq!(exp_series(3, Sign::Plus, false), s(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
        assert_eq!(exp_series(2, Sign::Minus, true), s(&[(1, 1), (-1, 2), (1, 8)]));
        assert_eq!(exp_series(0, Sign::Minus, true), TruncatedSeries::one(0));
        assert_eq!(exp_series(0, Sign::Plus, false), TruncatedSeries::one(0));
    }

    #[test]
    fn eval_float_examples() {
        assert_eq!(ints(&[1, 1]).eval_float(2.0).unwrap(), 3.0);
        assert_eq!(TruncatedSeries::zero(5).eval_float(123.0).unwrap(), 0.0);
        let e = exp_series(30, Sign::Plus, false).eval_float(1.0).unwrap();
        assert!((e - std::f64::consts::E).abs() < 1e-12);
    }

    #[test]
    fn eval_float_reports_overflow() {
        let huge = Rational::from(num_bigint::BigInt::from(10).pow(400));
        let a = TruncatedSeries::from_coeffs(vec![Rational::one(), huge]);
        assert_eq!(a.eval_float(1.0), Err(Error::Overflow { degree: 1 }));
    }

    #[test]
    fn argument_maps() {
        let a = ints(&[1, 2, 3, 4]);
        assert_eq!(a.negate_argument(), ints(&[1, -2, 3, -4]));
        assert_eq!(a.scale_argument(&Rational::from(2)), ints(&[1, 4, 12, 32]));
    }

    #[test]
    fn render_text_and_json() {
        let a = s(&[(1, 1), (-1, 2), (0, 1), (3, 4)]);
        assert_eq!(a.to_string(), "1 - 1/2*x + 3/4*x^3");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0");
        assert_eq!(s(&[(0, 1), (-2, 1)]).to_string(), "-2*x");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"["1","-1/2","0","3/4"]"#
        );
    }
}
