//! Exact rational scalars and the combinatorial primitives built on them.
//!
//! [`Rational`] is always stored in canonical form (positive denominator,
//! coprime numerator and denominator), so structural equality is numeric
//! equality. Values render as `p/q`, or `p` when the denominator is one.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`, reduced. Fails when `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Returns `Some(k)` when the value equals `-k` for a nonnegative integer `k`.
    pub fn as_nonpositive_integer(&self) -> Option<usize> {
        if self.0.is_integer() && !self.0.is_positive() {
            (-self.0.numer()).to_usize()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::Domain("negative power of zero".into()));
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64().filter(|v| v.is_finite())
    }
}

/// Rising factorial `a (a+1) ... (a+m-1)`; one when `m == 0`.
pub fn pochhammer(a: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..m {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

pub fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// First index `m >= 1` at which `(a)_m` becomes zero, if any.
pub fn pochhammer_zero_index(a: &Rational) -> Option<usize> {
    a.as_nonpositive_integer().map(|k| k + 1)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(part: &str) -> Result<BigInt> {
    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
        let token = part
            .chars()
            .find(|c| !c.is_ascii_digit())
            .map(|c| c.to_string())
            .unwrap_or_else(|| part.to_string());
        return Err(Error::Parse {
            token: if token.is_empty() { "<empty>".into() } else { token },
        });
    }
    Ok(part.parse::<BigInt>().expect("ascii digits parse"))
}

/// Parses `p`, `-p`, `+p`, `p/q` or `-p/q` with decimal digit runs.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let (negative, body) = match trimmed.as_bytes().first() {
        Some(b'-') => (true, &trimmed[1..]),
        Some(b'+') => (false, &trimmed[1..]),
        _ => (false, trimmed),
    };
    let (numer_text, denom_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let mut numer = parse_digits(numer_text)?;
    if negative {
        numer = -numer;
    }
    let denom = match denom_text {
        Some(d) => parse_digits(d)?,
        None => BigInt::one(),
    };
    Rational::new(numer, denom)
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` otherwise.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rational> for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q("5/3"), 0), Rational::one());
        assert_eq!(pochhammer(&q("-2"), 3), Rational::zero());
        assert_eq!(pochhammer(&q("3"), 4), Rational::from(360));
    }

    #[test]
    fn pochhammer_of_negative_integer_vanishes_past_it() {
        for k in 0..6usize {
            let a = Rational::from(-(k as i64));
            for m in 0..10 {
                assert_eq!(pochhammer(&a, m).is_zero(), m > k, "k={k} m={m}");
            }
            assert_eq!(pochhammer_zero_index(&a), Some(k + 1));
        }
        assert_eq!(pochhammer_zero_index(&q("1/2")), None);
        assert_eq!(pochhammer_zero_index(&q("1")), None);
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(q("3/7"), Rational::frac(3, 7));
        assert_eq!(q("-1/2"), Rational::frac(-1, 2));
        assert_eq!(q("4/6"), Rational::frac(2, 3));
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("+5").to_string(), "5");
        assert_eq!(q("-0").to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_rational("3.5"),
            Err(Error::Parse { token: ".".into() })
        );
        assert_eq!(
            parse_rational("1/x"),
            Err(Error::Parse { token: "x".into() })
        );
        assert!(matches!(parse_rational(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_rational("1/-2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rational("1/0"), Err(Error::Domain(_))));
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(q("0").as_nonpositive_integer(), Some(0));
        assert_eq!(q("-3").as_nonpositive_integer(), Some(3));
        assert_eq!(q("2").as_nonpositive_integer(), None);
        assert_eq!(q("-1/2").as_nonpositive_integer(), None);
    }

    #[test]
    fn serde_uses_text_form() {
        let v = q("-6/4");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"-3/2\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
