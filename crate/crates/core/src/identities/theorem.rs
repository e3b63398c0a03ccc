//! Contiguous ₁F₁ products: the `e^{-x/2}` expansion lemmas, the general
//! product formulas for `1F1(alpha; 2alpha±i) * 1F1(beta; 2beta±j)` and their
//! `beta = alpha` specializations.
//!
//! Left sides are raw Cauchy products of ₁F₁ series. Right sides are finite
//! double sums of `C_{m,n} x^{m+n} 2F3(...; x^2/4)` with the parameter blocks
//! written out per variant, so the two sides never share a construction path.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::{factorial, Rational};
use crate::expr::{Argument, Coefficient, Expr, PochFactor};
use crate::series::{Sign, TruncatedSeries};

use super::catalog::{IdentityParams, Variant};

fn half() -> Rational {
    Rational::frac(1, 2)
}

fn int(n: usize) -> Rational {
    Rational::from(n as i64)
}

fn neg(n: usize) -> Rational {
    -int(n)
}

/// `sign / (2^{2(m+n)} m! n!)`
fn scale_constant(negative: bool, m: usize, n: usize) -> Rational {
    let denom = (BigInt::from(1) << (2 * (m + n))) * factorial(m) * factorial(n);
    let c = Rational::new(1, denom).expect("nonzero");
    if negative {
        -c
    } else {
        c
    }
}

fn f11(upper: Rational, lower: Rational, lower_label: &str, argument: Argument) -> Expr {
    Expr::hyp(vec![upper], vec![(lower_label.to_string(), lower)], argument)
}

fn linear() -> Argument {
    Argument::Linear(Rational::one())
}

/// `1F1(a; 2a + i; x)` or `1F1(a; 2a - i; x)`.
fn contiguous_f11(a: &Rational, name: &str, shift: &str, offset: usize, plus: bool) -> Expr {
    let two_a = a * Rational::from(2);
    let (lower, label) = if plus {
        (two_a + int(offset), format!("2{name} + {shift}"))
    } else {
        (two_a - int(offset), format!("2{name} - {shift}"))
    };
    f11(a.clone(), lower, &label, linear())
}

/// One summand of a double sum: `C x^{m+n} 2F3[upper; lower; x^2/4]`.
fn double_sum_term(coeff: Coefficient, power: usize, upper: [Rational; 2], lower: [(String, Rational); 3]) -> Expr {
    Expr::Product(vec![
        Expr::Coeff(coeff),
        Expr::Power(power),
        Expr::hyp(upper.to_vec(), lower.to_vec(), Argument::Square(Rational::frac(1, 4))),
    ])
}

/// `e^{-x/2} 1F1(alpha; 2alpha+i; x)` computed directly.
pub fn expand_plus_lhs_expr(alpha: &Rational, i: usize) -> Expr {
    Expr::Product(vec![
        Expr::Exp { sign: Sign::Minus, half: true },
        contiguous_f11(alpha, "alpha", "i", i, true),
    ])
}

/// `e^{-x/2} 1F1(alpha; 2alpha-i; x)` computed directly.
pub fn expand_minus_lhs_expr(alpha: &Rational, i: usize) -> Expr {
    Expr::Product(vec![
        Expr::Exp { sign: Sign::Minus, half: true },
        contiguous_f11(alpha, "alpha", "i", i, false),
    ])
}

/// Finite expansion of `e^{-x/2} 1F1(alpha; 2alpha+i; x)` in `0F1(; alpha+m+1/2; x^2/16)`.
pub fn expand_plus_expr(alpha: &Rational, i: usize) -> Expr {
    let terms = (0..=i)
        .map(|m| {
            let coeff = Coefficient {
                constant: scale_constant(false, m, 0),
                numer: vec![
                    PochFactor::new("(-i)_m", neg(i), m),
                    PochFactor::new("(2alpha - 1)_m", alpha * Rational::from(2) - Rational::one(), m),
                ],
                denom: vec![
                    PochFactor::new("(2alpha + i)_m", alpha * Rational::from(2) + int(i), m),
                    PochFactor::new("(alpha - 1/2)_m", alpha - half(), m),
                ],
            };
            Expr::Product(vec![
                Expr::Coeff(coeff),
                Expr::Power(m),
                Expr::hyp(
                    vec![],
                    vec![(format!("alpha + {m} + 1/2"), alpha + int(m) + half())],
                    Argument::Square(Rational::frac(1, 16)),
                ),
            ])
        })
        .collect();
    Expr::Sum(terms)
}

/// Finite expansion of `e^{-x/2} 1F1(alpha; 2alpha-i; x)` in `0F1(; alpha+m-i+1/2; x^2/16)`.
pub fn expand_minus_expr(alpha: &Rational, i: usize) -> Expr {
    let two_alpha = alpha * Rational::from(2);
    let terms = (0..=i)
        .map(|m| {
            let coeff = Coefficient {
                constant: scale_constant(m % 2 == 1, m, 0),
                numer: vec![
                    PochFactor::new("(-i)_m", neg(i), m),
                    PochFactor::new("(2alpha - 2i - 1)_m", &two_alpha - int(2 * i + 1), m),
                ],
                denom: vec![
                    PochFactor::new("(2alpha - i)_m", &two_alpha - int(i), m),
                    PochFactor::new("(alpha - i - 1/2)_m", alpha - int(i) - half(), m),
                ],
            };
            Expr::Product(vec![
                Expr::Coeff(coeff),
                Expr::Power(m),
                Expr::hyp(
                    vec![],
                    vec![(format!("alpha + {m} - i + 1/2"), alpha + int(m) - int(i) + half())],
                    Argument::Square(Rational::frac(1, 16)),
                ),
            ])
        })
        .collect();
    Expr::Sum(terms)
}

pub fn expand_plus(alpha: &Rational, i: usize, cap: usize) -> Result<TruncatedSeries> {
    expand_plus_expr(alpha, i).to_series(cap)
}

pub fn expand_minus(alpha: &Rational, i: usize, cap: usize) -> Result<TruncatedSeries> {
    expand_minus_expr(alpha, i).to_series(cap)
}

/// Raw product of the two ₁F₁ factors.
pub fn theorem_lhs_expr(variant: Variant, params: &IdentityParams) -> Expr {
    let (alpha_plus, beta_plus) = match variant {
        Variant::PP => (true, true),
        Variant::MM => (false, false),
        Variant::PM => (true, false),
    };
    Expr::Product(vec![
        contiguous_f11(&params.alpha, "alpha", "i", params.i, alpha_plus),
        contiguous_f11(&params.beta, "beta", "j", params.j, beta_plus),
    ])
}

pub fn theorem_lhs(variant: Variant, params: &IdentityParams) -> Result<TruncatedSeries> {
    theorem_lhs_expr(variant, params).to_series(params.cap)
}

/// `e^x sum_{m<=i} sum_{n<=j} C_{m,n} x^{m+n} 2F3[...; x^2/4]`.
///
/// With `params.printed_form` the mixed variant uses `(-j)_m` in the
/// numerator, which does not satisfy the identity; it exists so the two
/// readings can be compared.
pub fn theorem_rhs_expr(variant: Variant, params: &IdentityParams) -> Expr {
    let IdentityParams { alpha, beta, i, j, .. } = params;
    let (i, j) = (*i, *j);
    let two = Rational::from(2);
    let mut terms = Vec::with_capacity((i + 1) * (j + 1));
    for m in 0..=i {
        for n in 0..=j {
            let mn = int(m + n);
            let term = match variant {
                Variant::PP => {
                    let coeff = Coefficient {
                        constant: scale_constant(false, m, n),
                        numer: vec![
                            PochFactor::new("(-i)_m", neg(i), m),
                            PochFactor::new("(-j)_n", neg(j), n),
                            PochFactor::new("(2alpha - 1)_m", alpha * &two - Rational::one(), m),
                            PochFactor::new("(2beta - 1)_n", beta * &two - Rational::one(), n),
                        ],
                        denom: vec![
                            PochFactor::new("(2alpha + i)_m", alpha * &two + int(i), m),
                            PochFactor::new("(2beta + j)_n", beta * &two + int(j), n),
                            PochFactor::new("(alpha - 1/2)_m", alpha - half(), m),
                            PochFactor::new("(beta - 1/2)_n", beta - half(), n),
                        ],
                    };
                    let s = alpha + beta + &mn;
                    double_sum_term(
                        coeff,
                        m + n,
                        [(&s + Rational::one()) * half(), &s * half()],
                        [
                            (format!("alpha + {m} + 1/2"), alpha + int(m) + half()),
                            (format!("beta + {n} + 1/2"), beta + int(n) + half()),
                            (format!("alpha + beta + {}", m + n), s),
                        ],
                    )
                }
                Variant::MM => {
                    let coeff = Coefficient {
                        constant: scale_constant((m + n) % 2 == 1, m, n),
                        numer: vec![
                            PochFactor::new("(-i)_m", neg(i), m),
                            PochFactor::new("(-j)_n", neg(j), n),
                            PochFactor::new("(2alpha - 2i - 1)_m", alpha * &two - int(2 * i + 1), m),
                            PochFactor::new("(2beta - 2j - 1)_n", beta * &two - int(2 * j + 1), n),
                        ],
                        denom: vec![
                            PochFactor::new("(2alpha - i)_m", alpha * &two - int(i), m),
                            PochFactor::new("(2beta - j)_n", beta * &two - int(j), n),
                            PochFactor::new("(alpha - i - 1/2)_m", alpha - int(i) - half(), m),
                            PochFactor::new("(beta - j - 1/2)_n", beta - int(j) - half(), n),
                        ],
                    };
                    let s = alpha + beta + &mn - int(i + j);
                    double_sum_term(
                        coeff,
                        m + n,
                        [(&s + Rational::one()) * half(), &s * half()],
                        [
                            (format!("alpha + {m} - i + 1/2"), alpha + int(m) - int(i) + half()),
                            (format!("beta + {n} - j + 1/2"), beta + int(n) - int(j) + half()),
                            (format!("alpha + beta + {} - i - j", m + n), s),
                        ],
                    )
                }
                Variant::PM => {
                    let minus_j = if params.printed_form {
                        PochFactor::new("(-j)_m", neg(j), m)
                    } else {
                        PochFactor::new("(-j)_n", neg(j), n)
                    };
                    let coeff = Coefficient {
                        constant: scale_constant(n % 2 == 1, m, n),
                        numer: vec![
                            PochFactor::new("(-i)_m", neg(i), m),
                            minus_j,
                            PochFactor::new("(2alpha - 1)_m", alpha * &two - Rational::one(), m),
                            PochFactor::new("(2beta - 2j - 1)_n", beta * &two - int(2 * j + 1), n),
                        ],
                        denom: vec![
                            PochFactor::new("(2alpha + i)_m", alpha * &two + int(i), m),
                            PochFactor::new("(2beta - j)_n", beta * &two - int(j), n),
                            PochFactor::new("(alpha - 1/2)_m", alpha - half(), m),
                            PochFactor::new("(beta - j - 1/2)_n", beta - int(j) - half(), n),
                        ],
                    };
                    let s = alpha + beta + &mn - int(j);
                    double_sum_term(
                        coeff,
                        m + n,
                        [(&s + Rational::one()) * half(), &s * half()],
                        [
                            (format!("alpha + {m} + 1/2"), alpha + int(m) + half()),
                            (format!("beta + {n} - j + 1/2"), beta + int(n) - int(j) + half()),
                            (format!("alpha + beta + {} - j", m + n), s),
                        ],
                    )
                }
            };
            terms.push(term);
        }
    }
    Expr::Product(vec![Expr::Exp { sign: Sign::Plus, half: false }, Expr::Sum(terms)])
}

pub fn theorem_rhs(variant: Variant, params: &IdentityParams) -> Result<TruncatedSeries> {
    theorem_rhs_expr(variant, params).to_series(params.cap)
}

/// `1F1(alpha; 2alpha±i; x) * 1F1(alpha; 2alpha±j; x)` as a raw product.
pub fn special_case_lhs_expr(variant: Variant, alpha: &Rational, i: usize, j: usize) -> Expr {
    let (first_plus, second_plus) = match variant {
        Variant::PP => (true, true),
        Variant::MM => (false, false),
        Variant::PM => (true, false),
    };
    Expr::Product(vec![
        contiguous_f11(alpha, "alpha", "i", i, first_plus),
        contiguous_f11(alpha, "alpha", "j", j, second_plus),
    ])
}

/// Right side of the `beta = alpha` product formulas, written out in
/// `alpha` alone rather than delegating to [`theorem_rhs_expr`].
pub fn special_case_rhs_expr(variant: Variant, alpha: &Rational, i: usize, j: usize, printed_form: bool) -> Expr {
    let two_alpha = alpha * Rational::from(2);
    let mut terms = Vec::with_capacity((i + 1) * (j + 1));
    for m in 0..=i {
        for n in 0..=j {
            let (constant, numer, denom, upper_base, lower) = match variant {
                Variant::PP => (
                    scale_constant(false, m, n),
                    vec![
                        PochFactor::new("(-i)_m", neg(i), m),
                        PochFactor::new("(-j)_n", neg(j), n),
                        PochFactor::new("(2alpha - 1)_m", &two_alpha - Rational::one(), m),
                        PochFactor::new("(2alpha - 1)_n", &two_alpha - Rational::one(), n),
                    ],
                    vec![
                        PochFactor::new("(2alpha + i)_m", &two_alpha + int(i), m),
                        PochFactor::new("(2alpha + j)_n", &two_alpha + int(j), n),
                        PochFactor::new("(alpha - 1/2)_m", alpha - half(), m),
                        PochFactor::new("(alpha - 1/2)_n", alpha - half(), n),
                    ],
                    &two_alpha + int(m + n),
                    [
                        (format!("alpha + {m} + 1/2"), alpha + int(m) + half()),
                        (format!("alpha + {n} + 1/2"), alpha + int(n) + half()),
                        (format!("2alpha + {}", m + n), &two_alpha + int(m + n)),
                    ],
                ),
                Variant::MM => (
                    scale_constant((m + n) % 2 == 1, m, n),
                    vec![
                        PochFactor::new("(-i)_m", neg(i), m),
                        PochFactor::new("(-j)_n", neg(j), n),
                        PochFactor::new("(2alpha - 2i - 1)_m", &two_alpha - int(2 * i + 1), m),
                        PochFactor::new("(2alpha - 2j - 1)_n", &two_alpha - int(2 * j + 1), n),
                    ],
                    vec![
                        PochFactor::new("(2alpha - i)_m", &two_alpha - int(i), m),
                        PochFactor::new("(2alpha - j)_n", &two_alpha - int(j), n),
                        PochFactor::new("(alpha - i - 1/2)_m", alpha - int(i) - half(), m),
                        PochFactor::new("(alpha - j - 1/2)_n", alpha - int(j) - half(), n),
                    ],
                    &two_alpha + int(m + n) - int(i + j),
                    [
                        (format!("alpha + {m} - i + 1/2"), alpha + int(m) - int(i) + half()),
                        (format!("alpha + {n} - j + 1/2"), alpha + int(n) - int(j) + half()),
                        (format!("2alpha + {} - i - j", m + n), &two_alpha + int(m + n) - int(i + j)),
                    ],
                ),
                Variant::PM => (
                    scale_constant(n % 2 == 1, m, n),
                    vec![
                        PochFactor::new("(-i)_m", neg(i), m),
                        if printed_form {
                            PochFactor::new("(-j)_m", neg(j), m)
                        } else {
                            PochFactor::new("(-j)_n", neg(j), n)
                        },
                        PochFactor::new("(2alpha - 1)_m", &two_alpha - Rational::one(), m),
                        PochFactor::new("(2alpha - 2j - 1)_n", &two_alpha - int(2 * j + 1), n),
                    ],
                    vec![
                        PochFactor::new("(2alpha + i)_m", &two_alpha + int(i), m),
                        PochFactor::new("(2alpha - j)_n", &two_alpha - int(j), n),
                        PochFactor::new("(alpha - 1/2)_m", alpha - half(), m),
                        PochFactor::new("(alpha - j - 1/2)_n", alpha - int(j) - half(), n),
                    ],
                    &two_alpha + int(m + n) - int(j),
                    [
                        (format!("alpha + {m} + 1/2"), alpha + int(m) + half()),
                        (format!("alpha + {n} - j + 1/2"), alpha + int(n) - int(j) + half()),
                        (format!("2alpha + {} - j", m + n), &two_alpha + int(m + n) - int(j)),
                    ],
                ),
            };
            let upper = [(&upper_base + Rational::one()) * half(), upper_base * half()];
            terms.push(double_sum_term(Coefficient { constant, numer, denom }, m + n, upper, lower));
        }
    }
    Expr::Product(vec![Expr::Exp { sign: Sign::Plus, half: false }, Expr::Sum(terms)])
}

pub fn special_case_rhs(variant: Variant, alpha: &Rational, i: usize, j: usize, cap: usize) -> Result<TruncatedSeries> {
    special_case_rhs_expr(variant, alpha, i, j, false).to_series(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::hyper::{pfq_series, HypSpec};
    use crate::series::exp_series;

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    /// Independent oracle: `1F1(a; b; x)` straight from the ratio recurrence.
    fn raw_f11(a: &Rational, b: &Rational, cap: usize) -> TruncatedSeries {
        pfq_series(&HypSpec::new(vec![a.clone()], vec![b.clone()]), cap).unwrap()
    }

    #[test]
    fn expand_plus_at_zero_is_kummer_second() {
        let alpha = q("3/7");
        let cap = 20;
        let direct = exp_series(cap, Sign::Minus, true).mul(&raw_f11(&alpha, &(&alpha * q("2")), cap));
        assert_eq!(expand_plus(&alpha, 0, cap).unwrap(), direct);
        assert_eq!(expand_minus(&alpha, 0, cap).unwrap(), direct);
        assert!(direct.coeffs().iter().skip(1).step_by(2).all(Rational::is_zero));
    }

    #[test]
    fn expand_plus_matches_product_oracle() {
        let alpha = q("3/7");
        let cap = 20;
        let direct = exp_series(cap, Sign::Minus, true).mul(&raw_f11(&alpha, &(q("6/7") + q("2")), cap));
        let built = expand_plus(&alpha, 2, cap).unwrap();
        assert_eq!(built, direct);
        assert!(built.coeff(0).is_one());
    }

    #[test]
    fn expand_minus_matches_product_oracle() {
        let alpha = q("3/7");
        let cap = 20;
        let direct = exp_series(cap, Sign::Minus, true).mul(&raw_f11(&alpha, &(q("6/7") - q("1")), cap));
        assert_eq!(expand_minus(&alpha, 1, cap).unwrap(), direct);
    }

    #[test]
    fn expand_minus_rejects_vanishing_denominator() {
        // alpha - i - 1/2 = 0 at alpha = 5/2, i = 2, so (alpha - i - 1/2)_1 = 0.
        let err = expand_minus(&q("5/2"), 2, 12).unwrap_err();
        match err {
            Error::DegenerateParameter { expr, index } => {
                assert_eq!(expr, "(alpha - i - 1/2)_m");
                assert_eq!(index, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn theorem_pp_against_oracle() {
        let params = IdentityParams::new(q("3/7"), q("2/5"), 2, 1);
        assert_eq!(params.cap, 22);
        let oracle = raw_f11(&q("3/7"), &(q("6/7") + q("2")), 22).mul(&raw_f11(&q("2/5"), &(q("4/5") + q("1")), 22));
        assert_eq!(theorem_rhs(Variant::PP, &params).unwrap(), oracle);
        assert_eq!(theorem_lhs(Variant::PP, &params).unwrap(), oracle);
    }

    #[test]
    fn theorem_pm_reading_is_decided_by_oracle() {
        let params = IdentityParams::new(q("3/7"), q("2/5"), 1, 1).with_cap(22);
        let oracle = raw_f11(&q("3/7"), &(q("6/7") + q("1")), 22).mul(&raw_f11(&q("2/5"), &(q("4/5") - q("1")), 22));
        assert_eq!(theorem_rhs(Variant::PM, &params).unwrap(), oracle);
        let printed = theorem_rhs(Variant::PM, &params.clone().with_printed_form(true)).unwrap();
        assert_ne!(printed, oracle);
    }

    #[test]
    fn theorem_mm_matches_lhs() {
        let params = IdentityParams::new(q("3/7"), q("2/5"), 1, 2);
        assert_eq!(
            theorem_lhs(Variant::MM, &params).unwrap(),
            theorem_rhs(Variant::MM, &params).unwrap()
        );
    }

    #[test]
    fn bailey_form_at_zero_shifts() {
        let (alpha, beta) = (q("3/7"), q("2/5"));
        let params = IdentityParams::new(alpha.clone(), beta.clone(), 0, 0).with_cap(24);
        let s = &alpha + &beta;
        let bailey = exp_series(24, Sign::Plus, false).mul(
            &pfq_series(
                &HypSpec::new(
                    vec![&s * q("1/2"), (&s + q("1")) * q("1/2")],
                    vec![&alpha + q("1/2"), &beta + q("1/2"), s.clone()],
                ),
                12,
            )
            .unwrap()
            .substitute_even(&q("4"))
            .unwrap(),
        );
        assert_eq!(theorem_rhs(Variant::PP, &params).unwrap(), bailey.truncate(24));
    }

    #[test]
    fn lhs_symmetric_when_parameters_coincide() {
        let params = IdentityParams::new(q("3/7"), q("3/7"), 2, 2);
        let lhs = theorem_lhs(Variant::PP, &params).unwrap();
        let swapped = raw_f11(&q("3/7"), &(q("6/7") + q("2")), params.cap).mul(&raw_f11(&q("3/7"), &(q("6/7") + q("2")), params.cap));
        assert_eq!(lhs, swapped);
        assert!(lhs.coeff(0).is_one());
    }

    #[test]
    fn special_cases_reduce_from_theorem() {
        let alpha = q("3/7");
        for variant in [Variant::PP, Variant::MM, Variant::PM] {
            let params = IdentityParams::new(alpha.clone(), alpha.clone(), 2, 1).with_cap(20);
            assert_eq!(
                special_case_rhs(variant, &alpha, 2, 1, 20).unwrap(),
                theorem_rhs(variant, &params).unwrap(),
                "{variant:?}"
            );
        }
    }

    #[test]
    fn special_mm_square_oracle() {
        let alpha = q("3/7");
        let f = raw_f11(&alpha, &(q("6/7") - q("1")), 20);
        assert_eq!(special_case_rhs(Variant::MM, &alpha, 1, 1, 20).unwrap(), f.mul(&f));
    }
}
