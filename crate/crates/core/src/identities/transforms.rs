//! Kummer transformations and the classical Preece, Bailey and Rathie
//! product identities, each as an (lhs, rhs) pair of expressions.

use crate::exact::Rational;
use crate::expr::{Argument, Coefficient, Expr, PochFactor};
use crate::series::Sign;

fn half() -> Rational {
    Rational::frac(1, 2)
}

fn two() -> Rational {
    Rational::from(2)
}

fn at(c: i64) -> Argument {
    Argument::Linear(Rational::from(c))
}

fn square(divisor: i64) -> Argument {
    Argument::Square(Rational::frac(1, divisor))
}

fn lower(label: &str, value: Rational) -> (String, Rational) {
    (label.to_string(), value)
}

/// `1F1(alpha; 2alpha; c x)`
fn f11_double(alpha: &Rational, name: &str, argument: Argument) -> Expr {
    Expr::hyp(
        vec![alpha.clone()],
        vec![lower(&format!("2{name}"), alpha * two())],
        argument,
    )
}

/// `e^{-x} 1F1(alpha; beta; x) = 1F1(beta - alpha; beta; -x)`
pub fn kummer_first(alpha: &Rational, beta: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Minus, half: false },
        Expr::hyp(vec![alpha.clone()], vec![lower("beta", beta.clone())], at(1)),
    ]);
    let rhs = Expr::hyp(vec![beta - alpha], vec![lower("beta", beta.clone())], at(-1));
    (lhs, rhs)
}

/// `e^{-x/2} 1F1(alpha; 2alpha; x) = 0F1(; alpha + 1/2; x^2/16)`
pub fn kummer_second(alpha: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Minus, half: true },
        f11_double(alpha, "alpha", at(1)),
    ]);
    let rhs = Expr::hyp(vec![], vec![lower("alpha + 1/2", alpha + half())], square(16));
    (lhs, rhs)
}

/// `1F1(alpha; 2alpha; 2x) = e^x 0F1(; alpha + 1/2; x^2/4)`
pub fn kummer_second_alt(alpha: &Rational) -> (Expr, Expr) {
    let lhs = f11_double(alpha, "alpha", at(2));
    let rhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Plus, half: false },
        Expr::hyp(vec![], vec![lower("alpha + 1/2", alpha + half())], square(4)),
    ]);
    (lhs, rhs)
}

fn preece_f12(alpha: &Rational) -> Expr {
    Expr::hyp(
        vec![alpha.clone()],
        vec![lower("alpha + 1/2", alpha + half()), lower("2alpha", alpha * two())],
        square(4),
    )
}

fn bailey_f23(alpha: &Rational, beta: &Rational) -> Expr {
    let s = alpha + beta;
    Expr::hyp(
        vec![&s * half(), (&s + Rational::one()) * half()],
        vec![
            lower("alpha + 1/2", alpha + half()),
            lower("beta + 1/2", beta + half()),
            lower("alpha + beta", s.clone()),
        ],
        square(4),
    )
}

/// `1F1(alpha; 2alpha; x) 1F1(alpha; 2alpha; -x) = 1F2(alpha; alpha+1/2, 2alpha; x^2/4)`
pub fn preece(alpha: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        f11_double(alpha, "alpha", at(-1)),
    ]);
    (lhs, preece_f12(alpha))
}

/// `1F1(alpha; 2alpha; x) 1F1(beta; 2beta; -x) = 2F3[...; x^2/4]`
pub fn bailey(alpha: &Rational, beta: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        f11_double(beta, "beta", at(-1)),
    ]);
    (lhs, bailey_f23(alpha, beta))
}

/// `{1F1(alpha; 2alpha; x)}^2 = e^x 1F2(alpha; alpha+1/2, 2alpha; x^2/4)`
pub fn preece_exp(alpha: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        f11_double(alpha, "alpha", at(1)),
    ]);
    let rhs = Expr::Product(vec![Expr::Exp { sign: Sign::Plus, half: false }, preece_f12(alpha)]);
    (lhs, rhs)
}

/// `1F1(alpha; 2alpha; x) 1F1(beta; 2beta; x) = e^x 2F3[...; x^2/4]`
pub fn bailey_exp(alpha: &Rational, beta: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        f11_double(beta, "beta", at(1)),
    ]);
    let rhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Plus, half: false },
        bailey_f23(alpha, beta),
    ]);
    (lhs, rhs)
}

/// `0F1(; rho; x) 0F1(; sigma; x) = 2F3[(rho+sigma)/2, (rho+sigma-1)/2; rho, sigma, rho+sigma-1; 4x]`
pub fn bailey_product(rho: &Rational, sigma: &Rational) -> (Expr, Expr) {
    let lhs = Expr::Product(vec![
        Expr::hyp(vec![], vec![lower("rho", rho.clone())], at(1)),
        Expr::hyp(vec![], vec![lower("sigma", sigma.clone())], at(1)),
    ]);
    let s = rho + sigma;
    let rhs = Expr::hyp(
        vec![&s * half(), (&s - Rational::one()) * half()],
        vec![
            lower("rho", rho.clone()),
            lower("sigma", sigma.clone()),
            lower("rho + sigma - 1", &s - Rational::one()),
        ],
        at(4),
    );
    (lhs, rhs)
}

/// `1F1(alpha; 2alpha; x) 1F1(alpha; 2alpha+1; x)
///   = e^x {1F2(alpha; alpha+1/2, 2alpha; x^2/4)
///          - x/(2(2alpha+1)) 1F2(alpha+1; alpha+3/2, 2alpha+1; x^2/4)}`
pub fn rathie_plus(alpha: &Rational) -> (Expr, Expr) {
    let two_alpha = alpha * two();
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        Expr::hyp(
            vec![alpha.clone()],
            vec![lower("2alpha + 1", &two_alpha + Rational::one())],
            at(1),
        ),
    ]);
    let correction = Expr::Product(vec![
        Expr::Coeff(Coefficient {
            constant: Rational::frac(-1, 2),
            numer: vec![],
            denom: vec![PochFactor::new("(2alpha + 1)_1", &two_alpha + Rational::one(), 1)],
        }),
        Expr::Power(1),
        Expr::hyp(
            vec![alpha + Rational::one()],
            vec![
                lower("alpha + 3/2", alpha + Rational::frac(3, 2)),
                lower("2alpha + 1", &two_alpha + Rational::one()),
            ],
            square(4),
        ),
    ]);
    let rhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Plus, half: false },
        Expr::Sum(vec![preece_f12(alpha), correction]),
    ]);
    (lhs, rhs)
}

/// `1F1(alpha; 2alpha; x) 1F1(alpha; 2alpha-1; x)
///   = e^x {1F2(alpha; alpha+1/2, 2alpha-1; x^2/4)
///          + x/(2(2alpha-1)) 1F2(alpha; alpha+1/2, 2alpha; x^2/4)}`
pub fn rathie_minus(alpha: &Rational) -> (Expr, Expr) {
    let two_alpha = alpha * two();
    let lhs = Expr::Product(vec![
        f11_double(alpha, "alpha", at(1)),
        Expr::hyp(
            vec![alpha.clone()],
            vec![lower("2alpha - 1", &two_alpha - Rational::one())],
            at(1),
        ),
    ]);
    let leading = Expr::hyp(
        vec![alpha.clone()],
        vec![
            lower("alpha + 1/2", alpha + half()),
            lower("2alpha - 1", &two_alpha - Rational::one()),
        ],
        square(4),
    );
    let correction = Expr::Product(vec![
        Expr::Coeff(Coefficient {
            constant: half(),
            numer: vec![],
            denom: vec![PochFactor::new("(2alpha - 1)_1", &two_alpha - Rational::one(), 1)],
        }),
        Expr::Power(1),
        preece_f12(alpha),
    ]);
    let rhs = Expr::Product(vec![
        Expr::Exp { sign: Sign::Plus, half: false },
        Expr::Sum(vec![leading, correction]),
    ]);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    fn agree(pair: (Expr, Expr), cap: usize) {
        let (lhs, rhs) = pair;
        assert_eq!(lhs.to_series(cap).unwrap(), rhs.to_series(cap).unwrap());
    }

    #[test]
    fn kummer_first_trivial_cases() {
        let beta = q("5/4");
        let (lhs, rhs) = kummer_first(&beta, &beta);
        assert_eq!(lhs.to_series(10).unwrap(), crate::series::TruncatedSeries::one(10));
        assert_eq!(rhs.to_series(10).unwrap(), crate::series::TruncatedSeries::one(10));
        agree(kummer_first(&q("0"), &beta), 10);
        agree(kummer_first(&q("1/3"), &beta), 40);
    }

    #[test]
    fn kummer_second_forms() {
        let (_, rhs) = kummer_second(&q("3/7"));
        let s = rhs.to_series(40).unwrap();
        assert!(s.coeffs().iter().skip(1).step_by(2).all(Rational::is_zero));
        agree(kummer_second(&q("3/7")), 40);
        agree(kummer_second_alt(&q("3/7")), 40);
        let (lhs, rhs) = kummer_second_alt(&q("3/7"));
        assert!(lhs.to_series(0).unwrap().coeff(0).is_one());
        assert!(rhs.to_series(0).unwrap().coeff(0).is_one());
    }

    #[test]
    fn preece_and_bailey_forms() {
        let (alpha, beta) = (q("1/3"), q("2/5"));
        let (lhs, _) = preece(&alpha);
        assert!(lhs.to_series(30).unwrap().coeffs().iter().skip(1).step_by(2).all(Rational::is_zero));
        agree(preece(&alpha), 30);
        agree(bailey(&alpha, &beta), 30);
        agree(preece_exp(&alpha), 30);
        agree(bailey_exp(&alpha, &beta), 30);
        // beta = alpha collapses the 2F3 onto the 1F2
        assert_eq!(
            bailey(&alpha, &alpha).1.to_series(30).unwrap(),
            preece(&alpha).1.to_series(30).unwrap()
        );
    }

    #[test]
    fn rathie_forms() {
        for alpha in [q("3/7"), q("2/5")] {
            agree(rathie_plus(&alpha), 30);
            agree(rathie_minus(&alpha), 30);
        }
    }

    #[test]
    fn bailey_product_symmetric_case() {
        agree(bailey_product(&q("1"), &q("1")), 12);
        agree(bailey_product(&q("3/7"), &q("-2/5")), 20);
    }
}
