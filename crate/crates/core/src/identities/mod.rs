//! Identity constructors: one left/right pair per catalogued identity.

mod catalog;
mod sums;
mod theorem;
mod transforms;

pub use catalog::{default_cap, IdentityId, IdentityParams, ParamUse, Variant};
pub use sums::{gauss_second_float, gauss_terminating, watson_float, UNIT_ARGUMENT_MAX_TERMS};
pub use theorem::{
    expand_minus, expand_minus_expr, expand_minus_lhs_expr, expand_plus, expand_plus_expr,
    expand_plus_lhs_expr, special_case_lhs_expr, special_case_rhs, special_case_rhs_expr,
    theorem_lhs, theorem_lhs_expr, theorem_rhs, theorem_rhs_expr,
};
pub use transforms::{
    bailey, bailey_exp, bailey_product, kummer_first, kummer_second, kummer_second_alt, preece,
    preece_exp, rathie_minus, rathie_plus,
};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::expr::Expr;
use crate::verify::{verify_identity, VerifyOptions, VerifyReport};

/// Left and right sides of a series identity.
///
/// The classical sums (1.3, 1.4, 1.8) are scalar statements and have no
/// series form.
pub fn sides(id: IdentityId, params: &IdentityParams) -> Result<(Expr, Expr)> {
    use IdentityId::*;
    let IdentityParams { alpha, beta, i, j, .. } = params;
    let pair = match id {
        Kummer1 => kummer_first(alpha, beta),
        Kummer2 => kummer_second(alpha),
        Kummer2Alt => kummer_second_alt(alpha),
        Preece => preece(alpha),
        Bailey => bailey(alpha, beta),
        PreeceExp => preece_exp(alpha),
        BaileyExp => bailey_exp(alpha, beta),
        BaileyProduct => bailey_product(alpha, beta),
        RathiePlus => rathie_plus(alpha),
        RathieMinus => rathie_minus(alpha),
        ExpandPlus => (expand_plus_lhs_expr(alpha, *i), expand_plus_expr(alpha, *i)),
        ExpandMinus => (expand_minus_lhs_expr(alpha, *i), expand_minus_expr(alpha, *i)),
        ThmPP | ThmMM | ThmPM => {
            let variant = theorem_variant(id).expect("theorem id");
            (theorem_lhs_expr(variant, params), theorem_rhs_expr(variant, params))
        }
        SpecialPP | SpecialMM | SpecialPM => {
            let variant = theorem_variant(id).expect("special id");
            (
                special_case_lhs_expr(variant, alpha, *i, *j),
                special_case_rhs_expr(variant, alpha, *i, *j, params.printed_form),
            )
        }
        GaussTerminating | GaussSecondFloat | WatsonFloat => {
            return Err(Error::Domain(format!("identity {id} is a scalar summation, not a series identity")))
        }
    };
    Ok(pair)
}

/// The sign pattern of a theorem or special-case identity.
pub fn theorem_variant(id: IdentityId) -> Option<Variant> {
    match id {
        IdentityId::ThmPP | IdentityId::SpecialPP => Some(Variant::PP),
        IdentityId::ThmMM | IdentityId::SpecialMM => Some(Variant::MM),
        IdentityId::ThmPM | IdentityId::SpecialPM => Some(Variant::PM),
        _ => None,
    }
}

fn check(id: IdentityId, params: IdentityParams) -> VerifyReport {
    verify_identity(id, &params, &VerifyOptions::default())
}

pub fn kummer_first_check(alpha: &Rational, beta: &Rational, cap: usize) -> VerifyReport {
    check(
        IdentityId::Kummer1,
        IdentityParams::new(alpha.clone(), beta.clone(), 0, 0).with_cap(cap),
    )
}

pub fn kummer_second_check(alpha: &Rational, cap: usize) -> VerifyReport {
    check(IdentityId::Kummer2, IdentityParams::single(alpha.clone()).with_cap(cap))
}

pub fn kummer_second_alt_check(alpha: &Rational, cap: usize) -> VerifyReport {
    check(IdentityId::Kummer2Alt, IdentityParams::single(alpha.clone()).with_cap(cap))
}

/// Preece and Bailey identities in the `±x` and `e^x` forms.
pub fn preece_bailey_checks(alpha: &Rational, beta: &Rational, cap: usize) -> Vec<VerifyReport> {
    let params = IdentityParams::new(alpha.clone(), beta.clone(), 0, 0).with_cap(cap);
    [
        IdentityId::Preece,
        IdentityId::Bailey,
        IdentityId::PreeceExp,
        IdentityId::BaileyExp,
    ]
    .into_iter()
    .map(|id| check(id, params.clone()))
    .collect()
}

pub fn rathie_contiguous_checks(alpha: &Rational, cap: usize) -> Vec<VerifyReport> {
    let params = IdentityParams::single(alpha.clone()).with_cap(cap);
    [IdentityId::RathiePlus, IdentityId::RathieMinus]
        .into_iter()
        .map(|id| check(id, params.clone()))
        .collect()
}

/// Terminating Gauss, Gauss second and Watson sums at `(a, b, c)`.
///
/// Points outside a theorem's hypotheses come back as inadmissible reports.
pub fn classical_sum_checks(a: &Rational, b: &Rational, c: &Rational, tol: f64) -> Vec<VerifyReport> {
    let params = IdentityParams::new(a.clone(), b.clone(), 0, 0)
        .with_cap(0)
        .with_c(c.clone());
    let options = VerifyOptions {
        tol,
        ..VerifyOptions::default()
    };
    [
        IdentityId::GaussTerminating,
        IdentityId::GaussSecondFloat,
        IdentityId::WatsonFloat,
    ]
    .into_iter()
    .map(|id| verify_identity(id, &params, &options))
    .collect()
}
