//! Exact verification of product identities for confluent hypergeometric
//! functions.
//!
//! Each identity is built twice, as a raw Cauchy product of ₁F₁ series on
//! one side and as the structured finite sum of ₂F₃ (or ₀F₁, ₁F₂) series on
//! the other, and the two truncated power series are compared coefficient by
//! coefficient in exact rational arithmetic.
//!
//! - [`exact`]: [`Rational`], Pochhammer symbols, factorials
//! - [`series`]: [`TruncatedSeries`] and the ring operations
//! - [`hyper`]: `pFq` coefficients and float summation
//! - [`identities`]: the identity catalog and constructors
//! - [`verify`]: admissibility, comparison, reports and sweeps
//! - [`cli`]: the `bailey` command-line front end

pub mod cli;
pub mod error;
pub mod exact;
pub mod expr;
pub mod hyper;
pub mod identities;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{factorial, parse_rational, pochhammer, Rational};
pub use hyper::{bailey_product_series, pfq_eval_float, pfq_series, HypSpec};
pub use identities::{IdentityId, IdentityParams, Variant};
pub use series::{exp_series, Sign, TruncatedSeries};
pub use verify::{check_admissible, sweep, verify_identity, PointTemplate, Status, VerifyOptions, VerifyReport};
