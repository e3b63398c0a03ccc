use thiserror::Error;

/// Errors raised by the exact and floating-point evaluation paths.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed rational literal: unexpected token `{token}`")]
    Parse { token: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A lower parameter or denominator Pochhammer symbol vanishes.
    #[error("degenerate parameter {expr} at index {index}")]
    DegenerateParameter { expr: String, index: usize },

    #[error("series did not converge after {terms} terms (last term magnitude {last_term:e})")]
    NotConverged { terms: usize, last_term: f64 },

    #[error("coefficient of degree {degree} does not fit in a float")]
    Overflow { degree: usize },

    /// A classical summation was asked for outside its convergence region.
    #[error("refused: condition {condition} is violated")]
    Refused { condition: String },
}

pub type Result<T> = std::result::Result<T, Error>;
