//! Exact arithmetic: arbitrary-precision rationals and elements of biquadratic fields.
//!
//! [`AlgNum`] holds `a + b*sqrt(k1) + c*sqrt(k2) + d*sqrt(m)` with rational coefficients and
//! squarefree integer radicands. Zero testing is structural; signs are certified by
//! refining rational enclosures of the radicals until the sign is settled.

mod algnum;
mod approx;
mod radicand;
mod rational;

pub use algnum::AlgNum;
pub use approx::Enclosure;
pub use radicand::{square_decompose, Radicand};
pub use rational::{ratio, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("result would need a third independent square root")]
    RadicandOverflow,
    #[error("square root of negative value {0}")]
    NegativeRadicand(String),
    #[error("square root of irrational value {0} is not representable")]
    NestedRadical(String),
    #[error("invalid numeric literal {0:?}")]
    InvalidLiteral(String),
    #[error("radicand {0} is not a squarefree integer >= 2")]
    InvalidRadicand(String),
    #[error("nonzero coefficient on an absent radicand")]
    MissingRadicand,
}

impl ExactError {
    /// Stable machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            ExactError::DivisionByZero => "DIVISION_BY_ZERO",
            ExactError::RadicandOverflow => "RADICAND_OVERFLOW",
            ExactError::NegativeRadicand(_) => "NEGATIVE_RADICAND",
            ExactError::NestedRadical(_) => "NESTED_RADICAL",
            ExactError::InvalidLiteral(_) => "INVALID_LITERAL",
            ExactError::InvalidRadicand(_) => "INVALID_RADICAND",
            ExactError::MissingRadicand => "MISSING_RADICAND",
        }
    }
}
