//! Hirotaka's two-circle figure, its claims, and the converse over general circle pairs.

mod forward;
pub mod report;
mod reverse;
pub mod sampling;
mod sweep;

use thiserror::Error;

use crate::geom::GeomError;

pub use forward::{
    construct_forward, homothety_transport_check, tangent_length_check, verify_forward, ClaimReport,
    ForwardConfig, NamedLines, NamedPoints,
};
pub use reverse::{
    collinear_quadruples, collinearity_check, criterion_check, criterion_check_squared, equivalence_check,
    make_pair, make_pair_squared, parallel_chords_check, perpendicularity_check, CirclePair,
    EquivalenceReport,
};
pub use sampling::{criterion_solutions, pell_triples, Lcg64, Triple};
pub use sweep::{reverse_failure, sweep, SweepMode, SweepSummary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HirotakaError {
    #[error("radii must be positive")]
    NonpositiveRadius,
    #[error("equal radii make the two circles touch")]
    EqualRadiiDegenerate,
    #[error("radii and center distance must be positive")]
    NonpositiveInput,
    #[error("circles are not separate: need d > r1 + r2")]
    NotSeparate,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

impl HirotakaError {
    pub fn code(&self) -> &'static str {
        match self {
            HirotakaError::NonpositiveRadius => "NONPOSITIVE_RADIUS",
            HirotakaError::EqualRadiiDegenerate => "EQUAL_RADII_DEGENERATE",
            HirotakaError::NonpositiveInput => "NONPOSITIVE_INPUT",
            HirotakaError::NotSeparate => "NOT_SEPARATE",
            HirotakaError::Geom(e) => e.code(),
        }
    }
}
