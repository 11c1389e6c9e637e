//! Gaussian quadrature rules for the three measures underlying the
//! deformed-transform computations: t^λ e^{−t} dt on (0,∞),
//! (1−t²)^{ν−1/2} dt on (−1,1), and the radial measure
//! e^{−(2/a)rᵃ} r^{2m+2⟨k⟩+N+a−3} dr on (0,∞).

mod params;
mod rule;

pub use params::DeformParams;
pub use rule::{gauss_gegenbauer, gauss_laguerre, radial_rule, MeasureTag, QuadRule};

use kaf_specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadError {
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("domain error: {0}")]
    Domain(String),
}

impl QuadError {
    pub fn domain(msg: impl Into<String>) -> Self {
        QuadError::Domain(msg.into())
    }
}

/// Default radial node count used by higher-level modules.
pub const DEFAULT_RADIAL_NODES: usize = 64;
/// Default angular node count used by higher-level modules.
pub const DEFAULT_ANGULAR_NODES: usize = 48;
