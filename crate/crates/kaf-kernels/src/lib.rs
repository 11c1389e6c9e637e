//! Integral kernels of the deformed Hermite semigroup: the radial sector
//! kernels Λ^{(m)}(r,s;z), the angular profile h(r,s;z;t), closed-form full
//! kernels Λ(x,y;z) in the supported scopes, the sphere Poisson kernel, and
//! quadrature checks of the semigroup law and the Weber integrals.

mod error;

pub mod checks;
pub mod full;
pub mod profile;
pub mod radial;
pub mod zfun;

pub use checks::{
    semigroup_kernel_law, weber_check, weber_laguerre_laplace, weber_second_exponential,
};
pub use error::KernelError;
pub use full::{lambda_full, lambda_full_sum, poisson_kernel, SectorSumEval};
pub use profile::h_profile;
pub use radial::{c_bound, lambda_m, lambda_m_series};
pub use zfun::{alpha_beta, log_sinh};

pub use kaf_quadrature::DeformParams;
pub use kaf_sl2::RadialSector;
pub use kaf_specfun::Cplx;

/// How a kernel value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Series,
    Quadrature,
}

/// A kernel value, its computational route, and whether the pointwise
/// modulus bound |Λ| ≤ C(k,a,m;z)(rs)^m e^{−(1/a)(rᵃ+sᵃ)α(1−|β|)} held at
/// this evaluation.
#[derive(Debug, Clone, Copy)]
pub struct KernelEval {
    pub value: Cplx,
    pub provenance: Provenance,
    pub bound_ok: bool,
}

/// Multiplicative slack applied to analytic bounds before flagging a
/// violation, to absorb floating-point rounding.
pub(crate) const BOUND_SLACK: f64 = 1.0 + 1e-9;
