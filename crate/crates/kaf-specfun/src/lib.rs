//! Scalar special functions for the deformed Laguerre/Fourier machinery:
//! Gamma and Pochhammer, generalized Laguerre polynomials, Gegenbauer
//! polynomials and the Gegenbauer transform, normalized Bessel functions
//! of complex argument, and the four-variable Bessel–Gegenbauer series.
//!
//! Everything here is a pure function of its arguments; an internal
//! quadrature-rule cache is the only (lock-guarded) shared state.

pub mod bessel;
pub mod exact;
pub mod gamma;
pub mod gauss;
pub mod gegenbauer;
pub mod laguerre;
pub mod series;

mod error;
mod types;

pub use error::SpecFunError;
pub use types::{PolynomialCoeffs, SeriesResult};

/// Default scalar type used by the concrete (non-generic) entry points.
pub type Real = f64;
/// Default complex scalar.
pub type Cplx = num_complex::Complex<f64>;

/// Absolute tolerance at which infinite series are truncated.
pub const SERIES_TOL: f64 = 1e-12;
/// Hard cap on series terms; exceeding it is an error, never a silent truncation.
pub const SERIES_MAX_TERMS: usize = 10_000;
