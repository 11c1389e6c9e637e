//! Rational Dunkl apparatus restricted to the Coxeter group ℤ₂ᴺ:
//! weights, Dunkl operators and Laplacian (exact polynomial arithmetic),
//! k-harmonic decomposition, the rank-one intertwining operator, and the
//! Funk–Hecke formula in its supported scopes.

mod harmonic;
mod intertwiner;
mod ops;
mod poly;
mod sphere;

pub use harmonic::harmonic_basis;
pub use intertwiner::{intertwiner_rank1, rank1_monomial_scale, vtilde_rank1, vtilde_rank1_profile};
pub use ops::{
    commutator_checks, dunkl_apply, dunkl_apply_with, dunkl_laplacian, dunkl_laplacian_with,
    euler_apply, CheckReport,
};
pub use poly::{Coeff, PolyND};
pub use sphere::{
    c_ka, d_k, funk_hecke_check, sphere_inner_product, sphere_monomial_integral,
    sphere_quadrature, SpherePoint,
};

pub use kaf_quadrature::DeformParams;

use kaf_quadrature::QuadError;
use kaf_specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DunklError {
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error("domain error: {0}")]
    Domain(String),
}

impl DunklError {
    pub fn domain(msg: impl Into<String>) -> Self {
        DunklError::Domain(msg.into())
    }
}

/// ϑ_{k,a}(x) = ‖x‖^{a−2} ∏ |xᵢ|^{2kᵢ}.
pub fn weight(x: &[f64], params: &DeformParams) -> Result<f64, DunklError> {
    if x.len() != params.dim() {
        return Err(DunklError::domain(format!(
            "point has dimension {}, params expect {}",
            x.len(),
            params.dim()
        )));
    }
    let r2: f64 = x.iter().map(|&xi| xi * xi).sum();
    let a = params.a();
    if r2 == 0.0 && a < 2.0 {
        return Err(DunklError::domain("weight is singular at the origin for a < 2"));
    }
    let mut v = r2.powf((a - 2.0) / 2.0);
    for (&xi, &ki) in x.iter().zip(params.k()) {
        if ki > 0.0 {
            if xi == 0.0 {
                return Ok(0.0);
            }
            v *= xi.abs().powf(2.0 * ki);
        }
    }
    Ok(v)
}

/// The reflection-group part ϑ_k(x) = ∏ |xᵢ|^{2kᵢ} alone.
pub fn weight_k(x: &[f64], params: &DeformParams) -> Result<f64, DunklError> {
    if x.len() != params.dim() {
        return Err(DunklError::domain(format!(
            "point has dimension {}, params expect {}",
            x.len(),
            params.dim()
        )));
    }
    let mut v = 1.0;
    for (&xi, &ki) in x.iter().zip(params.k()) {
        if ki > 0.0 {
            if xi == 0.0 {
                return Ok(0.0);
            }
            v *= xi.abs().powf(2.0 * ki);
        }
    }
    Ok(v)
}
