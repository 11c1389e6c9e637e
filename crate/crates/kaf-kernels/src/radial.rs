//! The radial sector kernel
//!   Λ^{(m)}(r,s;z) = (rs)^m a^{−λ} sinh(z)^{−(λ+1)}
//!                    e^{−(1/a)(rᵃ+sᵃ)coth z} Ĩ_λ((2/a)(rs)^{a/2}/sinh z)
//! with λ = λ_{k,a,m}, which sums the sector eigenfunction series
//! Σ_ℓ f_{ℓ,m}(r) f_{ℓ,m}(s) e^{−z(2ℓ+λ+1)}. On the imaginary axis
//! z = iμ the same expression reduces (via Ĩ_λ(−iw) = J̃_λ(w)) to the
//! oscillatory J-Bessel form.

use crate::zfun::{alpha_beta, log_sinh};
use crate::{Cplx, KernelError, KernelEval, Provenance, BOUND_SLACK};
use kaf_sl2::{phi_basis, RadialSector};
use kaf_specfun::bessel::bessel_i_tilde;
use kaf_specfun::gamma::ln_gamma;

/// C(k,a,m;z) = 1 / (a^λ Γ(λ+1) |sinh z|^{λ+1}): the constant in the
/// pointwise modulus bound for Λ^{(m)}.
pub fn c_bound(sector: &RadialSector, z: Cplx) -> Result<f64, KernelError> {
    let lambda = sector.lambda();
    let a = sector.params().a();
    let abs_sinh = z.sinh().norm();
    if abs_sinh < 1e-12 {
        return Err(KernelError::pole(format!(
            "sinh z vanishes at z = {z} (pole set i*pi*Z)"
        )));
    }
    Ok((-lambda * a.ln() - ln_gamma(lambda + 1.0).map_err(KernelError::from)?
        - (lambda + 1.0) * abs_sinh.ln())
    .exp())
}

fn check_bound(
    value: Cplx,
    r: f64,
    s: f64,
    z: Cplx,
    sector: &RadialSector,
) -> Result<bool, KernelError> {
    let (alpha, beta) = alpha_beta(z)?;
    let a = sector.params().a();
    let m = sector.m() as f64;
    let bound = c_bound(sector, z)?
        * (r * s).powf(m)
        * (-(r.powf(a) + s.powf(a)) / a * alpha * (1.0 - beta.abs())).exp();
    Ok(value.norm() <= bound * BOUND_SLACK)
}

/// Λ^{(m)}(r,s;z) by the closed Bessel formula, valid on the closed right
/// half-plane minus iπℤ. The branch of sinh(z)^{−(λ+1)} is the
/// continuation from z real positive (see [`log_sinh`]); on the axis this
/// is the phase e^{∓iπ(λ+1)/2}|sin μ|^{−(λ+1)} of the J-Bessel form.
pub fn lambda_m(r: f64, s: f64, z: Cplx, sector: &RadialSector) -> Result<KernelEval, KernelError> {
    if !(r > 0.0 && s > 0.0) {
        return Err(KernelError::domain(format!(
            "radial arguments must be positive, got r = {r}, s = {s}"
        )));
    }
    let a = sector.params().a();
    let lambda = sector.lambda();
    let m = sector.m() as f64;
    let ls = log_sinh(z)?;
    let sh = z.sinh();
    let coth = z.cosh() / sh;
    let w = (r * s).powf(a / 2.0) * 2.0 / a / sh;
    let value = bessel_i_tilde(lambda, w).map_err(KernelError::from)?
        * ((r * s).powf(m) * a.powf(-lambda))
        * (-(r.powf(a) + s.powf(a)) / a * coth).exp()
        * (-(lambda + 1.0) * ls).exp();
    let bound_ok = check_bound(value, r, s, z, sector)?;
    Ok(KernelEval { value, provenance: Provenance::ClosedForm, bound_ok })
}

/// The defining eigenfunction series Σ_{ℓ<n} f_{ℓ,m}(r)f_{ℓ,m}(s)
/// e^{−z(2ℓ+λ+1)}, which converges only for Re z > 0. Used as an
/// independent cross-check of the closed form.
pub fn lambda_m_series(
    r: f64,
    s: f64,
    z: Cplx,
    sector: &RadialSector,
    n_terms: usize,
) -> Result<KernelEval, KernelError> {
    if !(z.re > 0.0) {
        return Err(KernelError::domain(format!(
            "the eigenfunction series converges only for Re z > 0, got z = {z}"
        )));
    }
    let lambda = sector.lambda();
    let mut value = Cplx::new(0.0, 0.0);
    for ell in 0..n_terms {
        let fr = phi_basis(ell, sector, r).map_err(KernelError::from)?;
        let fs = phi_basis(ell, sector, s).map_err(KernelError::from)?;
        value += (-z * (2.0 * ell as f64 + lambda + 1.0)).exp() * (fr * fs);
    }
    let bound_ok = check_bound(value, r, s, z, sector)?;
    Ok(KernelEval { value, provenance: Provenance::Series, bound_ok })
}
